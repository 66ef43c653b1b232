// Independent reference implementations used only by tests.  Everything here
// is written the slow, obvious way so it can serve as an oracle for the
// library proper.
#pragma once

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "laver/term.hpp"

namespace oracle {

// Full multiplication table for level n, built by the defining double
// recursion with no row compression: t[a][b] with 0 standing for 2^n.
inline std::vector<std::vector<std::uint32_t>> full_table(unsigned n) {
  const std::uint32_t size = 1u << n;
  std::vector<std::vector<std::uint32_t>> t(size, std::vector<std::uint32_t>(size, 0));
  // Row 0 acts as 2^n: 0*b = b.
  for (std::uint32_t b = 0; b < size; ++b) t[0][b] = b;
  for (std::uint32_t a = size; a-- > 1;) {
    t[a][1 % size] = (a + 1) % size;
    for (std::uint32_t b = 1; b < size; ++b)
      t[a][(b + 1) % size] = t[t[a][b]][(a + 1) % size];
  }
  return t;
}

inline std::uint32_t ap(const std::vector<std::vector<std::uint32_t>>& t, std::uint32_t a,
                        std::uint32_t b) {
  return t[a][b];
}

inline std::uint32_t period(const std::vector<std::vector<std::uint32_t>>& t, std::uint32_t a) {
  const std::uint32_t size = t.size();
  for (std::uint32_t b = 1; b <= size; ++b)
    if (t[a][b % size] == 0) return b;
  return size;
}

// --- term-rewriting oracle -------------------------------------------------

// Canonical string key for a term (parenthesized), usable as a map key.
inline std::string key(const laver::Term& t) { return laver::render(t); }

// Breadth-first closure of a term's LD-equivalence class, exploring both
// Expand and Contract steps, capped by leaf count so it stays finite-ish.
inline std::set<std::string> ld_class(const laver::Term& start, std::uint64_t max_leaves,
                                      std::uint64_t max_terms,
                                      std::vector<laver::Term>* members = nullptr) {
  std::set<std::string> seen;
  std::queue<laver::Term> q;
  seen.insert(key(start));
  q.push(start);
  if (members) members->push_back(start);
  while (!q.empty() && seen.size() < max_terms) {
    laver::Term t = q.front();
    q.pop();
    for (const laver::Position& p : laver::ld_redexes(t)) {
      for (laver::StepDir d : {laver::StepDir::Expand, laver::StepDir::Contract}) {
        laver::Term u;
        try {
          u = laver::ld_step(t, p, d);
        } catch (const laver::RewriteError&) {
          continue;
        }
        if (u->leaves > max_leaves) continue;
        if (seen.insert(key(u)).second) {
          q.push(u);
          if (members) members->push_back(u);
        }
      }
    }
  }
  return seen;
}

// All iterated left subterms of t (proper ones), as rendered keys.
inline void left_spine_keys(const laver::Term& t, std::set<std::string>& out) {
  laver::Term cur = t;
  while (cur->kind == laver::NodeKind::Apply) {
    cur = cur->left;
    out.insert(key(cur));
  }
}

enum class Cmp { Less, Equiv, Greater, Unknown };

// Brute-force comparison: a <_LD b iff some member of b's class has a member
// of a's class as an iterated left subterm.  Only usable for tiny terms.
inline Cmp compare(const laver::Term& a, const laver::Term& b, std::uint64_t max_leaves = 12,
                   std::uint64_t max_terms = 20000) {
  std::vector<laver::Term> amem, bmem;
  std::set<std::string> ac = ld_class(a, max_leaves, max_terms, &amem);
  std::set<std::string> bc = ld_class(b, max_leaves, max_terms, &bmem);
  if (ac.count(key(b)) || bc.count(key(a))) return Cmp::Equiv;
  std::set<std::string> a_subs, b_subs;
  for (const laver::Term& t : bmem) left_spine_keys(t, b_subs);
  for (const laver::Term& t : amem) left_spine_keys(t, a_subs);
  for (const std::string& k : ac)
    if (b_subs.count(k)) return Cmp::Less;
  for (const std::string& k : bc)
    if (a_subs.count(k)) return Cmp::Greater;
  return Cmp::Unknown;
}

}  // namespace oracle
