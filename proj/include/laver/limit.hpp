#pragma once
// Level-wise evaluation of words in the limit algebras: the value [a]_n of a
// word at every finite level, signatures, and the freeness probes that search
// for a level where a word becomes nonzero.

#include <cstdint>
#include <vector>

#include "laver/table.hpp"
#include "laver/term.hpp"

namespace laver {

// Values of a word at levels 0..cap.  Adjacent levels cohere: values[n+1] is
// either values[n] or values[n] + 2^n, and once a value is nonzero it stays
// nonzero.  Both invariants are checked at construction.
struct LevelProfile {
  Term term;
  std::vector<Elem> values;  // values[n] = [term]_n
  int cap = 0;
};

// Outcome of a bounded search for a level.  No probe ever claims that a
// sought level does not exist; exhausting the cap yields Undecided.
struct SignatureResult {
  bool known = false;
  int level = 0;  // the found level when known, else the exhausted cap

  bool operator==(const SignatureResult&) const = default;
};

// [t]_n: the value of the word t at level n, using *_n, o_n, and the
// adjoined-zero rules 0.a = a, a.0 = 0, a o 0 = 0 o a = a (all of which the
// tables already satisfy at element 0).
Elem eval_level(const Term& t, int n);

// Values at every level up to cap, with the coherence invariants verified.
LevelProfile eval_profile(const Term& t, int cap);

// The signature s(t): the largest n with [t]_n = 0, provided some level
// up to cap is nonzero; Undecided(cap) otherwise.  t must not be the bare
// zero constant.
SignatureResult signature(const Term& t, int cap);

// Least n <= cap with [1.k]_n != 0, via the period shortcut:
// [1.k]_n != 0 iff p_n(1) does not divide k.  Requires k >= 1.
SignatureResult freeness_probe(std::uint64_t k, int cap);

// Signature of the tower word u_k (u_0 = 1, u_{j+1} = 1.u_j), computed
// iteratively via s(u_{j+1}) = s(1.2^{s(u_j)}) without materializing the
// word's profile.  Requires k >= 0.
SignatureResult herringbone_probe(int k, int cap);

// Least level distinguishing two words.
struct EquivInfResult {
  bool distinguished = false;
  int level = 0;  // distinguishing level when found, else the exhausted cap

  bool operator==(const EquivInfResult&) const = default;
};

EquivInfResult equiv_inf(const Term& a, const Term& b, int cap);

inline constexpr int kDefaultCap = 12;

}  // namespace laver
