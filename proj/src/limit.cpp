#include "laver/limit.hpp"

#include "laver/error.hpp"

namespace laver {

namespace {

Elem eval_rec(const Term& t, const LaverTable& tab) {
  switch (t->kind) {
    case NodeKind::One:
      return tab.level() == 0 ? 0 : 1;
    case NodeKind::Zero:
      return 0;
    case NodeKind::Apply:
      return tab.apply(eval_rec(t->left, tab), eval_rec(t->right, tab));
    case NodeKind::Compose:
      return tab.compose(eval_rec(t->left, tab), eval_rec(t->right, tab));
  }
  throw DomainError("unreachable term kind");
}

// p_n(1) is a power of two; return its exponent.
int row_one_period_log2(int n) {
  auto tab = TableCache::instance().get(n);
  std::uint32_t p = n == 0 ? 1 : tab->period(1);
  int e = 0;
  while ((std::uint32_t{1} << e) < p) ++e;
  return e;
}

}  // namespace

Elem eval_level(const Term& t, int n) {
  auto tab = TableCache::instance().get(n);
  return eval_rec(t, *tab);
}

LevelProfile eval_profile(const Term& t, int cap) {
  if (cap < 0) throw DomainError("negative level cap");
  LevelProfile p;
  p.term = t;
  p.cap = cap;
  p.values.reserve(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    Elem v = eval_level(t, n);
    if (n > 0) {
      Elem prev = p.values.back();
      if (v != prev && v != prev + (Elem{1} << (n - 1)))
        throw Error("level profile violates coherence");
      if (prev != 0 && v == 0) throw Error("nonzero value vanished");
    }
    p.values.push_back(v);
  }
  return p;
}

SignatureResult signature(const Term& t, int cap) {
  if (t->kind == NodeKind::Zero) throw DomainError("zero has no signature");
  for (int n = 0; n <= cap; ++n)
    if (eval_level(t, n) != 0) return {true, n - 1};
  return {false, cap};
}

SignatureResult freeness_probe(std::uint64_t k, int cap) {
  if (k == 0) throw DomainError("freeness probe requires k >= 1");
  // p_n(1) divides k iff k is a multiple of that power of two.
  for (int n = 0; n <= cap; ++n) {
    int e = row_one_period_log2(n);
    bool divides = e < 64 && k % (std::uint64_t{1} << e) == 0;
    if (!divides) return {true, n};
  }
  return {false, cap};
}

SignatureResult herringbone_probe(int k, int cap) {
  if (k < 0) throw DomainError("herringbone probe requires k >= 0");
  // s(u_0) = s(1) = 0; thereafter s(u_{j+1}) = s(1.2^{s(u_j)}), and
  // s(1.m) is one less than the least level where 1*m is nonzero.
  int s = 0;
  for (int j = 0; j < k; ++j) {
    if (s >= 63) return {false, cap};
    SignatureResult r = freeness_probe(std::uint64_t{1} << s, cap);
    if (!r.known) return {false, cap};
    s = r.level - 1;
  }
  return {true, s};
}

EquivInfResult equiv_inf(const Term& a, const Term& b, int cap) {
  for (int n = 0; n <= cap; ++n)
    if (eval_level(a, n) != eval_level(b, n)) return {true, n};
  return {false, cap};
}

}  // namespace laver
