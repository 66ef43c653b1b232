#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laver/vtrack.hpp"
#include "oracle.hpp"

using namespace laver;
using VE = VirtualEngine;

namespace {

Term random_a_term(std::mt19937_64& rng, int leaves) {
  if (leaves == 1) return one();
  std::uniform_int_distribution<int> d(1, leaves - 1);
  int l = d(rng);
  return apply(random_a_term(rng, l), random_a_term(rng, leaves - l));
}

// Reference: drive the tracked spine depth through a concrete step list with
// the single-step rule only.
std::uint64_t track_by_steps(const std::vector<Step>& steps, std::uint64_t d) {
  for (const Step& s : steps) {
    bool left = true;
    for (Dir x : s.pos) left = left && x == Dir::Left;
    if (left && s.pos.size() < d) ++d;
  }
  return d;
}

std::uint64_t spine_len(const Term& t) {
  std::uint64_t n = 0;
  for (Term c = t; c->kind == NodeKind::Apply; c = c->left) ++n;
  return n;
}

Term spine_at(Term t, std::uint64_t d) {
  for (; d > 0; --d) t = t->left;
  return t;
}

}  // namespace

TEST_CASE("virtual terms agree with concrete otimes/partial") {
  std::mt19937_64 rng(3);
  Fuel fuel;
  VE eng(fuel);
  for (int trial = 0; trial < 50; ++trial) {
    Term x = random_a_term(rng, 1 + trial % 6);
    Term y = random_a_term(rng, 1 + (trial / 6) % 4);
    Term px = partial(x);
    Term ox = otimes(x, y);
    CHECK(equal(eng.materialize(eng.partial(eng.intern(x))), px));
    CHECK(equal(eng.materialize(eng.otimes(eng.intern(x), eng.intern(y))), ox));
    CHECK(eng.leaves(eng.partial(eng.intern(x))) == px->leaves);
    CHECK(eng.spine(eng.partial(eng.intern(x))) == spine_len(px));
    CHECK(eng.spine(eng.otimes(eng.intern(x), eng.intern(y))) == spine_len(ox));
  }
}

TEST_CASE("measures of iterated partial powers stay exact") {
  Fuel fuel;
  VE eng(fuel);
  // Small enough to materialize and count directly.
  for (auto [k, p] : {std::pair{3, 2}, {2, 3}, {1, 4}}) {
    VE::VT v = eng.intern(herringbone(k));
    for (int i = 0; i < p; ++i) v = eng.partial(v);
    Term m = eng.materialize(v, 1 << 22);
    CHECK(eng.leaves(v) == m->leaves);
    CHECK(eng.spine(v) == spine_len(m));
  }
}

TEST_CASE("huge powers are measurable without materializing") {
  Fuel fuel{100'000'000};
  VE eng(fuel);
  VE::VT v = eng.intern(herringbone(3));
  for (int i = 0; i < 4; ++i) v = eng.partial(v);
  // Far beyond anything materializable, yet exactly measurable.
  CHECK(mpz_sizeinbase(eng.leaves(v).get_mpz_t(), 10) > 100000);
  // One power further the count itself stops fitting in memory; the engine
  // must refuse loudly instead of thrashing.
  CHECK_THROWS_AS(eng.leaves(eng.partial(v)), FuelError);
}

TEST_CASE("derivation combinators materialize to the concrete witnesses") {
  std::mt19937_64 rng(5);
  Fuel fuel;
  VE eng(fuel);
  for (int trial = 0; trial < 60; ++trial) {
    Term x = random_a_term(rng, 1 + trial % 6);
    Term y = random_a_term(rng, 1 + (trial / 3) % 4);

    // WE
    auto we_steps = eng.materialize_steps(eng.we(eng.intern(x)));
    CHECK(equal(replay_steps(x, we_steps), partial(x)));
    CHECK(equal(eng.materialize(eng.end(eng.we(eng.intern(x)))), partial(x)));

    // Dist
    auto d = eng.dist(eng.intern(x), eng.intern(y));
    CHECK(equal(replay_steps(apply(x, y), eng.materialize_steps(d)), otimes(x, y)));
  }
}

TEST_CASE("virtual lift of a step equals the concrete lifted derivation") {
  std::mt19937_64 rng(9);
  int done = 0;
  for (int trial = 0; trial < 300 && done < 50; ++trial) {
    Term x = random_a_term(rng, 3 + trial % 4);
    auto rs = ld_redexes(x);
    if (rs.empty()) continue;
    for (const Position& p : rs) {
      Fuel fuel;
      VE eng(fuel);
      Derivation single{x, {{p, StepDir::Expand}}, ld_step(x, p, StepDir::Expand)};
      Derivation conc = lift_derivation(single);
      auto virt = eng.materialize_steps(eng.lift(eng.step(eng.intern(x), p)));
      Term end1 = replay_steps(partial(x), virt);
      CHECK(equal(end1, conc.end));
      ++done;
    }
  }
  CHECK(done >= 50);
}

TEST_CASE("tracking matches step-by-step tracking on materialized derivations") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    Fuel fuel;
    VE eng(fuel);
    Term x = random_a_term(rng, 2 + trial % 5);
    Term y = random_a_term(rng, 1 + (trial / 5) % 4);

    std::vector<VE::VD> cases;
    cases.push_back(eng.we(eng.intern(x)));
    cases.push_back(eng.dist(eng.intern(x), eng.intern(y)));
    cases.push_back(eng.we(eng.partial(eng.intern(x))));
    for (const Position& p : ld_redexes(x)) {
      cases.push_back(eng.step(eng.intern(x), p));
      cases.push_back(eng.lift(eng.step(eng.intern(x), p)));
      cases.push_back(eng.lift(eng.lift(eng.step(eng.intern(x), p))));
    }
    for (VE::VD vd : cases) {
      auto steps = eng.materialize_steps(vd);
      mpz_class sp = eng.spine(eng.start(vd));
      for (mpz_class d0 = 1; d0 <= sp; ++d0) {
        mpz_class got = eng.track(vd, d0);
        CHECK(got == track_by_steps(steps, d0.get_ui()));
      }
    }
  }
}

TEST_CASE("tracked subterms stay in their equivalence class") {
  // After a witness derivation, the subterm found at the tracked depth of the
  // end word is LD-equivalent to the one we started from.
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    Fuel fuel;
    VE eng(fuel);
    Term x = random_a_term(rng, 2 + trial % 3);
    VE::VD vd = eng.we(eng.intern(x));
    Term endw = eng.materialize(eng.end(vd));
    std::uint64_t sp = spine_len(x);
    for (std::uint64_t d0 = 1; d0 <= sp; ++d0) {
      mpz_class dd = eng.track(vd, mpz_class(static_cast<unsigned long>(d0)));
      Term before = spine_at(x, d0);
      Term after = spine_at(endw, dd.get_ui());
      CHECK(oracle::compare(before, after) == oracle::Cmp::Equiv);
    }
  }
}

TEST_CASE("fuel starves the engine loudly") {
  Fuel fuel{40};
  VE eng(fuel);
  CHECK_THROWS_AS(
      [&] {
        VE::VT v = eng.intern(full_word(3));
        for (int i = 0; i < 6; ++i) v = eng.partial(v);
        return eng.leaves(v);
      }(),
      FuelError);
}
