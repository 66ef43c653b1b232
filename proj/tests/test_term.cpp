#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laver/term.hpp"
#include "laver/witness.hpp"
#include "oracle.hpp"

using namespace laver;

namespace {

// Uniform-ish random A-term with exactly `leaves` leaves.
Term random_a_term(std::mt19937_64& rng, int leaves) {
  if (leaves == 1) return one();
  std::uniform_int_distribution<int> d(1, leaves - 1);
  int l = d(rng);
  return apply(random_a_term(rng, l), random_a_term(rng, leaves - l));
}

}  // namespace

TEST_CASE("parser and renderer round trip") {
  for (const char* s : {"1", "0", "1*1", "(1*1)*1", "1*(1*1)", "1 o 1", "(1*1) o (1 o 0)",
                        "3", "2*2", "1*2 o 3"}) {
    Term t = parse_term(s);
    CHECK(equal(parse_term(render(t)), t));
  }
  CHECK(equal(parse_term("3"), apply(apply(one(), one()), one())));
  // '*' binds tighter than 'o', both left-associative.
  CHECK(equal(parse_term("1*1 o 1*1 o 1"),
              compose(compose(apply(one(), one()), apply(one(), one())), one())));
  CHECK(equal(parse_term("1*1*1"), apply(apply(one(), one()), one())));
  for (const char* bad : {"", "1 1", "*1", "1*", "(1", "1)", "oo", "1 o", "x", "1**1"})
    CHECK_THROWS_AS(parse_term(bad), FormatError);
}

TEST_CASE("depth, leaves, basic families") {
  CHECK(depth(one()) == 0);
  CHECK(depth(parse_term("1*1")) == 1);
  CHECK(depth(parse_term("1*(1*1)")) == 2);
  CHECK(depth(herringbone(3)) == 3);
  CHECK(herringbone(3)->leaves == 4);
  CHECK(full_word(3)->leaves == 8);
  CHECK(depth(full_word(3)) == 3);
  CHECK(equal(herringbone(1), full_word(1)));
  CHECK(equal(integer_word(4), parse_term("((1*1)*1)*1")));
  CHECK(is_a_term(parse_term("1*1")));
  CHECK_FALSE(is_a_term(parse_term("1 o 1")));
  CHECK(is_p_term(parse_term("1 o 1")));
  CHECK_FALSE(is_p_term(parse_term("0")));
}

TEST_CASE("single rewrite steps") {
  Term t = parse_term("1*(1*1)");
  auto rs = ld_redexes(t);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].empty());
  Term u = ld_step(t, rs[0], StepDir::Expand);
  CHECK(render(u) == "((1*1)*(1*1))");
  CHECK(equal(ld_step(u, rs[0], StepDir::Contract), t));
  // Contract requires the two copies to agree.
  Term v = parse_term("(1*1)*((1*1)*1)");
  CHECK_THROWS_AS(ld_step(v, {}, StepDir::Contract), RewriteError);
  CHECK_THROWS_AS(ld_step(t, {Dir::Left}, StepDir::Expand), RewriteError);
}

TEST_CASE("otimes and partial recursions") {
  Term a = parse_term("1*1");
  CHECK(render(otimes(a, one())) == "((1*1)*1)");
  CHECK(equal(otimes(a, parse_term("1*1")), parse_term("((1*1)*1)*((1*1)*1)")));
  CHECK(equal(partial(one()), one()));
  CHECK(equal(partial(parse_term("1*1")), parse_term("1*1")));
  CHECK(equal(partial(parse_term("(1*1)*1")), parse_term("(1*1)*1")));
  CHECK(equal(partial(parse_term("1*(1*1)")), parse_term("(1*1)*(1*1)")));
}

TEST_CASE("witness: ab derives to a otimes b") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Term a = random_a_term(rng, 1 + trial % 4);
    Term b = random_a_term(rng, 1 + (trial / 4) % 5);
    Fuel fuel;
    std::vector<Step> steps;
    dist_steps(a, b, {}, steps, fuel);
    CHECK(equal(replay_steps(apply(a, b), steps), otimes(a, b)));
  }
}

TEST_CASE("witness: a derives to partial(a)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    Term a = random_a_term(rng, 1 + trial % 7);
    Derivation d = witness_expand(a);
    CHECK(equal(d.end, partial(a)));
    replay(d);  // throws on any invalid step
    CHECK(d.expand_only());
  }
}

TEST_CASE("witness: one-step expansions absorb into partial") {
  std::mt19937_64 rng(13);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    Term a = random_a_term(rng, 3 + trial % 5);
    auto rs = ld_redexes(a);
    if (rs.empty()) continue;
    for (const Position& p : rs) {
      Term b = ld_step(a, p, StepDir::Expand);
      Derivation d = witness_absorb(a, b);
      CHECK(equal(d.start, b));
      CHECK(equal(d.end, partial(a)));
      replay(d);
      ++done;
    }
  }
  CHECK(done >= 60);
  CHECK_THROWS_AS(witness_absorb(one(), parse_term("1*1")), DomainError);
}

TEST_CASE("witness: lifting a derivation") {
  std::mt19937_64 rng(17);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    Term a = random_a_term(rng, 3 + trial % 4);
    // Random short Expand-only derivation from a.
    Derivation d;
    d.start = a;
    Term cur = a;
    for (int s = 0; s < 2; ++s) {
      auto rs = ld_redexes(cur);
      if (rs.empty()) break;
      Position p = rs[rng() % rs.size()];
      d.steps.push_back({p, StepDir::Expand});
      cur = ld_step(cur, p, StepDir::Expand);
    }
    if (d.steps.empty()) continue;
    d.end = cur;
    Derivation lifted = lift_derivation(d);
    CHECK(equal(lifted.start, partial(a)));
    CHECK(equal(lifted.end, partial(cur)));
    replay(lifted);
    ++done;
  }
  CHECK(done >= 40);
}

TEST_CASE("fuel exhaustion is reported, not mis-answered") {
  Fuel tiny;
  tiny.remaining = 3;
  CHECK_THROWS_AS(witness_expand(full_word(4), tiny), FuelError);
}
