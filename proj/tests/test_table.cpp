#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "laver/table.hpp"
#include "oracle.hpp"

using laver::LaverTable;

TEST_CASE("golden rows at levels 2 and 3") {
  LaverTable t2 = LaverTable::build(2);
  CHECK(t2.period(1) == 2);
  CHECK(t2.row(1)[0] == 2);
  CHECK(t2.row(1)[1] == 0);
  CHECK(t2.apply(2, 2) == 0);
  CHECK(t2.compose(1, 1) == 3);

  LaverTable t3 = LaverTable::build(3);
  const std::vector<std::vector<laver::Elem>> rows = {
      {}, {2, 4, 6, 0}, {3, 4, 7, 0}, {4, 0}, {5, 6, 7, 0}, {6, 0}, {7, 0}, {0}};
  for (laver::Elem a = 1; a < 8; ++a) {
    REQUIRE(t3.period(a) == rows[a].size());
    for (std::size_t i = 0; i < rows[a].size(); ++i) CHECK(t3.row(a)[i] == rows[a][i]);
  }
  CHECK(t3.apply(1, 3) == 6);
  CHECK(t3.compose(1, 2) == 5);
}

TEST_CASE("periods of 1 across levels") {
  const std::uint32_t expect[] = {1, 1, 2, 4, 4, 8, 8, 8, 8, 16};
  for (int n = 0; n <= 9; ++n) CHECK(LaverTable::build(n).period(1 % (1u << n)) == expect[n]);
}

TEST_CASE("matches the uncompressed reference table") {
  for (int n = 0; n <= 6; ++n) {
    LaverTable t = LaverTable::build(n);
    auto ref = oracle::full_table(n);
    for (laver::Elem a = 0; a < t.size(); ++a)
      for (laver::Elem b = 0; b < t.size(); ++b) {
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(t.apply(a, b) == oracle::ap(ref, a, b));
      }
    for (laver::Elem a = 0; a < t.size(); ++a)
      REQUIRE(t.period(a) == oracle::period(ref, a));
  }
}

TEST_CASE("period is a power of two and a*b is 0 or exceeds a") {
  LaverTable t = LaverTable::build(8);
  for (laver::Elem a = 0; a < t.size(); ++a) {
    std::uint32_t p = t.period(a);
    CHECK((p & (p - 1)) == 0);
    for (laver::Elem b = 0; b < t.size(); ++b) {
      laver::Elem v = t.apply(a, b);
      if (!(v == 0 || v > a || a == 0)) {
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(false);
      }
    }
  }
}

TEST_CASE("law verification holds exhaustively at small levels") {
  for (int n = 0; n <= 4; ++n) {
    LaverTable t = LaverTable::build(n);
    CHECK(verify_law(t, laver::Law::LD).holds);
    CHECK(verify_law(t, laver::Law::Sigma).holds);
  }
  LaverTable t4 = LaverTable::build(4);
  LaverTable t5 = LaverTable::build(5);
  CHECK(verify_law(t4, t5, laver::Law::Hom).holds);
  CHECK(verify_law(t4, t5, laver::Law::Periods).holds);
}

TEST_CASE("sampled law verification at a bigger level") {
  LaverTable t = LaverTable::build(10);
  laver::VerifyOptions opts;
  opts.samples = 20000;
  opts.seed = 42;
  CHECK(verify_law(t, laver::Law::LD, opts).holds);
  CHECK(verify_law(t, laver::Law::Sigma, opts).holds);
}

TEST_CASE("a broken table is caught by verification") {
  // verify_law only sees the public interface, so fake a violation by
  // comparing two honest tables at mismatched levels via Hom.
  LaverTable t3 = LaverTable::build(3);
  LaverTable t5 = LaverTable::build(5);
  CHECK_THROWS_AS(verify_law(t3, t5, laver::Law::Hom), laver::DomainError);
}

TEST_CASE("cache round trip") {
  LaverTable t = LaverTable::build(5);
  std::stringstream ss;
  t.write_cache(ss);
  LaverTable u = LaverTable::read_cache(ss);
  REQUIRE(u.level() == 5);
  for (laver::Elem a = 0; a < u.size(); ++a)
    for (laver::Elem b = 0; b < u.size(); ++b) CHECK(u.apply(a, b) == t.apply(a, b));
}

TEST_CASE("corrupt caches are rejected") {
  auto expect_bad = [](const std::string& text) {
    std::stringstream ss(text);
    CHECK_THROWS_AS(LaverTable::read_cache(ss), laver::FormatError);
  };
  expect_bad("LAVERTABLE v2 n=2 convention=zero\n1 2 2 0\n2 1 0\n3 1 0\n");
  expect_bad("LAVERTABLE v1 n=2 convention=one\n1 2 2 0\n2 1 0\n3 1 0\n");
  expect_bad("LAVERTABLE v1 n=2 convention=zero\n1 3 2 3 0\n2 1 0\n3 1 0\n");
  expect_bad("LAVERTABLE v1 n=2 convention=zero\n1 2 3 0\n2 1 0\n3 1 0\n");
  expect_bad("LAVERTABLE v1 n=2 convention=zero\n1 2 2 0\n2 1 0\n");
}

TEST_CASE("memory cap and level ceiling") {
  CHECK_THROWS_AS(LaverTable::build(12, 1024), laver::ResourceError);
  CHECK_THROWS_AS(LaverTable::build(laver::kMaxLevel + 1), laver::ResourceError);
  CHECK_THROWS_AS(LaverTable::build(-1), laver::DomainError);
}

TEST_CASE("shared cache returns consistent tables") {
  auto& c = laver::TableCache::instance();
  c.clear();
  auto a = c.get(6);
  auto b = c.get(6);
  CHECK(a.get() == b.get());
  CHECK(a->apply(1, 2) == LaverTable::build(6).apply(1, 2));
  c.clear();
}
