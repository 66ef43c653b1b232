#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laver/error.hpp"

namespace laver {

// Element of A_n = P_n = {0, ..., 2^n - 1}.  0 plays the role 2^n plays in
// presentations on {1, ..., 2^n}: 0*b = b, a*0 = 0, and a*1 = a+1 mod 2^n.
using Elem = std::uint32_t;

enum class Law { LD, Sigma, Hom, Periods };

const char* law_name(Law law);

struct LawReport {
  Law law = Law::LD;
  bool holds = true;
  // Elements of the first violating tuple, empty when holds.  For Hom/Periods
  // the elements live at level n+1.
  std::vector<Elem> counterexample;
  std::string detail;  // which equation failed, for Sigma and friends
};

struct VerifyOptions {
  // nullopt = exhaustive; otherwise number of uniformly sampled tuples.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_ceiling = 1ull << 27;
};

inline constexpr std::size_t kDefaultMemoryCap = std::size_t{1} << 30;  // 1 GiB
inline constexpr int kMaxLevel = 16;

// The finite algebra on {0,...,2^n-1} with a *_n 1 = a+1 mod 2^n, stored
// period-compressed: row a holds a*1, ..., a*p(a), with a*p(a) = 0.
// Immutable after construction.
class LaverTable {
 public:
  static LaverTable build(int n, std::size_t memory_cap = kDefaultMemoryCap);

  int level() const { return n_; }
  Elem size() const { return Elem{1} << n_; }

  Elem apply(Elem a, Elem b) const;    // a *_n b
  Elem compose(Elem a, Elem b) const;  // a o_n b = (a *_n (b+1)) - 1  (mod 2^n)
  std::uint32_t period(Elem a) const;  // p(a); p(0) = 2^n

  // Row a (a != 0): the first p(a) values a*1, ..., a*p(a).
  std::span<const Elem> row(Elem a) const;

  // Text cache format:
  //   LAVERTABLE v1 n=<n> convention=zero
  //   <a> <p(a)> <v_1> ... <v_p(a)>        (one line per a = 1 .. 2^n-1)
  void write_cache(std::ostream& out) const;
  static LaverTable read_cache(std::istream& in);

  std::size_t memory_bytes() const { return bytes_; }

 private:
  LaverTable() = default;
  void check(Elem a) const {
    if (a >= size()) throw DomainError("element " + std::to_string(a) + " out of range for level " + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<std::vector<Elem>> rows_;  // index 0 unused (identity row)
  std::size_t bytes_ = 0;
};

// Reduction modulo 2^n; the homomorphism from level n+1 down to level n.
inline Elem project(Elem x, int n) { return x & ((Elem{1} << n) - 1); }

LawReport verify_law(const LaverTable& t, Law law, VerifyOptions opts = {});
// Hom and Periods relate two consecutive levels.
LawReport verify_law(const LaverTable& tn, const LaverTable& tn1, Law law, VerifyOptions opts = {});

// Process-wide lazily built, immutable table cache with a shared memory cap.
class TableCache {
 public:
  static TableCache& instance();

  std::shared_ptr<const LaverTable> get(int n);
  void set_memory_cap(std::size_t bytes);
  void clear();

 private:
  std::mutex mu_;
  std::size_t cap_ = kDefaultMemoryCap;
  std::size_t used_ = 0;
  std::vector<std::shared_ptr<const LaverTable>> tables_;
};

}  // namespace laver
