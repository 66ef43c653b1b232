#include "laver/table.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace laver {

const char* law_name(Law law) {
  switch (law) {
    case Law::LD: return "LD";
    case Law::Sigma: return "Sigma";
    case Law::Hom: return "Hom";
    case Law::Periods: return "Periods";
  }
  return "?";
}

LaverTable LaverTable::build(int n, std::size_t memory_cap) {
  if (n < 0) throw DomainError("negative level");
  if (n > kMaxLevel) throw ResourceError("level " + std::to_string(n) + " above ceiling " + std::to_string(kMaxLevel));
  LaverTable t;
  t.n_ = n;
  const Elem size = Elem{1} << n;
  t.rows_.resize(size);
  // Rows descending on a: entry a*(b+1) = (a*b)*(a+1) is one lookup into the
  // already complete row of a*b (a*b > a or a*b = 0).
  for (Elem a = size; a-- > 1;) {
    std::vector<Elem>& row = t.rows_[a];
    Elem v = (a + 1) & (size - 1);  // a*1
    for (;;) {
      t.bytes_ += sizeof(Elem);
      if (t.bytes_ > memory_cap)
        throw ResourceError("memory cap exceeded while building row " + std::to_string(a) +
                            " of level " + std::to_string(n));
      row.push_back(v);
      if (v == 0) break;
      const std::vector<Elem>& vr = t.rows_[v];
      v = vr[a % vr.size()];  // v *_n (a+1)
    }
    row.shrink_to_fit();
  }
  return t;
}

Elem LaverTable::apply(Elem a, Elem b) const {
  check(a);
  check(b);
  if (a == 0) return b;
  if (b == 0) return 0;
  const std::vector<Elem>& row = rows_[a];
  return row[(b - 1) % row.size()];
}

Elem LaverTable::compose(Elem a, Elem b) const {
  check(a);
  check(b);
  const Elem mask = size() - 1;
  return (apply(a, (b + 1) & mask) + mask) & mask;
}

std::uint32_t LaverTable::period(Elem a) const {
  check(a);
  if (a == 0) return size();
  return static_cast<std::uint32_t>(rows_[a].size());
}

std::span<const Elem> LaverTable::row(Elem a) const {
  check(a);
  if (a == 0) throw DomainError("row 0 is not materialized");
  return rows_[a];
}

void LaverTable::write_cache(std::ostream& out) const {
  out << "LAVERTABLE v1 n=" << n_ << " convention=zero\n";
  for (Elem a = 1; a < size(); ++a) {
    out << a << ' ' << rows_[a].size();
    for (Elem v : rows_[a]) out << ' ' << v;
    out << '\n';
  }
}

LaverTable LaverTable::read_cache(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty table cache");
  int n = -1;
  {
    std::istringstream hs(header);
    std::string magic, nfield, conv;
    hs >> magic >> nfield >> conv;
    if (magic != "LAVERTABLE" || nfield != "v1" || !hs) throw FormatError("bad table cache header");
    // re-parse: header is "LAVERTABLE v1 n=<n> convention=zero"
    std::istringstream hs2(header);
    std::string tok;
    hs2 >> tok >> tok;  // LAVERTABLE v1
    hs2 >> tok;
    if (tok.rfind("n=", 0) != 0) throw FormatError("bad table cache header");
    n = std::stoi(tok.substr(2));
    hs2 >> tok;
    if (tok != "convention=zero") throw FormatError("unsupported convention");
  }
  if (n < 0 || n > kMaxLevel) throw FormatError("bad level in table cache");
  LaverTable t;
  t.n_ = n;
  const Elem size = Elem{1} << n;
  t.rows_.resize(size);
  std::string line;
  for (Elem a = 1; a < size; ++a) {
    if (!std::getline(in, line)) throw FormatError("truncated table cache at row " + std::to_string(a));
    std::istringstream ls(line);
    Elem ra = 0;
    std::size_t p = 0;
    if (!(ls >> ra >> p) || ra != a) throw FormatError("bad row index at row " + std::to_string(a));
    if (p == 0 || (p & (p - 1)) != 0 || p > size) throw FormatError("period of row " + std::to_string(a) + " is not a power of 2 dividing 2^n");
    std::vector<Elem> row(p);
    for (std::size_t i = 0; i < p; ++i) {
      long long v;
      if (!(ls >> v) || v < 0 || v >= static_cast<long long>(size))
        throw FormatError("bad entry in row " + std::to_string(a));
      row[i] = static_cast<Elem>(v);
    }
    Elem extra;
    if (ls >> extra) throw FormatError("trailing entries in row " + std::to_string(a));
    // Row invariants: entries before the final 0 strictly increasing and > a.
    if (row.back() != 0) throw FormatError("row " + std::to_string(a) + " does not end in 0");
    for (std::size_t i = 0; i + 1 < p; ++i)
      if (row[i] <= a) throw FormatError("row " + std::to_string(a) + " has an entry <= a");
    for (std::size_t i = 0; i + 2 < p; ++i)
      if (row[i + 1] <= row[i]) throw FormatError("row " + std::to_string(a) + " violates monotonicity");
    t.bytes_ += p * sizeof(Elem);
    t.rows_[a] = std::move(row);
  }
  // Cross-check the recursion a*1 = a+1 and a*(b+1) = (a*b)*(a+1) on row heads.
  for (Elem a = 1; a < size; ++a) {
    if (t.rows_[a][0] != ((a + 1) & (size - 1)))
      throw FormatError("row " + std::to_string(a) + " violates a*1 = a+1");
    for (std::size_t b = 0; b + 1 < t.rows_[a].size(); ++b) {
      if (t.apply(t.rows_[a][b], (a + 1) & (size - 1)) != t.rows_[a][b + 1])
        throw FormatError("row " + std::to_string(a) + " violates the recursion");
    }
  }
  return t;
}

namespace {

// Iterates either all tuples in [0,2^n)^arity or `samples` random ones.
template <typename Check>
LawReport run_check(Law law, const LaverTable& t, int arity, const VerifyOptions& opts, Check&& check) {
  LawReport rep;
  rep.law = law;
  const std::uint64_t size = t.size();
  if (!opts.samples) {
    std::uint64_t total = 1;
    for (int i = 0; i < arity; ++i) total *= size;
    if (total > opts.exhaustive_ceiling)
      throw ResourceError("exhaustive check of " + std::to_string(total) + " tuples above ceiling");
    std::vector<Elem> tuple(arity, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rem = idx;
      for (int i = 0; i < arity; ++i) {
        tuple[i] = static_cast<Elem>(rem % size);
        rem /= size;
      }
      if (!check(tuple, rep.detail)) {
        rep.holds = false;
        rep.counterexample = tuple;
        return rep;
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, size - 1);
    std::vector<Elem> tuple(arity, 0);
    for (std::uint64_t s = 0; s < *opts.samples; ++s) {
      for (int i = 0; i < arity; ++i) tuple[i] = static_cast<Elem>(dist(rng));
      if (!check(tuple, rep.detail)) {
        rep.holds = false;
        rep.counterexample = tuple;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace

LawReport verify_law(const LaverTable& t, Law law, VerifyOptions opts) {
  switch (law) {
    case Law::LD:
      return run_check(law, t, 3, opts, [&](const std::vector<Elem>& v, std::string& detail) {
        Elem a = v[0], b = v[1], c = v[2];
        if (t.apply(a, t.apply(b, c)) == t.apply(t.apply(a, b), t.apply(a, c))) return true;
        detail = "a*(b*c) != (a*b)*(a*c)";
        return false;
      });
    case Law::Sigma:
      return run_check(law, t, 3, opts, [&](const std::vector<Elem>& v, std::string& detail) {
        Elem a = v[0], b = v[1], c = v[2];
        if (t.compose(t.compose(a, b), c) != t.compose(a, t.compose(b, c))) {
          detail = "(a o b) o c != a o (b o c)";
          return false;
        }
        if (t.apply(t.compose(a, b), c) != t.apply(a, t.apply(b, c))) {
          detail = "(a o b)*c != a*(b*c)";
          return false;
        }
        if (t.apply(a, t.compose(b, c)) != t.compose(t.apply(a, b), t.apply(a, c))) {
          detail = "a*(b o c) != (a*b) o (a*c)";
          return false;
        }
        if (t.compose(a, b) != t.compose(t.apply(a, b), a)) {
          detail = "a o b != (a*b) o a";
          return false;
        }
        return true;
      });
    default:
      throw DomainError("law needs two consecutive tables");
  }
}

LawReport verify_law(const LaverTable& tn, const LaverTable& tn1, Law law, VerifyOptions opts) {
  if (tn1.level() != tn.level() + 1) throw DomainError("tables must be at consecutive levels");
  const int n = tn.level();
  switch (law) {
    case Law::Hom:
      return run_check(law, tn1, 2, opts, [&](const std::vector<Elem>& v, std::string& detail) {
        Elem a = v[0], b = v[1];
        if (project(tn1.apply(a, b), n) != tn.apply(project(a, n), project(b, n))) {
          detail = "(a * b) mod 2^n != (a mod 2^n) * (b mod 2^n)";
          return false;
        }
        if (project(tn1.compose(a, b), n) != tn.compose(project(a, n), project(b, n))) {
          detail = "(a o b) mod 2^n != (a mod 2^n) o (b mod 2^n)";
          return false;
        }
        return true;
      });
    case Law::Periods:
      return run_check(law, tn, 1, opts, [&](const std::vector<Elem>& v, std::string& detail) {
        Elem a = v[0];
        const Elem half = tn.size();
        std::uint32_t p = tn.period(a);
        if (tn1.period(a + half) != p) {
          detail = "p_{n+1}(a + 2^n) != p_n(a)";
          return false;
        }
        std::uint32_t p1 = tn1.period(a);
        if (p1 != p && p1 != 2 * p) {
          detail = "p_{n+1}(a) not in {p_n(a), 2 p_n(a)}";
          return false;
        }
        return true;
      });
    default:
      throw DomainError("law takes a single table");
  }
}

TableCache& TableCache::instance() {
  static TableCache cache;
  return cache;
}

std::shared_ptr<const LaverTable> TableCache::get(int n) {
  if (n < 0) throw DomainError("negative level");
  if (n > kMaxLevel) throw ResourceError("level above ceiling " + std::to_string(kMaxLevel));
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<std::size_t>(n) < tables_.size() && tables_[n]) return tables_[n];
  if (tables_.size() <= static_cast<std::size_t>(n)) tables_.resize(n + 1);
  std::size_t budget = cap_ > used_ ? cap_ - used_ : 0;
  auto t = std::make_shared<LaverTable>(LaverTable::build(n, budget));
  used_ += t->memory_bytes();
  tables_[n] = t;
  return t;
}

void TableCache::set_memory_cap(std::size_t bytes) {
  std::lock_guard<std::mutex> lock(mu_);
  cap_ = bytes;
}

void TableCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  tables_.clear();
  used_ = 0;
}

}  // namespace laver
