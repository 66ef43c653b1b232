#pragma once
// Candidate embedding algebras given as finite strictly-increasing function
// prefixes with a partial product table: axiom checking, critical sequences,
// and the bounded two-sorted structure built from formal compositions.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace laver {

// A named strictly increasing function, known on {0, ..., L-1}.
struct FnPrefix {
  std::string name;
  std::vector<std::int64_t> values;

  std::size_t length() const { return values.size(); }
  bool is_id() const;
};

// Least i with f(i) > i; DomainError when f is the identity on its prefix.
std::int64_t crit(const FnPrefix& f);

// A finite candidate: functions of a common prefix length, a partial product
// table a.b = c over their names, and an optional designated generator.  The
// name "id" is reserved for the identity prefix and need not be declared to
// be used in the table.
struct Candidate {
  std::vector<FnPrefix> functions;
  std::map<std::pair<std::string, std::string>, std::string> ops;
  std::optional<std::string> generator;
  std::size_t prefix_len = 0;

  const FnPrefix* find(const std::string& name) const;
  // a.b with the identity rules id.a = a, a.id = id; nullopt when the table
  // has no entry.
  std::optional<std::string> product(const std::string& a,
                                     const std::string& b) const;
};

// Text format: line `EMBEDALG v1 prefix=<L>`, then `fun <name> <v0> ...`,
// `op <a> <b> <c>`, optional `gen <name>`.  FormatError on any violation.
Candidate parse_candidate(std::istream& in);
Candidate load_candidate(const std::string& path);

enum class Status { Verified, Refuted, Unchecked };

struct AxiomResult {
  std::string axiom;
  Status status = Status::Unchecked;
  std::uint64_t checked = 0;  // instances that were fully evaluated
  std::uint64_t skipped = 0;  // instances outside the defined fragment
  std::string detail;         // replayable counterexample when refuted
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool refuted() const;
  const AxiomResult* find(const std::string& axiom) const;
};

// Checks monotonicity, the left-distributive law, crit(a.b) = a(crit b), and
// application coherence (a.b)(a(n)) = a(b(n)) on every instance computable
// from the prefixes and the partial table.
AxiomReport check_candidate(const Candidate& c);

// crit x, x(crit x), x(x(crit x)), ...; cut short when the prefix runs out.
struct CriticalSequence {
  std::vector<std::int64_t> points;
  bool complete = false;  // true when all m requested terms were computed
};

CriticalSequence critical_sequence(const FnPrefix& f, int m);
// For a formal composition [a_1, ..., a_n]: application is a_1(...a_n(.)...)
// and crit is the minimum of the parts' critical points.
CriticalSequence critical_sequence(const Candidate& c,
                                   const std::vector<std::string>& parts,
                                   int m);

// The two-sorted structure over a candidate: embeddings are formal
// compositions of at most max_parts non-identity functions (plus id),
// ordinals are the prefix horizon {0, ..., L-1}.  Equality of compositions
// is decided by bounded search over the replacement a o b <-> ab o a.
class TwoSorted {
 public:
  using Comp = std::vector<std::string>;  // empty = id

  TwoSorted(Candidate c, int max_parts, std::uint64_t max_bfs);

  const Candidate& candidate() const { return cand_; }
  int max_parts() const { return max_parts_; }
  // All compositions with 1..max_parts parts, plus the identity.
  const std::vector<Comp>& elements() const { return elems_; }

  // a_1(a_2(...a_n(gamma)...)); nullopt when a prefix runs out.
  std::optional<std::int64_t> apply(const Comp& a, std::int64_t gamma) const;
  // min over parts; nullopt for the identity.
  std::optional<std::int64_t> crit(const Comp& a) const;

  Comp comp(const Comp& a, const Comp& b) const;  // a o b: concatenation
  // (a_1 o ... o a_n) . (b_1 o ... o b_m) = c_1 o ... o c_m with
  // c_j = a_1(a_2(...(a_n . b_j)...)); nullopt if a product is undefined.
  std::optional<Comp> prod(const Comp& a, const Comp& b) const;

  enum class Eq { Equal, Distinct, Unknown };
  Eq equal(const Comp& a, const Comp& b) const;

 private:
  Candidate cand_;
  int max_parts_;
  std::uint64_t max_bfs_;
  std::vector<Comp> elems_;
};

struct TwoSortedBounds {
  int max_context = 3;  // context length for the graded equivalences
  int max_seq = 4;      // critical-sequence terms compared against kappa
};

// Bounded verification of the two-sorted axioms: order and monotonicity,
// critical points, composition-as-application, the identity rules, the four
// composition laws, the graded equivalence axioms (refutation-only), the
// prefix-bounded absorption lemma, the generator's kappa-sequence, and
// cofinality of critical sequences within the horizon.
AxiomReport check_two_sorted(const TwoSorted& ts, const TwoSortedBounds& b);

}  // namespace laver
