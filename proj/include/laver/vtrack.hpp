#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "laver/term.hpp"
#include "laver/witness.hpp"

namespace laver {

// Lazy derivation engine.  The comparator needs iterated images under the
// duplicating maps (x) and d, whose materialized trees are astronomically
// large; this engine represents those terms and the witness derivations over
// them symbolically and answers just two questions about them exactly:
// how many leaves / left-spine nodes a term has (GMP integers), and where a
// tracked left-spine subterm ends up after replaying a derivation.
//
// Everything is interned within one engine, so structurally equal nodes are
// pointer-equal and all measures are memoized.  Work is metered by the Fuel
// passed at construction; on exhaustion a FuelError escapes and the caller
// reports an out-of-fuel verdict rather than a wrong one.
class VirtualEngine {
 public:
  explicit VirtualEngine(Fuel& fuel);
  VirtualEngine(const VirtualEngine&) = delete;
  VirtualEngine& operator=(const VirtualEngine&) = delete;
  ~VirtualEngine();

  struct VTerm;
  struct VDeriv;
  using VT = const VTerm*;
  using VD = const VDeriv*;

  enum class TK : std::uint8_t { One, App, Otimes, Partial };
  // Derivation combinators.  Empty through Step are primitive; the rest are
  // closed forms with known endpoints and tracking behaviour:
  //   WE(x)        x -> partial(x)
  //   Dist(u,v)    u.v -> u (x) v
  //   OMap(u,E)    u (x) start(E) -> u (x) end(E), E's steps verbatim
  //   OMonoL(E,v)  start(E) (x) v -> end(E) (x) v, E mapped over every copy
  //   Two(a,b,c)   a (x) (b (x) c) -> (a (x) b) (x) (a (x) c)
  //   Lift(D)      partial(start(D)) -> partial(end(D))
  enum class DK : std::uint8_t {
    Empty, Concat, MapL, MapR, Step, WE, Dist, OMap, OMonoL, Two, Lift
  };

  struct VTerm {
    TK kind;
    VT a = nullptr;
    VT b = nullptr;
    mutable std::optional<mpz_class> leaves_c, spine_c;
    mutable VT whnf_c = nullptr;
  };

  struct VDeriv {
    DK kind;
    std::vector<VD> children;          // Concat
    VD inner = nullptr;                // MapL/MapR/OMap/OMonoL/Lift child
    VT t1 = nullptr, t2 = nullptr, t3 = nullptr;
    Position pos;                      // Step
    mutable VT start_c = nullptr, end_c = nullptr;
    mutable VD resolved = nullptr;     // Lift: equivalent non-Lift form
  };

  // --- terms ---------------------------------------------------------------
  VT one();
  VT app(VT a, VT b);
  VT otimes(VT a, VT b);
  VT partial(VT a);
  VT intern(const Term& t);  // A-terms only

  // Weak head normal form: One or App at the root.
  VT whnf(VT t);
  const mpz_class& leaves(VT t);
  const mpz_class& spine(VT t);  // left-spine length (0 for One)

  // Left-spine subterm at depth d (1 <= d <= spine(t)).
  VT spine_subterm(VT t, const mpz_class& d);

  Term materialize(VT t, std::uint64_t max_leaves = 1 << 20);

  // --- derivations ---------------------------------------------------------
  VD empty(VT word);
  VD concat(std::vector<VD> parts);
  VD mapl(VD d, VT right_sibling);
  VD mapr(VT left_sibling, VD d);
  VD step(VT word, Position pos);
  VD we(VT x);
  VD dist(VT u, VT v);
  VD omap(VT u, VD e);
  VD omonol(VD e, VT v);
  VD two(VT a, VT b, VT c);
  VD lift(VD d);

  VT start(VD d);
  VT end(VD d);

  // Final left-spine depth of the subterm that starts at depth d (>= 1) of
  // start(D), after replaying D.
  mpz_class track(VD d, const mpz_class& depth);

  // Concrete step list of D (positions from the root of start(D)); only
  // feasible for small derivations, used for validation.
  std::vector<Step> materialize_steps(VD d, std::uint64_t max_steps = 1 << 20);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Fuel& fuel_;

  VT intern_vt(TK kind, VT a, VT b);
  VD intern_vd(VDeriv n);

  VD primitive_of(VD d);    // top node in {Empty, Concat, MapL, MapR, Step}
  VD decompose_one(VD d);   // WE/Dist/OMap/OMonoL/Two, one level
  VD resolve_lift(VD d);    // Lift -> equivalent non-Lift node
  VD lift_of_step(VT word, const Position& pos, std::size_t i);
  mpz_class we_depth(VT x, const mpz_class& d);  // tracking through WE(x)
  void mat_steps(VD d, Position& prefix, std::vector<Step>& out, std::uint64_t max_steps);
};

}  // namespace laver
