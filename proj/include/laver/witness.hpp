#pragma once

#include <cstdint>

#include "laver/term.hpp"

namespace laver {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

// Mutable step budget threaded through the witness builders; exhausting it
// raises FuelError with the stage name.
struct Fuel {
  std::uint64_t remaining = kDefaultStepBudget;

  void spend(const char* stage, std::uint64_t amount = 1) {
    if (amount > remaining) throw FuelError(stage, "step budget exhausted in " + std::string(stage));
    remaining -= amount;
  }
};

// "ab -> a (x) b": Expand-only steps from apply(a, b)
// to otimes(a, b), by recursion on b.  Steps are appended with `prefix`
// prepended to every position.
void dist_steps(const Term& a, const Term& b, const Position& prefix, std::vector<Step>& out,
                Fuel& fuel);

// Expand-only derivation a -> partial(a).
Derivation witness_expand(const Term& a, Fuel& fuel);
Derivation witness_expand(const Term& a);

// Given a single Expand step a -> b, an Expand-only
// derivation b -> partial(a).  Throws DomainError when b is not one step
// from a.
Derivation witness_absorb(const Term& a, const Term& b, Fuel& fuel);
Derivation witness_absorb(const Term& a, const Term& b);

// Lifts an Expand-only derivation a -> b to
// partial(a) -> partial(b).
Derivation lift_derivation(const Derivation& d, Fuel& fuel);
Derivation lift_derivation(const Derivation& d);

}  // namespace laver
