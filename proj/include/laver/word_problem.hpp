#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laver/term.hpp"
#include "laver/witness.hpp"

namespace laver {

// Verdict of the free-algebra comparator.  Equiv/Less/Greater are definitive;
// OutOfFuel carries the stage that exhausted its budget and never stands in
// for a wrong answer.
enum class Verdict { Equiv, Less, Greater, OutOfFuel };

struct CompareResult {
  Verdict verdict;
  std::string stage;  // nonempty only for OutOfFuel

  bool operator==(const CompareResult&) const = default;
};

const char* verdict_name(Verdict v);

// a_1 o ... o a_n with every part an A-term.
struct CompositionForm {
  std::vector<Term> parts;
};

// If b = a c_1 ... c_k syntactically with k > 0, the c_i; otherwise absent.
std::optional<std::vector<Term>> left_subterm_witness(const Term& a, const Term& b);

// Mixed-direction derivation a . u_k == u_{k+1}, built by recursion on the
// structure of a (and k); requires depth(a) <= k.
Derivation herringbone_derivation(const Term& a, int k, Fuel& fuel);
Derivation herringbone_derivation(const Term& a, int k);

// Given a syntactically a left subterm of b and an Expand-only derivation
// b -> b', returns (a', derivation a -> a') with a' a left subterm of b'.
std::pair<Term, Derivation> track_left_subterm(const Term& a, const Term& b, const Derivation& d);

// Decides a == b, a < b, or a > b in the free monogenic left-distributive
// algebra.  Short-circuits on syntactic equality and syntactic left subterms;
// otherwise runs the constructive pipeline: both words are steered into the
// common word partial^m(u_{k+1}) and compared by left-spine depth (the deeper
// subterm is the smaller element).
CompareResult compare(const Term& a, const Term& b, std::uint64_t fuel_budget = kDefaultStepBudget);

// The unique composition form of a word of W_P (no Zero leaves).
CompositionForm normalize_composition(const Term& p);

// The unique a_1, ..., a_n with a = a_1(a_2(...(a_n(1))...)); and its inverse.
std::vector<Term> spine_decompose(const Term& a);
Term spine_compose(const std::vector<Term>& parts);

}  // namespace laver
