#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "laver/error.hpp"

namespace laver {

// Words of W_A (generator 1, operation ·) and W_P (adding o), plus the
// adjoined constant 0.  Immutable trees with structural sharing.
enum class NodeKind : std::uint8_t { One, Zero, Apply, Compose };

class TermNode;
using Term = std::shared_ptr<const TermNode>;

class TermNode {
 public:
  NodeKind kind;
  Term left, right;  // null for leaves
  int depth;         // depth(1) = 0, depth(ab) = max(depth a, depth b) + 1
  std::uint64_t leaves;
  std::uint64_t hash;

  bool is_leaf() const { return kind == NodeKind::One || kind == NodeKind::Zero; }
};

Term one();
Term zero();
Term apply(Term a, Term b);
Term compose(Term a, Term b);

bool equal(const Term& a, const Term& b);

// True when the word contains no Compose node and no Zero leaf.
bool is_a_term(const Term& t);
// True when the word contains no Zero leaf (a W_P word).
bool is_p_term(const Term& t);

int depth(const Term& t);

Term herringbone(int k);   // u_0 = 1, u_{k+1} = 1 u_k
Term full_word(int k);     // v_0 = 1, v_{k+1} = v_k v_k
Term integer_word(std::uint64_t k);  // 1 = 1, k+1 = k . 1

// Path from the root; Left/Right select the subterm of an Apply/Compose node.
enum class Dir : std::uint8_t { Left = 0, Right = 1 };
using Position = std::vector<Dir>;

std::string position_string(const Position& p);

Term subterm(const Term& t, const Position& pos);
Term replace(const Term& t, const Position& pos, const Term& s);

enum class StepDir : std::uint8_t { Expand, Contract };

struct Step {
  Position pos;
  StepDir dir = StepDir::Expand;
};

// A replayable sequence of positioned (LD)-steps.  Expand rewrites x(yz) to
// xy(xz) at the position; Contract is the inverse (the two copies of x must
// be structurally equal).
struct Derivation {
  Term start;
  std::vector<Step> steps;
  Term end;

  bool expand_only() const;
};

// All positions where an Expand step applies (subterms of shape x(yz),
// Apply nodes only).
std::vector<Position> ld_redexes(const Term& t);

Term ld_step(const Term& t, const Position& pos, StepDir dir);

// Validates every step and the declared end term; throws RewriteError.
void replay(const Derivation& d);
// Replays the steps from `start` and returns the resulting term.
Term replay_steps(const Term& start, const std::vector<Step>& steps);

Derivation reversed(const Derivation& d);

// a (x) 1 = a1, a (x) bc = (a(x)b)(a(x)c).
Term otimes(const Term& a, const Term& b);
// d1 = 1, d(ab) = da (x) db.
Term partial(const Term& t);

// Term grammar:  term := factor | term 'o' factor
//                factor := atom | factor '*' atom
//                atom := '1' | '0' | INT | '(' term ')'
// '*' binds tighter than 'o', both left-associative; INT >= 2 desugars via
// integer_word.
Term parse_term(const std::string& text);
// Fully parenthesized rendering accepted back by parse_term.
std::string render(const Term& t);

}  // namespace laver
