#include "laver/term.hpp"

#include <algorithm>
#include <sstream>

namespace laver {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

Term make_leaf(NodeKind k) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->depth = 0;
  n->leaves = 1;
  n->hash = k == NodeKind::One ? 0x1ull : 0x2ull;
  return n;
}

}  // namespace

Term one() {
  static const Term t = make_leaf(NodeKind::One);
  return t;
}

Term zero() {
  static const Term t = make_leaf(NodeKind::Zero);
  return t;
}

static Term make_node(NodeKind k, Term a, Term b) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->depth = std::max(a->depth, b->depth) + 1;
  n->leaves = a->leaves + b->leaves;
  n->hash = mix(mix(static_cast<std::uint64_t>(k) * 0x517cc1b727220a95ull, a->hash), b->hash);
  n->left = std::move(a);
  n->right = std::move(b);
  return n;
}

Term apply(Term a, Term b) { return make_node(NodeKind::Apply, std::move(a), std::move(b)); }
Term compose(Term a, Term b) { return make_node(NodeKind::Compose, std::move(a), std::move(b)); }

bool equal(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->hash != b->hash || a->leaves != b->leaves || a->depth != b->depth)
    return false;
  if (a->is_leaf()) return true;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

bool is_a_term(const Term& t) {
  if (t->kind == NodeKind::One) return true;
  if (t->kind != NodeKind::Apply) return false;
  return is_a_term(t->left) && is_a_term(t->right);
}

bool is_p_term(const Term& t) {
  if (t->is_leaf()) return t->kind == NodeKind::One;
  return is_p_term(t->left) && is_p_term(t->right);
}

int depth(const Term& t) { return t->depth; }

Term herringbone(int k) {
  if (k < 0) throw DomainError("herringbone index must be >= 0");
  Term t = one();
  for (int i = 0; i < k; ++i) t = apply(one(), t);
  return t;
}

Term full_word(int k) {
  if (k < 0) throw DomainError("full word index must be >= 0");
  Term t = one();
  for (int i = 0; i < k; ++i) t = apply(t, t);
  return t;
}

Term integer_word(std::uint64_t k) {
  if (k < 1) throw DomainError("integer word index must be >= 1");
  Term t = one();
  for (std::uint64_t i = 1; i < k; ++i) t = apply(t, one());
  return t;
}

std::string position_string(const Position& p) {
  std::string s;
  for (Dir d : p) s += d == Dir::Left ? 'L' : 'R';
  return s.empty() ? "e" : s;
}

Term subterm(const Term& t, const Position& pos) {
  Term cur = t;
  for (Dir d : pos) {
    if (cur->is_leaf()) throw DomainError("position leaves the term");
    cur = d == Dir::Left ? cur->left : cur->right;
  }
  return cur;
}

Term replace(const Term& t, const Position& pos, const Term& s) {
  if (pos.empty()) return s;
  if (t->is_leaf()) throw DomainError("position leaves the term");
  if (pos.front() == Dir::Left) {
    Position rest(pos.begin() + 1, pos.end());
    return make_node(t->kind, replace(t->left, rest, s), t->right);
  }
  Position rest(pos.begin() + 1, pos.end());
  return make_node(t->kind, t->left, replace(t->right, rest, s));
}

static void collect_redexes(const Term& t, Position& here, std::vector<Position>& out) {
  if (t->is_leaf()) return;
  if (t->kind == NodeKind::Apply && t->right->kind == NodeKind::Apply) out.push_back(here);
  here.push_back(Dir::Left);
  collect_redexes(t->left, here, out);
  here.back() = Dir::Right;
  collect_redexes(t->right, here, out);
  here.pop_back();
}

std::vector<Position> ld_redexes(const Term& t) {
  std::vector<Position> out;
  Position here;
  collect_redexes(t, here, out);
  return out;
}

static Term rewrite_at(const Term& t, const Position& pos, std::size_t i, StepDir dir) {
  if (i == pos.size()) {
    if (dir == StepDir::Expand) {
      // x(yz) -> xy(xz)
      if (t->kind != NodeKind::Apply || t->right->kind != NodeKind::Apply)
        throw RewriteError("not an expand redex at " + position_string(pos));
      const Term& x = t->left;
      const Term& y = t->right->left;
      const Term& z = t->right->right;
      return apply(apply(x, y), apply(x, z));
    }
    // (xy)(xz) -> x(yz), the two x copies must agree
    if (t->kind != NodeKind::Apply || t->left->kind != NodeKind::Apply ||
        t->right->kind != NodeKind::Apply)
      throw RewriteError("not a contract redex at " + position_string(pos));
    const Term& x = t->left->left;
    if (!equal(x, t->right->left))
      throw RewriteError("contract redex has unequal left copies at " + position_string(pos));
    return apply(x, apply(t->left->right, t->right->right));
  }
  if (t->is_leaf()) throw RewriteError("position leaves the term");
  if (pos[i] == Dir::Left)
    return make_node(t->kind, rewrite_at(t->left, pos, i + 1, dir), t->right);
  return make_node(t->kind, t->left, rewrite_at(t->right, pos, i + 1, dir));
}

Term ld_step(const Term& t, const Position& pos, StepDir dir) { return rewrite_at(t, pos, 0, dir); }

Term replay_steps(const Term& start, const std::vector<Step>& steps) {
  Term cur = start;
  for (const Step& s : steps) cur = ld_step(cur, s.pos, s.dir);
  return cur;
}

void replay(const Derivation& d) {
  Term end = replay_steps(d.start, d.steps);
  if (!equal(end, d.end)) throw RewriteError("derivation does not replay to its declared end");
}

bool Derivation::expand_only() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const Step& s) { return s.dir == StepDir::Expand; });
}

Derivation reversed(const Derivation& d) {
  Derivation r;
  r.start = d.end;
  r.end = d.start;
  r.steps.reserve(d.steps.size());
  for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it)
    r.steps.push_back({it->pos, it->dir == StepDir::Expand ? StepDir::Contract : StepDir::Expand});
  return r;
}

Term otimes(const Term& a, const Term& b) {
  if (b->kind == NodeKind::One) return apply(a, one());
  if (b->kind != NodeKind::Apply) throw DomainError("otimes expects A-terms");
  return apply(otimes(a, b->left), otimes(a, b->right));
}

Term partial(const Term& t) {
  if (t->kind == NodeKind::One) return one();
  if (t->kind != NodeKind::Apply) throw DomainError("partial expects A-terms");
  return otimes(partial(t->left), partial(t->right));
}

// ---- grammar ----

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw FormatError("parse error at offset " + std::to_string(i) + ": " + what);
  }

  Term atom() {
    skip();
    if (i >= s.size()) fail("expected atom");
    if (s[i] == '(') {
      ++i;
      Term t = term();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (s[i] == '0') {
      ++i;
      return zero();
    }
    if (s[i] >= '1' && s[i] <= '9') {
      std::uint64_t v = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000) fail("integer literal too large");
        ++i;
      }
      return integer_word(v);
    }
    fail("expected '1', '0', INT or '('");
  }

  Term factor() {
    Term t = atom();
    for (;;) {
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        t = apply(t, atom());
      } else if (i < s.size() && (s[i] == '(' || s[i] == '0' || (s[i] >= '1' && s[i] <= '9'))) {
        // juxtaposition is not in the grammar; reject loudly
        fail("missing operator");
      } else {
        return t;
      }
    }
  }

  Term term() {
    Term t = factor();
    for (;;) {
      skip();
      if (i < s.size() && s[i] == 'o') {
        ++i;
        t = compose(t, factor());
      } else {
        return t;
      }
    }
  }
};

void render_rec(const Term& t, std::string& out) {
  switch (t->kind) {
    case NodeKind::One: out += '1'; return;
    case NodeKind::Zero: out += '0'; return;
    case NodeKind::Apply:
      out += '(';
      render_rec(t->left, out);
      out += '*';
      render_rec(t->right, out);
      out += ')';
      return;
    case NodeKind::Compose:
      out += '(';
      render_rec(t->left, out);
      out += 'o';
      render_rec(t->right, out);
      out += ')';
      return;
  }
}

}  // namespace

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return t;
}

std::string render(const Term& t) {
  std::string out;
  render_rec(t, out);
  return out;
}

}  // namespace laver
