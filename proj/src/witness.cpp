#include "laver/witness.hpp"

namespace laver {

namespace {

Position extend(const Position& prefix, Dir d) {
  Position p = prefix;
  p.push_back(d);
  return p;
}

void we_steps(const Term& x, const Position& prefix, std::vector<Step>& out, Fuel& fuel);

// OMonoL: distributes steps rewriting u (positions relative to u) over every
// u-copy of u (x) v.
void omonol_steps(const std::vector<Step>& inner, const Term& v, const Position& prefix,
                  std::vector<Step>& out, Fuel& fuel) {
  if (v->kind == NodeKind::One) {
    for (const Step& s : inner) {
      fuel.spend("lift");
      Position p = extend(prefix, Dir::Left);
      p.insert(p.end(), s.pos.begin(), s.pos.end());
      out.push_back({std::move(p), s.dir});
    }
    return;
  }
  omonol_steps(inner, v->left, extend(prefix, Dir::Left), out, fuel);
  omonol_steps(inner, v->right, extend(prefix, Dir::Right), out, fuel);
}

// Derives a (x) (b (x) c) -> (a (x) b) (x) (a (x) c).
void two_steps(const Term& a, const Term& b, const Term& c, const Position& prefix,
               std::vector<Step>& out, Fuel& fuel) {
  if (c->kind == NodeKind::One) {
    fuel.spend("lift");
    out.push_back({prefix, StepDir::Expand});
    dist_steps(otimes(a, b), a, extend(prefix, Dir::Left), out, fuel);
    return;
  }
  two_steps(a, b, c->left, extend(prefix, Dir::Left), out, fuel);
  two_steps(a, b, c->right, extend(prefix, Dir::Right), out, fuel);
}

// Lift of a single Expand step of x at pos[i..] onto partial(x).
void lift_step_steps(const Term& x, const Position& pos, std::size_t i, const Position& prefix,
                     std::vector<Step>& out, Fuel& fuel) {
  if (i == pos.size()) {
    // x = x1(x2 x3); partial(x) = px1 (x) (px2 (x) px3)
    two_steps(partial(x->left), partial(x->right->left), partial(x->right->right), prefix, out,
              fuel);
    return;
  }
  if (pos[i] == Dir::Left) {
    std::vector<Step> inner;
    lift_step_steps(x->left, pos, i + 1, {}, inner, fuel);
    omonol_steps(inner, partial(x->right), prefix, out, fuel);
  } else {
    // OMap: steps keep their positions under u (x) _.
    lift_step_steps(x->right, pos, i + 1, prefix, out, fuel);
  }
}

void absorb_steps(const Term& x, const Position& pos, std::size_t i, const Position& prefix,
                  std::vector<Step>& out, Fuel& fuel) {
  if (i == pos.size()) {
    // x = x1(x2 x3), the step image is y = (x1 x2)(x1 x3).
    we_steps(apply(x->left, x->right->left), extend(prefix, Dir::Left), out, fuel);
    we_steps(apply(x->left, x->right->right), extend(prefix, Dir::Right), out, fuel);
    // Now at px1 (x) (px2 . px3); distribute the right factor.
    dist_steps(partial(x->right->left), partial(x->right->right), prefix, out, fuel);
    return;
  }
  if (pos[i] == Dir::Left) {
    absorb_steps(x->left, pos, i + 1, extend(prefix, Dir::Left), out, fuel);
    we_steps(x->right, extend(prefix, Dir::Right), out, fuel);
  } else {
    we_steps(x->left, extend(prefix, Dir::Left), out, fuel);
    absorb_steps(x->right, pos, i + 1, extend(prefix, Dir::Right), out, fuel);
  }
  dist_steps(partial(x->left), partial(x->right), prefix, out, fuel);
}

void we_steps(const Term& x, const Position& prefix, std::vector<Step>& out, Fuel& fuel) {
  if (x->kind == NodeKind::One) return;
  we_steps(x->left, extend(prefix, Dir::Left), out, fuel);
  we_steps(x->right, extend(prefix, Dir::Right), out, fuel);
  dist_steps(partial(x->left), partial(x->right), prefix, out, fuel);
}

}  // namespace

void dist_steps(const Term& a, const Term& b, const Position& prefix, std::vector<Step>& out,
                Fuel& fuel) {
  if (b->kind == NodeKind::One) return;
  fuel.spend("witness");
  out.push_back({prefix, StepDir::Expand});
  dist_steps(a, b->left, extend(prefix, Dir::Left), out, fuel);
  dist_steps(a, b->right, extend(prefix, Dir::Right), out, fuel);
}

Derivation witness_expand(const Term& a, Fuel& fuel) {
  if (!is_a_term(a)) throw DomainError("witness_expand expects an A-term");
  Derivation d;
  d.start = a;
  we_steps(a, {}, d.steps, fuel);
  d.end = partial(a);
  return d;
}

Derivation witness_expand(const Term& a) {
  Fuel fuel;
  return witness_expand(a, fuel);
}

Derivation witness_absorb(const Term& a, const Term& b, Fuel& fuel) {
  if (!is_a_term(a)) throw DomainError("witness_absorb expects A-terms");
  for (const Position& p : ld_redexes(a)) {
    if (equal(ld_step(a, p, StepDir::Expand), b)) {
      Derivation d;
      d.start = b;
      absorb_steps(a, p, 0, {}, d.steps, fuel);
      d.end = partial(a);
      return d;
    }
  }
  throw DomainError("witness_absorb: terms are not one Expand step apart");
}

Derivation witness_absorb(const Term& a, const Term& b) {
  Fuel fuel;
  return witness_absorb(a, b, fuel);
}

Derivation lift_derivation(const Derivation& d, Fuel& fuel) {
  if (!d.expand_only()) throw DomainError("lift_derivation expects an Expand-only derivation");
  Derivation out;
  out.start = partial(d.start);
  Term w = d.start;
  for (const Step& s : d.steps) {
    lift_step_steps(w, s.pos, 0, {}, out.steps, fuel);
    w = ld_step(w, s.pos, StepDir::Expand);
  }
  out.end = partial(w);
  return out;
}

Derivation lift_derivation(const Derivation& d) {
  Fuel fuel;
  return lift_derivation(d, fuel);
}

}  // namespace laver
