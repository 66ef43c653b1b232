#include "laver/word_problem.hpp"

#include <algorithm>

#include "laver/vtrack.hpp"

namespace laver {

namespace {

bool all_left(const Position& p) {
  return std::all_of(p.begin(), p.end(), [](Dir d) { return d == Dir::Left; });
}

void append_under(std::vector<Step>& out, const std::vector<Step>& steps, Dir dir, Fuel& fuel) {
  for (const Step& s : steps) {
    fuel.spend("derivation");
    Position p{dir};
    p.insert(p.end(), s.pos.begin(), s.pos.end());
    out.push_back({std::move(p), s.dir});
  }
}

// The absorption combinator: given that Expand at `pos` turns x into y, an
// engine derivation y -> partial(x), mirroring the concrete recursion in
// witness_absorb.
VirtualEngine::VD vd_absorb(VirtualEngine& eng, const Term& x, const Position& pos,
                            std::size_t i) {
  using VT = VirtualEngine::VT;
  if (i == pos.size()) {
    // x = x1(x2 x3), y = (x1 x2)(x1 x3).
    const Term& x1 = x->left;
    const Term& x2 = x->right->left;
    const Term& x3 = x->right->right;
    VT v12 = eng.intern(apply(x1, x2));
    VT v13 = eng.intern(apply(x1, x3));
    return eng.concat(
        {eng.mapl(eng.we(v12), v13), eng.mapr(eng.partial(v12), eng.we(v13)),
         eng.omap(eng.partial(eng.intern(x1)),
                  eng.dist(eng.partial(eng.intern(x2)), eng.partial(eng.intern(x3))))});
  }
  VT p1 = eng.partial(eng.intern(x->left));
  VT p2 = eng.partial(eng.intern(x->right));
  if (pos[i] == Dir::Left) {
    return eng.concat({eng.mapl(vd_absorb(eng, x->left, pos, i + 1), eng.intern(x->right)),
                       eng.mapr(p1, eng.we(eng.intern(x->right))), eng.dist(p1, p2)});
  }
  Position suffix(pos.begin() + i + 1, pos.end());
  Term y2 = ld_step(x->right, suffix, StepDir::Expand);
  return eng.concat({eng.mapl(eng.we(eng.intern(x->left)), eng.intern(y2)),
                     eng.mapr(p1, vd_absorb(eng, x->right, pos, i + 1)), eng.dist(p1, p2)});
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equiv:
      return "equiv";
    case Verdict::Less:
      return "less";
    case Verdict::Greater:
      return "greater";
    case Verdict::OutOfFuel:
      return "out-of-fuel";
  }
  return "?";
}

std::optional<std::vector<Term>> left_subterm_witness(const Term& a, const Term& b) {
  std::vector<Term> rights;
  Term cur = b;
  while (cur->kind == NodeKind::Apply) {
    rights.push_back(cur->right);
    cur = cur->left;
    if (equal(cur, a)) {
      std::reverse(rights.begin(), rights.end());
      return rights;
    }
  }
  return std::nullopt;
}

Derivation herringbone_derivation(const Term& a, int k, Fuel& fuel) {
  if (!is_a_term(a)) throw DomainError("herringbone_derivation expects an A-term");
  if (depth(a) > k) throw DomainError("herringbone_derivation requires depth(a) <= k");
  Derivation d;
  d.start = apply(a, herringbone(k));
  d.end = herringbone(k + 1);
  if (a->kind == NodeKind::One) return d;
  // a = bc over the word (bc).u_k:
  //   reverse of the b-derivation, under the right factor:  -> (bc)(b.u_{k-1})
  //   one Contract at the root:                              -> b(c.u_{k-1})
  //   the c-derivation under the right factor:               -> b.u_k
  //   the b-derivation at the top:                           -> u_{k+1}
  const Term& b = a->left;
  const Term& c = a->right;
  Derivation db1 = herringbone_derivation(b, k - 1, fuel);
  append_under(d.steps, reversed(db1).steps, Dir::Right, fuel);
  fuel.spend("derivation");
  d.steps.push_back({{}, StepDir::Contract});
  Derivation dc = herringbone_derivation(c, k - 1, fuel);
  append_under(d.steps, dc.steps, Dir::Right, fuel);
  Derivation db = herringbone_derivation(b, k, fuel);
  for (const Step& s : db.steps) {
    fuel.spend("derivation");
    d.steps.push_back(s);
  }
  return d;
}

Derivation herringbone_derivation(const Term& a, int k) {
  Fuel fuel;
  return herringbone_derivation(a, k, fuel);
}

std::pair<Term, Derivation> track_left_subterm(const Term& a, const Term& b, const Derivation& d) {
  if (!equal(d.start, b)) throw DomainError("track_left_subterm: derivation does not start at b");
  if (!d.expand_only()) throw DomainError("track_left_subterm: derivation must be Expand-only");
  std::size_t t;
  if (equal(a, b)) {
    t = 0;
  } else if (auto w = left_subterm_witness(a, b)) {
    t = w->size();
  } else {
    throw DomainError("track_left_subterm: a is not a left subterm of b");
  }
  Term cur_a = a;
  Term cur_b = b;
  Derivation out;
  out.start = a;
  for (const Step& s : d.steps) {
    cur_b = ld_step(cur_b, s.pos, StepDir::Expand);  // validates the position
    if (s.pos.size() >= t && all_left(Position(s.pos.begin(), s.pos.begin() + t))) {
      Position q(s.pos.begin() + t, s.pos.end());
      cur_a = ld_step(cur_a, q, StepDir::Expand);
      out.steps.push_back({std::move(q), StepDir::Expand});
    } else if (all_left(s.pos)) {
      ++t;  // the tracked subterm is duplicated one level deeper
    }
  }
  out.end = cur_a;
  return {cur_a, out};
}

CompareResult compare(const Term& a, const Term& b, std::uint64_t fuel_budget) {
  if (!is_a_term(a) || !is_a_term(b)) throw DomainError("compare expects A-terms");
  if (equal(a, b)) return {Verdict::Equiv, {}};
  if (left_subterm_witness(a, b)) return {Verdict::Less, {}};
  if (left_subterm_witness(b, a)) return {Verdict::Greater, {}};

  try {
    Fuel fuel{fuel_budget};
    const int k = std::max(depth(a), depth(b));
    Derivation da = herringbone_derivation(a, k, fuel);
    Derivation db = herringbone_derivation(b, k, fuel);

    VirtualEngine eng(fuel);
    struct Side {
      mpz_class dep;
      std::size_t t;
    };
    auto final_depth = [&](const Term& x, const Derivation& d) -> Side {
      // Steer x.u_k to u_{k+1}, replacing every Contract by an absorption
      // into the next partial-power; x rides along as the left-spine subterm
      // that starts at depth 1.
      Term w = apply(x, herringbone(k));
      mpz_class dep = 1;
      std::size_t t = 0;
      for (const Step& s : d.steps) {
        VirtualEngine::VD vd;
        if (s.dir == StepDir::Expand) {
          vd = eng.step(eng.intern(w), s.pos);
          w = ld_step(w, s.pos, StepDir::Expand);
        } else {
          w = ld_step(w, s.pos, StepDir::Contract);
          vd = vd_absorb(eng, w, s.pos, 0);
        }
        for (std::size_t j = 0; j < t; ++j) vd = eng.lift(vd);
        dep = eng.track(vd, dep);
        if (s.dir == StepDir::Contract) ++t;
      }
      // w is now u_{k+1} and dep lives in partial^t(u_{k+1}).
      return {dep, t};
    };

    Side sa = final_depth(a, da);
    Side sb = final_depth(b, db);
    // Bring both subterms into the same word by padding the lower side with
    // witness derivations up to the common partial-power.  Tracking through
    // any shared derivation suffix is strictly monotone in the depth, so
    // comparing at the smallest common power already decides the order;
    // padding both sides further could never flip the verdict (and the
    // measures involved grow as a tower of exponentials with each power).
    const std::size_t common = std::max(sa.t, sb.t);
    auto pad = [&](Side& s) {
      VirtualEngine::VT cur = eng.intern(herringbone(k + 1));
      for (std::size_t j = 0; j < s.t; ++j) cur = eng.partial(cur);
      for (std::size_t j = s.t; j < common; ++j) {
        s.dep = eng.track(eng.we(cur), s.dep);
        cur = eng.partial(cur);
      }
    };
    pad(sa);
    pad(sb);
    const mpz_class& dep_a = sa.dep;
    const mpz_class& dep_b = sb.dep;
    if (dep_a == dep_b) return {Verdict::Equiv, {}};
    // Deeper on the common left spine means more right factors stripped off,
    // i.e. the smaller element.
    return {dep_a > dep_b ? Verdict::Less : Verdict::Greater, {}};
  } catch (const FuelError& e) {
    return {Verdict::OutOfFuel, e.stage};
  }
}

CompositionForm normalize_composition(const Term& p) {
  switch (p->kind) {
    case NodeKind::One:
      return {{one()}};
    case NodeKind::Zero:
      throw DomainError("normalize_composition expects a word without 0");
    case NodeKind::Compose: {
      CompositionForm l = normalize_composition(p->left);
      CompositionForm r = normalize_composition(p->right);
      l.parts.insert(l.parts.end(), r.parts.begin(), r.parts.end());
      return l;
    }
    case NodeKind::Apply: {
      CompositionForm l = normalize_composition(p->left);
      CompositionForm r = normalize_composition(p->right);
      CompositionForm out;
      out.parts.reserve(r.parts.size());
      for (const Term& bj : r.parts) {
        Term t = bj;
        for (auto it = l.parts.rbegin(); it != l.parts.rend(); ++it) t = apply(*it, t);
        out.parts.push_back(t);
      }
      return out;
    }
  }
  throw Error("unreachable");
}

std::vector<Term> spine_decompose(const Term& a) {
  if (!is_a_term(a)) throw DomainError("spine_decompose expects an A-term");
  std::vector<Term> parts;
  Term cur = a;
  while (cur->kind == NodeKind::Apply) {
    parts.push_back(cur->left);
    cur = cur->right;
  }
  return parts;
}

Term spine_compose(const std::vector<Term>& parts) {
  Term t = one();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) t = apply(*it, t);
  return t;
}

}  // namespace laver
