#include "laver/vtrack.hpp"

#include <deque>
#include <tuple>

namespace laver {

namespace {

bool all_left(const Position& p) {
  for (Dir d : p)
    if (d != Dir::Left) return false;
  return true;
}

// Leaf counts of iterated partial-images grow as a tower of exponentials;
// beyond a few levels they stop fitting in memory entirely.  Any measure
// crossing this bit size aborts the computation as an honest out-of-fuel.
constexpr std::size_t kMaxMeasureBits = std::size_t{1} << 26;

void check_size(const mpz_class& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > kMaxMeasureBits)
    throw FuelError("virtual", "measure exceeds representable size");
}

// The recursions below follow the structure of lazily expanded terms, which
// can nest millions deep before any budget counter notices; cap the depth so
// exhaustion surfaces as an exception instead of a blown stack.
constexpr int kMaxRecursionDepth = 8000;

struct DepthGuard {
  int& depth;
  explicit DepthGuard(int& d) : depth(d) {
    if (++depth > kMaxRecursionDepth)
      throw FuelError("virtual", "expansion nests too deeply");
  }
  ~DepthGuard() { --depth; }
};

}  // namespace

struct VirtualEngine::Impl {
  std::deque<VTerm> term_pool;
  std::deque<VDeriv> deriv_pool;
  // Interning keys: flat integer encodings of (kind, child pointers, pos).
  std::map<std::vector<std::uintptr_t>, VT> term_index;
  std::map<std::vector<std::uintptr_t>, VD> deriv_index;
  std::map<std::pair<VD, mpz_class>, mpz_class> track_memo;
  std::map<std::pair<VT, mpz_class>, mpz_class> we_memo;
  VT one = nullptr;
  int depth = 0;
};

VirtualEngine::VirtualEngine(Fuel& fuel) : impl_(std::make_unique<Impl>()), fuel_(fuel) {
  VTerm unit{};
  unit.kind = TK::One;
  impl_->term_pool.push_back(std::move(unit));
  impl_->one = &impl_->term_pool.back();
}

VirtualEngine::~VirtualEngine() = default;

// --- term interning ----------------------------------------------------------

VirtualEngine::VT VirtualEngine::one() { return impl_->one; }

VirtualEngine::VT VirtualEngine::intern_vt(TK kind, VT a, VT b) {
  std::vector<std::uintptr_t> key{static_cast<std::uintptr_t>(kind),
                                  reinterpret_cast<std::uintptr_t>(a),
                                  reinterpret_cast<std::uintptr_t>(b)};
  auto it = impl_->term_index.find(key);
  if (it != impl_->term_index.end()) return it->second;
  fuel_.spend("virtual");
  VTerm n{};
  n.kind = kind;
  n.a = a;
  n.b = b;
  impl_->term_pool.push_back(std::move(n));
  VT t = &impl_->term_pool.back();
  impl_->term_index.emplace(std::move(key), t);
  return t;
}

VirtualEngine::VT VirtualEngine::app(VT a, VT b) { return intern_vt(TK::App, a, b); }
VirtualEngine::VT VirtualEngine::otimes(VT a, VT b) { return intern_vt(TK::Otimes, a, b); }
VirtualEngine::VT VirtualEngine::partial(VT a) { return intern_vt(TK::Partial, a, nullptr); }

VirtualEngine::VT VirtualEngine::intern(const Term& t) {
  switch (t->kind) {
    case NodeKind::One:
      return one();
    case NodeKind::Apply:
      return app(intern(t->left), intern(t->right));
    default:
      throw DomainError("virtual engine handles A-terms only");
  }
}

// --- measures ----------------------------------------------------------------

VirtualEngine::VT VirtualEngine::whnf(VT t) {
  DepthGuard guard(impl_->depth);
  if (t->whnf_c) return t->whnf_c;
  VT r = t;
  switch (t->kind) {
    case TK::One:
    case TK::App:
      break;
    case TK::Otimes: {
      VT w = whnf(t->b);
      r = (w->kind == TK::One) ? app(t->a, one())
                               : app(otimes(t->a, w->a), otimes(t->a, w->b));
      break;
    }
    case TK::Partial: {
      VT w = whnf(t->a);
      r = (w->kind == TK::One) ? one() : whnf(otimes(partial(w->a), partial(w->b)));
      break;
    }
  }
  t->whnf_c = r;
  return r;
}

const mpz_class& VirtualEngine::leaves(VT t) {
  DepthGuard guard(impl_->depth);
  if (t->leaves_c) return *t->leaves_c;
  mpz_class r;
  switch (t->kind) {
    case TK::One:
      r = 1;
      break;
    case TK::App:
      r = leaves(t->a) + leaves(t->b);
      break;
    case TK::Otimes:
      r = leaves(t->b) * (leaves(t->a) + 1);
      break;
    case TK::Partial: {
      VT w = whnf(t->a);
      if (w->kind == TK::One)
        r = 1;
      else
        r = leaves(partial(w->b)) * (leaves(partial(w->a)) + 1);
      break;
    }
  }
  check_size(r);
  t->leaves_c = r;
  return *t->leaves_c;
}

const mpz_class& VirtualEngine::spine(VT t) {
  DepthGuard guard(impl_->depth);
  if (t->spine_c) return *t->spine_c;
  mpz_class r;
  switch (t->kind) {
    case TK::One:
      r = 0;
      break;
    case TK::App:
      r = spine(t->a) + 1;
      break;
    case TK::Otimes:
      r = spine(t->a) + spine(t->b) + 1;
      break;
    case TK::Partial:
      // partial(x) has exactly leaves(x) iterated left subterms... one fewer
      // than its leaf count at every level: spine(partial x) = leaves(x) - 1.
      r = leaves(t->a) - 1;
      break;
  }
  t->spine_c = r;
  return *t->spine_c;
}

VirtualEngine::VT VirtualEngine::spine_subterm(VT t, const mpz_class& d) {
  if (d == 0) return t;
  VT w = whnf(t);
  if (w->kind != TK::App) throw DomainError("spine_subterm: depth exceeds left spine");
  return spine_subterm(w->a, d - 1);
}

Term VirtualEngine::materialize(VT t, std::uint64_t max_leaves) {
  if (leaves(t) > max_leaves) throw ResourceError("virtual term too large to materialize");
  switch (t->kind) {
    case TK::One:
      return laver::one();
    case TK::App:
      return laver::apply(materialize(t->a, max_leaves), materialize(t->b, max_leaves));
    case TK::Otimes:
      return laver::otimes(materialize(t->a, max_leaves), materialize(t->b, max_leaves));
    case TK::Partial:
      return laver::partial(materialize(t->a, max_leaves));
  }
  throw Error("unreachable");
}

// --- derivation interning ----------------------------------------------------

VirtualEngine::VD VirtualEngine::intern_vd(VDeriv n) {
  std::vector<std::uintptr_t> key{static_cast<std::uintptr_t>(n.kind),
                                  reinterpret_cast<std::uintptr_t>(n.inner),
                                  reinterpret_cast<std::uintptr_t>(n.t1),
                                  reinterpret_cast<std::uintptr_t>(n.t2),
                                  reinterpret_cast<std::uintptr_t>(n.t3)};
  for (VD c : n.children) key.push_back(reinterpret_cast<std::uintptr_t>(c));
  key.push_back(n.children.size());
  for (Dir d : n.pos) key.push_back(static_cast<std::uintptr_t>(d) + 2);
  auto it = impl_->deriv_index.find(key);
  if (it != impl_->deriv_index.end()) return it->second;
  fuel_.spend("virtual");
  impl_->deriv_pool.push_back(std::move(n));
  VD p = &impl_->deriv_pool.back();
  impl_->deriv_index.emplace(std::move(key), p);
  return p;
}

VirtualEngine::VD VirtualEngine::empty(VT word) {
  VDeriv n{};
  n.kind = DK::Empty;
  n.t1 = word;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::concat(std::vector<VD> parts) {
  if (parts.empty()) throw DomainError("concat of no derivations");
  if (parts.size() == 1) return parts[0];
  VDeriv n{};
  n.kind = DK::Concat;
  n.children = std::move(parts);
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::mapl(VD d, VT right_sibling) {
  VDeriv n{};
  n.kind = DK::MapL;
  n.inner = d;
  n.t1 = right_sibling;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::mapr(VT left_sibling, VD d) {
  VDeriv n{};
  n.kind = DK::MapR;
  n.inner = d;
  n.t1 = left_sibling;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::step(VT word, Position pos) {
  VDeriv n{};
  n.kind = DK::Step;
  n.t1 = word;
  n.pos = std::move(pos);
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::we(VT x) {
  VDeriv n{};
  n.kind = DK::WE;
  n.t1 = x;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::dist(VT u, VT v) {
  VDeriv n{};
  n.kind = DK::Dist;
  n.t1 = u;
  n.t2 = v;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::omap(VT u, VD e) {
  VDeriv n{};
  n.kind = DK::OMap;
  n.t1 = u;
  n.inner = e;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::omonol(VD e, VT v) {
  VDeriv n{};
  n.kind = DK::OMonoL;
  n.inner = e;
  n.t1 = v;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::two(VT a, VT b, VT c) {
  VDeriv n{};
  n.kind = DK::Two;
  n.t1 = a;
  n.t2 = b;
  n.t3 = c;
  return intern_vd(std::move(n));
}
VirtualEngine::VD VirtualEngine::lift(VD d) {
  VDeriv n{};
  n.kind = DK::Lift;
  n.inner = d;
  return intern_vd(std::move(n));
}

// --- endpoints ---------------------------------------------------------------

// Single Expand step on a virtual word, head-normalizing just along the path.
static VirtualEngine::VT vstep(VirtualEngine& eng, VirtualEngine::VT w, const Position& pos,
                               std::size_t i) {
  VirtualEngine::VT h = eng.whnf(w);
  if (h->kind != VirtualEngine::TK::App) throw RewriteError("virtual step: position not a redex");
  if (i == pos.size()) {
    VirtualEngine::VT r = eng.whnf(h->b);
    if (r->kind != VirtualEngine::TK::App)
      throw RewriteError("virtual step: position not a redex");
    return eng.app(eng.app(h->a, r->a), eng.app(h->a, r->b));
  }
  if (pos[i] == Dir::Left) return eng.app(vstep(eng, h->a, pos, i + 1), h->b);
  return eng.app(h->a, vstep(eng, h->b, pos, i + 1));
}

VirtualEngine::VT VirtualEngine::start(VD d) {
  if (d->start_c) return d->start_c;
  VT r = nullptr;
  switch (d->kind) {
    case DK::Empty:
    case DK::Step:
      r = d->t1;
      break;
    case DK::Concat:
      r = start(d->children.front());
      break;
    case DK::MapL:
      r = app(start(d->inner), d->t1);
      break;
    case DK::MapR:
      r = app(d->t1, start(d->inner));
      break;
    case DK::WE:
      r = d->t1;
      break;
    case DK::Dist:
      r = app(d->t1, d->t2);
      break;
    case DK::OMap:
      r = otimes(d->t1, start(d->inner));
      break;
    case DK::OMonoL:
      r = otimes(start(d->inner), d->t1);
      break;
    case DK::Two:
      r = otimes(d->t1, otimes(d->t2, d->t3));
      break;
    case DK::Lift:
      r = partial(start(d->inner));
      break;
  }
  d->start_c = r;
  return r;
}

VirtualEngine::VT VirtualEngine::end(VD d) {
  if (d->end_c) return d->end_c;
  VT r = nullptr;
  switch (d->kind) {
    case DK::Empty:
      r = d->t1;
      break;
    case DK::Concat:
      r = end(d->children.back());
      break;
    case DK::MapL:
      r = app(end(d->inner), d->t1);
      break;
    case DK::MapR:
      r = app(d->t1, end(d->inner));
      break;
    case DK::Step:
      r = vstep(*this, d->t1, d->pos, 0);
      break;
    case DK::WE:
      r = partial(d->t1);
      break;
    case DK::Dist:
      r = otimes(d->t1, d->t2);
      break;
    case DK::OMap:
      r = otimes(d->t1, end(d->inner));
      break;
    case DK::OMonoL:
      r = otimes(end(d->inner), d->t1);
      break;
    case DK::Two:
      r = otimes(otimes(d->t1, d->t2), otimes(d->t1, d->t3));
      break;
    case DK::Lift:
      r = partial(end(d->inner));
      break;
  }
  d->end_c = r;
  return r;
}

// --- structural expansion ----------------------------------------------------

VirtualEngine::VD VirtualEngine::decompose_one(VD d) {
  switch (d->kind) {
    case DK::WE: {
      VT w = whnf(d->t1);
      if (w->kind == TK::One) return empty(d->t1);
      return concat({mapl(we(w->a), w->b), mapr(partial(w->a), we(w->b)),
                     dist(partial(w->a), partial(w->b))});
    }
    case DK::Dist: {
      VT u = d->t1;
      VT w = whnf(d->t2);
      if (w->kind == TK::One) return empty(otimes(u, d->t2));
      return concat({step(app(u, d->t2), {}), mapl(dist(u, w->a), app(u, w->b)),
                     mapr(otimes(u, w->a), dist(u, w->b))});
    }
    case DK::OMap: {
      VT u = d->t1;
      VD p = primitive_of(d->inner);
      switch (p->kind) {
        case DK::Empty:
          return empty(otimes(u, p->t1));
        case DK::Concat: {
          std::vector<VD> cs;
          cs.reserve(p->children.size());
          for (VD c : p->children) cs.push_back(omap(u, c));
          return concat(std::move(cs));
        }
        case DK::MapL:
          return mapl(omap(u, p->inner), otimes(u, p->t1));
        case DK::MapR:
          return mapr(otimes(u, p->t1), omap(u, p->inner));
        case DK::Step:
          return step(otimes(u, p->t1), p->pos);
        default:
          throw Error("unreachable");
      }
    }
    case DK::OMonoL: {
      VT w = whnf(d->t1);
      if (w->kind == TK::One) return mapl(d->inner, one());
      return concat({mapl(omonol(d->inner, w->a), otimes(start(d->inner), w->b)),
                     mapr(otimes(end(d->inner), w->a), omonol(d->inner, w->b))});
    }
    case DK::Two: {
      VT a = d->t1, b = d->t2;
      VT w = whnf(d->t3);
      if (w->kind == TK::One)
        return concat({step(start(d), {}), mapl(dist(otimes(a, b), a), app(otimes(a, b), one()))});
      return concat({mapl(two(a, b, w->a), otimes(a, otimes(b, w->b))),
                     mapr(otimes(otimes(a, b), otimes(a, w->a)), two(a, b, w->b))});
    }
    default:
      throw Error("decompose_one: not a closed-form combinator");
  }
}

VirtualEngine::VD VirtualEngine::primitive_of(VD d) {
  switch (d->kind) {
    case DK::Empty:
    case DK::Concat:
    case DK::MapL:
    case DK::MapR:
    case DK::Step:
      return d;
    case DK::Lift:
      return primitive_of(resolve_lift(d));
    default:
      return decompose_one(d);
  }
}

VirtualEngine::VD VirtualEngine::lift_of_step(VT word, const Position& pos, std::size_t i) {
  VT h = whnf(word);
  if (h->kind != TK::App) throw RewriteError("virtual lift: position not a redex");
  if (i == pos.size()) {
    VT r = whnf(h->b);
    if (r->kind != TK::App) throw RewriteError("virtual lift: position not a redex");
    return two(partial(h->a), partial(r->a), partial(r->b));
  }
  if (pos[i] == Dir::Left) return omonol(lift_of_step(h->a, pos, i + 1), partial(h->b));
  return omap(partial(h->a), lift_of_step(h->b, pos, i + 1));
}

VirtualEngine::VD VirtualEngine::resolve_lift(VD d) {
  if (d->resolved) return d->resolved;
  VD in = d->inner;
  VD r = nullptr;
  switch (in->kind) {
    case DK::Empty:
      r = empty(partial(in->t1));
      break;
    case DK::Concat: {
      std::vector<VD> cs;
      cs.reserve(in->children.size());
      for (VD c : in->children) cs.push_back(lift(c));
      r = concat(std::move(cs));
      break;
    }
    case DK::MapL:
      r = omonol(lift(in->inner), partial(in->t1));
      break;
    case DK::MapR:
      r = omap(partial(in->t1), lift(in->inner));
      break;
    case DK::Step:
      r = lift_of_step(in->t1, in->pos, 0);
      break;
    case DK::WE:
      r = we(partial(in->t1));
      break;
    case DK::Lift:
      r = resolve_lift(lift(resolve_lift(in)));
      break;
    default:
      r = resolve_lift(lift(decompose_one(in)));
      break;
  }
  d->resolved = r;
  return r;
}

// --- tracking ----------------------------------------------------------------

// Final spine depth after the witness derivation x -> partial(x) of the
// subterm starting at spine depth d of x.
mpz_class VirtualEngine::we_depth(VT x, const mpz_class& d) {
  if (d == 0) return 0;
  auto key = std::make_pair(x, d);
  auto it = impl_->we_memo.find(key);
  if (it != impl_->we_memo.end()) return it->second;
  DepthGuard guard(impl_->depth);
  fuel_.spend("virtual");
  mpz_class r;
  switch (x->kind) {
    case TK::One:
      throw DomainError("tracking depth exceeds left spine");
    case TK::App:
      // mapl(WE(a)) then dist(partial a, partial b): the dist phase pushes
      // the whole spine down by spine(partial b) = leaves(b) - 1.
      r = leaves(x->b) + we_depth(x->a, d - 1);
      break;
    case TK::Otimes: {
      const mpz_class& sv = spine(x->b);
      if (d <= sv)
        r = (leaves(x->a) + 1) * we_depth(x->b, d);
      else
        r = (leaves(x->a) + 1) * (leaves(x->b) - 1) + 1 + we_depth(x->a, d - sv - 1);
      break;
    }
    case TK::Partial:
      r = we_depth(whnf(x), d);
      break;
  }
  check_size(r);
  impl_->we_memo.emplace(std::move(key), r);
  return r;
}

mpz_class VirtualEngine::track(VD d, const mpz_class& depth) {
  if (depth < 1) throw DomainError("track expects spine depth >= 1");
  auto key = std::make_pair(d, depth);
  auto it = impl_->track_memo.find(key);
  if (it != impl_->track_memo.end()) return it->second;
  DepthGuard guard(impl_->depth);
  fuel_.spend("virtual");
  mpz_class r;
  switch (d->kind) {
    case DK::Empty:
      r = depth;
      break;
    case DK::Concat: {
      r = depth;
      for (VD c : d->children) r = track(c, r);
      break;
    }
    case DK::MapL:
      r = (depth == 1) ? mpz_class(1) : mpz_class(1 + track(d->inner, depth - 1));
      break;
    case DK::MapR:
      r = depth;
      break;
    case DK::Step:
      r = (all_left(d->pos) && depth > static_cast<long>(d->pos.size())) ? depth + 1 : depth;
      break;
    case DK::WE:
      r = we_depth(d->t1, depth);
      break;
    case DK::Dist:
      r = depth + spine(d->t2);
      break;
    case DK::OMap: {
      const mpz_class& sv = spine(start(d->inner));
      r = (depth <= sv) ? track(d->inner, depth) : depth - sv + spine(end(d->inner));
      break;
    }
    case DK::OMonoL: {
      const mpz_class& sv = spine(d->t1);
      r = (depth <= sv + 1) ? depth : sv + 1 + track(d->inner, depth - sv - 1);
      break;
    }
    case DK::Two: {
      r = (depth <= spine(d->t3)) ? depth : depth + spine(d->t1) + 1;
      break;
    }
    case DK::Lift:
      r = track(resolve_lift(d), depth);
      break;
  }
  check_size(r);
  impl_->track_memo.emplace(std::move(key), r);
  return r;
}

// --- materialization of step lists ------------------------------------------

void VirtualEngine::mat_steps(VD d, Position& prefix, std::vector<Step>& out,
                              std::uint64_t max_steps) {
  if (out.size() > max_steps) throw ResourceError("derivation too long to materialize");
  switch (d->kind) {
    case DK::Empty:
      return;
    case DK::Concat:
      for (VD c : d->children) mat_steps(c, prefix, out, max_steps);
      return;
    case DK::MapL:
      prefix.push_back(Dir::Left);
      mat_steps(d->inner, prefix, out, max_steps);
      prefix.pop_back();
      return;
    case DK::MapR:
      prefix.push_back(Dir::Right);
      mat_steps(d->inner, prefix, out, max_steps);
      prefix.pop_back();
      return;
    case DK::Step: {
      Position p = prefix;
      p.insert(p.end(), d->pos.begin(), d->pos.end());
      out.push_back({std::move(p), StepDir::Expand});
      return;
    }
    case DK::Lift:
      mat_steps(resolve_lift(d), prefix, out, max_steps);
      return;
    default:
      mat_steps(decompose_one(d), prefix, out, max_steps);
      return;
  }
}

std::vector<Step> VirtualEngine::materialize_steps(VD d, std::uint64_t max_steps) {
  std::vector<Step> out;
  Position prefix;
  mat_steps(d, prefix, out, max_steps);
  return out;
}

}  // namespace laver
