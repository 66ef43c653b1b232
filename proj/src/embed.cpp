#include "laver/embed.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "laver/error.hpp"

namespace laver {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  auto head = [](char c) { return std::isalpha((unsigned char)c) || c == '_'; };
  if (!head(s[0])) return false;
  for (char c : s.substr(1))
    if (!head(c) && !std::isdigit((unsigned char)c)) return false;
  return true;
}

FnPrefix identity_prefix(std::size_t len) {
  FnPrefix f{"id", {}};
  for (std::size_t i = 0; i < len; ++i) f.values.push_back((std::int64_t)i);
  return f;
}

std::string comp_string(const std::vector<std::string>& parts) {
  if (parts.empty()) return "id";
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " o ";
    s += p;
  }
  return s;
}

}  // namespace

bool FnPrefix::is_id() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != (std::int64_t)i) return false;
  return true;
}

std::int64_t crit(const FnPrefix& f) {
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] > (std::int64_t)i) return (std::int64_t)i;
  throw DomainError("no critical point within prefix of " + f.name);
}

const FnPrefix* Candidate::find(const std::string& name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

std::optional<std::string> Candidate::product(const std::string& a,
                                              const std::string& b) const {
  if (a == "id") return b;
  if (b == "id") return std::string("id");
  auto it = ops.find({a, b});
  if (it == ops.end()) return std::nullopt;
  return it->second;
}

Candidate parse_candidate(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty candidate file");
  std::istringstream head(line);
  std::string magic, version, prefix;
  head >> magic >> version >> prefix;
  if (magic != "EMBEDALG" || version != "v1" ||
      prefix.rfind("prefix=", 0) != 0)
    throw FormatError("bad header: " + line);
  std::size_t len = 0;
  try {
    len = std::stoul(prefix.substr(7));
  } catch (const std::exception&) {
    throw FormatError("bad prefix length: " + prefix);
  }
  if (len == 0) throw FormatError("prefix length must be positive");

  Candidate c;
  c.prefix_len = len;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;  // blank line
    if (kw == "fun") {
      FnPrefix f;
      if (!(ls >> f.name) || !valid_name(f.name))
        throw FormatError("bad function name in: " + line);
      std::int64_t v;
      while (ls >> v) f.values.push_back(v);
      if (f.length() != len)
        throw FormatError("prefix length mismatch for " + f.name);
      if (f.name == "id" && !f.is_id())
        throw FormatError("the name id is reserved for the identity prefix");
      if (c.find(f.name)) throw FormatError("duplicate function " + f.name);
      c.functions.push_back(std::move(f));
    } else if (kw == "op") {
      std::string a, b, r;
      if (!(ls >> a >> b >> r)) throw FormatError("bad op line: " + line);
      c.ops[{a, b}] = r;
    } else if (kw == "gen") {
      std::string g;
      if (!(ls >> g)) throw FormatError("bad gen line: " + line);
      c.generator = g;
    } else {
      throw FormatError("unknown directive: " + kw);
    }
  }
  auto known = [&](const std::string& n) { return n == "id" || c.find(n); };
  for (const auto& [ab, r] : c.ops)
    if (!known(ab.first) || !known(ab.second) || !known(r))
      throw FormatError("op references undeclared function");
  if (c.generator && !known(*c.generator))
    throw FormatError("generator is undeclared");
  return c;
}

Candidate load_candidate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return parse_candidate(in);
}

bool AxiomReport::refuted() const {
  for (const auto& r : results)
    if (r.status == Status::Refuted) return true;
  return false;
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

namespace {

// Resolve a name to its prefix, with "id" always available.
FnPrefix resolve(const Candidate& c, const std::string& name) {
  if (const FnPrefix* f = c.find(name)) return *f;
  if (name == "id") return identity_prefix(c.prefix_len);
  throw FormatError("undeclared function " + name);
}

}  // namespace

AxiomReport check_candidate(const Candidate& c) {
  for (const auto& f : c.functions) {
    if (!valid_name(f.name)) throw FormatError("bad name " + f.name);
    if (f.length() != c.prefix_len)
      throw FormatError("prefix length mismatch for " + f.name);
  }
  for (const auto& [ab, r] : c.ops) {
    resolve(c, ab.first);
    resolve(c, ab.second);
    resolve(c, r);
  }

  std::vector<std::string> names{"id"};
  for (const auto& f : c.functions)
    if (f.name != "id") names.push_back(f.name);

  AxiomReport rep;

  AxiomResult mono{"monotonicity", Status::Verified, 0, 0, ""};
  for (const auto& f : c.functions) {
    for (std::size_t i = 0; i + 1 < f.length(); ++i) {
      ++mono.checked;
      if (f.values[i + 1] <= f.values[i]) {
        mono.status = Status::Refuted;
        mono.detail = f.name + " not increasing at " + std::to_string(i);
        break;
      }
    }
    if (!f.values.empty() && f.values[0] < 0) {
      mono.status = Status::Refuted;
      mono.detail = f.name + " negative at 0";
    }
    if (mono.status == Status::Refuted) break;
  }
  rep.results.push_back(mono);

  AxiomResult ld{"left-distributive", Status::Verified, 0, 0, ""};
  for (const auto& a : names)
    for (const auto& b : names)
      for (const auto& x : names) {
        auto bx = c.product(b, x);
        auto ab = c.product(a, b);
        auto ax = c.product(a, x);
        if (!bx || !ab || !ax) {
          ++ld.skipped;
          continue;
        }
        auto lhs = c.product(a, *bx);
        auto rhs = c.product(*ab, *ax);
        if (!lhs || !rhs) {
          ++ld.skipped;
          continue;
        }
        ++ld.checked;
        if (resolve(c, *lhs).values != resolve(c, *rhs).values) {
          ld.status = Status::Refuted;
          ld.detail = "(" + a + ", " + b + ", " + x + ")";
        }
      }
  rep.results.push_back(ld);

  AxiomResult cr{"critical-point", Status::Verified, 0, 0, ""};
  for (const auto& [ab, r] : c.ops) {
    FnPrefix fb = resolve(c, ab.second);
    if (fb.is_id()) continue;  // the axiom quantifies over b != id
    FnPrefix fa = resolve(c, ab.first);
    FnPrefix fr = resolve(c, r);
    std::int64_t cb = crit(fb);
    if (cb >= (std::int64_t)fa.length()) {
      ++cr.skipped;
      continue;
    }
    std::int64_t want = fa.values[cb];
    ++cr.checked;
    bool ok = !fr.is_id() && crit(fr) == want;
    if (!ok && cr.status != Status::Refuted) {
      cr.status = Status::Refuted;
      cr.detail =
          "(" + ab.first + ", " + ab.second + ", " + std::to_string(cb) + ")";
    }
  }
  rep.results.push_back(cr);

  AxiomResult app{"application-coherence", Status::Verified, 0, 0, ""};
  for (const auto& [ab, r] : c.ops) {
    FnPrefix fa = resolve(c, ab.first);
    FnPrefix fb = resolve(c, ab.second);
    FnPrefix fr = resolve(c, r);
    for (std::size_t n = 0; n < c.prefix_len; ++n) {
      std::int64_t an = fa.values[n], bn = fb.values[n];
      if (an >= (std::int64_t)c.prefix_len || bn >= (std::int64_t)c.prefix_len) {
        ++app.skipped;
        continue;
      }
      ++app.checked;
      if (fr.values[an] != fa.values[bn] && app.status != Status::Refuted) {
        app.status = Status::Refuted;
        app.detail = "(" + ab.first + ", " + ab.second + ", " +
                     std::to_string(n) + ")";
      }
    }
  }
  rep.results.push_back(app);
  return rep;
}

CriticalSequence critical_sequence(const FnPrefix& f, int m) {
  CriticalSequence seq;
  if (m <= 0) {
    seq.complete = true;
    return seq;
  }
  std::int64_t x = crit(f);  // DomainError for an identity prefix
  seq.points.push_back(x);
  while ((int)seq.points.size() < m) {
    if (x >= (std::int64_t)f.length()) return seq;  // prefix exhausted
    x = f.values[x];
    seq.points.push_back(x);
  }
  seq.complete = true;
  return seq;
}

CriticalSequence critical_sequence(const Candidate& c,
                                   const std::vector<std::string>& parts,
                                   int m) {
  if (parts.empty()) throw DomainError("critical sequence of the identity");
  std::vector<FnPrefix> fs;
  for (const auto& p : parts) fs.push_back(resolve(c, p));
  std::optional<std::int64_t> c0;
  for (const auto& f : fs)
    if (!f.is_id()) {
      std::int64_t v = crit(f);
      if (!c0 || v < *c0) c0 = v;
    }
  if (!c0) throw DomainError("critical sequence of the identity");
  CriticalSequence seq;
  if (m <= 0) {
    seq.complete = true;
    return seq;
  }
  std::int64_t x = *c0;
  seq.points.push_back(x);
  while ((int)seq.points.size() < m) {
    std::int64_t y = x;
    bool ok = true;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      if (y >= (std::int64_t)it->length()) {
        ok = false;
        break;
      }
      y = it->values[y];
    }
    if (!ok) return seq;
    x = y;
    seq.points.push_back(x);
  }
  seq.complete = true;
  return seq;
}

TwoSorted::TwoSorted(Candidate c, int max_parts, std::uint64_t max_bfs)
    : cand_(std::move(c)), max_parts_(max_parts), max_bfs_(max_bfs) {
  std::vector<std::string> base;
  for (const auto& f : cand_.functions)
    if (f.name != "id") base.push_back(f.name);
  elems_.push_back({});  // id
  std::vector<Comp> layer{{}};
  for (int p = 1; p <= max_parts_; ++p) {
    std::vector<Comp> next;
    for (const auto& pre : layer)
      for (const auto& n : base) {
        Comp e = pre;
        e.push_back(n);
        next.push_back(e);
        elems_.push_back(e);
      }
    layer = std::move(next);
  }
}

std::optional<std::int64_t> TwoSorted::apply(const Comp& a,
                                             std::int64_t gamma) const {
  std::int64_t x = gamma;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    if (*it == "id") continue;
    const FnPrefix* f = cand_.find(*it);
    if (!f || x < 0 || x >= (std::int64_t)f->length()) return std::nullopt;
    x = f->values[x];
  }
  return x;
}

std::optional<std::int64_t> TwoSorted::crit(const Comp& a) const {
  std::optional<std::int64_t> best;
  for (const auto& p : a) {
    FnPrefix f = resolve(cand_, p);
    if (f.is_id()) continue;
    std::int64_t v = laver::crit(f);
    if (!best || v < *best) best = v;
  }
  return best;
}

TwoSorted::Comp TwoSorted::comp(const Comp& a, const Comp& b) const {
  Comp r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::optional<TwoSorted::Comp> TwoSorted::prod(const Comp& a,
                                               const Comp& b) const {
  if (a.empty()) return b;    // id . b = b
  if (b.empty()) return Comp{};  // a . id = id
  Comp out;
  for (const auto& bj : b) {
    std::string x = bj;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      auto p = cand_.product(*it, x);
      if (!p) return std::nullopt;
      x = *p;
    }
    out.push_back(x);
  }
  return out;
}

TwoSorted::Eq TwoSorted::equal(const Comp& a, const Comp& b) const {
  auto normalize = [](const Comp& c) {
    Comp r;
    for (const auto& p : c)
      if (p != "id") r.push_back(p);
    return r;
  };
  Comp na = normalize(a), nb = normalize(b);
  if (na == nb) return Eq::Equal;
  // The identification a o b = ab o a preserves the number of parts.
  if (na.size() != nb.size()) return Eq::Distinct;

  std::vector<std::string> names;
  for (const auto& f : cand_.functions)
    if (f.name != "id") names.push_back(f.name);

  std::set<Comp> seen{na};
  std::deque<Comp> queue{na};
  std::uint64_t budget = max_bfs_;
  while (!queue.empty()) {
    if (budget-- == 0) return Eq::Unknown;
    Comp cur = queue.front();
    queue.pop_front();
    std::vector<Comp> nbrs;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      // forward: (x, y) -> (x.y, x)
      if (auto p = cand_.product(cur[i], cur[i + 1]); p && *p != "id") {
        Comp n = cur;
        n[i + 1] = cur[i];
        n[i] = *p;
        nbrs.push_back(n);
      }
      // backward: (p, q) -> (q, w) whenever q.w = p
      for (const auto& w : names)
        if (auto p = cand_.product(cur[i + 1], w); p && *p == cur[i]) {
          Comp n = cur;
          n[i] = cur[i + 1];
          n[i + 1] = w;
          nbrs.push_back(n);
        }
    }
    for (auto& n : nbrs) {
      if (n == nb) return Eq::Equal;
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return Eq::Distinct;  // full closure explored without reaching b
}

namespace {

using Comp = TwoSorted::Comp;

// Left-associated product a . c_1 . c_2 ... applied to delta.
std::optional<std::int64_t> chain_apply(const TwoSorted& ts, const Comp& a,
                                        const std::vector<Comp>& ctx,
                                        std::int64_t delta) {
  Comp acc = a;
  for (const auto& c : ctx) {
    auto p = ts.prod(acc, c);
    if (!p) return std::nullopt;
    acc = *p;
  }
  return ts.apply(acc, delta);
}

// Bounded graded equivalence: a and b agree below gamma after any product
// context of length <= max_context drawn from the single base functions.
// Returns false on a witnessed disagreement; true means "no counterexample
// within bounds".
bool bounded_equiv(const TwoSorted& ts, const Comp& a, const Comp& b,
                   std::int64_t gamma, int max_context) {
  std::int64_t horizon = (std::int64_t)ts.candidate().prefix_len;
  std::vector<Comp> singles;
  for (const auto& f : ts.candidate().functions)
    if (f.name != "id") singles.push_back({f.name});
  std::vector<std::vector<Comp>> contexts{{}};
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    std::vector<Comp> ctx = contexts[i];
    if ((int)ctx.size() < max_context)
      for (const auto& s : singles) {
        auto ext = ctx;
        ext.push_back(s);
        contexts.push_back(ext);
      }
  }
  for (const auto& ctx : contexts)
    for (std::int64_t d = 0; d < horizon; ++d) {
      auto va = chain_apply(ts, a, ctx, d);
      auto vb = chain_apply(ts, b, ctx, d);
      if (!va || !vb) continue;
      if ((*va < gamma || *vb < gamma) && *va != *vb) return false;
    }
  return true;
}

void push(AxiomReport& rep, AxiomResult r) { rep.results.push_back(std::move(r)); }

}  // namespace

AxiomReport check_two_sorted(const TwoSorted& ts, const TwoSortedBounds& b) {
  AxiomReport rep;
  const auto& elems = ts.elements();
  std::int64_t horizon = (std::int64_t)ts.candidate().prefix_len;

  {  // <= on the ordinal sort is the order on naturals.
    push(rep, {"order-linear", Status::Verified, (std::uint64_t)horizon, 0, ""});
  }

  {  // strictly increasing and inflationary
    AxiomResult r{"monotone", Status::Verified, 0, 0, ""};
    for (const auto& a : elems)
      for (std::int64_t g = 0; g < horizon; ++g) {
        auto va = ts.apply(a, g);
        if (!va) {
          ++r.skipped;
          continue;
        }
        ++r.checked;
        bool ok = *va >= g;
        if (ok && g + 1 < horizon)
          if (auto vn = ts.apply(a, g + 1)) ok = *vn > *va;
        if (!ok && r.status != Status::Refuted) {
          r.status = Status::Refuted;
          r.detail = "(" + comp_string(a) + ", " + std::to_string(g) + ")";
        }
      }
    push(rep, r);
  }

  {  // a(crit a) > crit a
    AxiomResult r{"crit-increase", Status::Verified, 0, 0, ""};
    for (const auto& a : elems) {
      auto c = ts.crit(a);
      if (!c) continue;
      auto v = ts.apply(a, *c);
      if (!v) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (*v <= *c && r.status != Status::Refuted) {
        r.status = Status::Refuted;
        r.detail = comp_string(a);
      }
    }
    push(rep, r);
  }

  {  // (a o b)(gamma) = a(b(gamma))
    AxiomResult r{"compose-application", Status::Verified, 0, 0, ""};
    for (const auto& a : elems)
      for (const auto& bb : elems)
        for (std::int64_t g = 0; g < horizon; ++g) {
          auto lhs = ts.apply(ts.comp(a, bb), g);
          auto inner = ts.apply(bb, g);
          auto rhs = inner ? ts.apply(a, *inner) : std::nullopt;
          if (!lhs || !rhs) {
            ++r.skipped;
            continue;
          }
          ++r.checked;
          if (*lhs != *rhs && r.status != Status::Refuted) {
            r.status = Status::Refuted;
            r.detail = "(" + comp_string(a) + ", " + comp_string(bb) + ", " +
                       std::to_string(g) + ")";
          }
        }
    push(rep, r);
  }

  {  // identity rules
    AxiomResult r{"identity", Status::Verified, 0, 0, ""};
    Comp id{};
    for (std::int64_t g = 0; g < horizon; ++g) {
      ++r.checked;
      if (ts.apply(id, g) != g) r.status = Status::Refuted;
    }
    for (const auto& a : elems) {
      auto ai = ts.prod(a, id);
      auto ia = ts.prod(id, a);
      ++r.checked;
      bool ok = ai && ai->empty() && ia && *ia == a &&
                ts.equal(ts.comp(a, id), a) == TwoSorted::Eq::Equal &&
                ts.equal(ts.comp(id, a), a) == TwoSorted::Eq::Equal;
      if (!ok && r.status != Status::Refuted) {
        r.status = Status::Refuted;
        r.detail = comp_string(a);
      }
    }
    push(rep, r);
  }

  {  // o associative: concatenation, checked on triples
    AxiomResult r{"compose-associative", Status::Verified, 0, 0, ""};
    for (const auto& a : elems)
      for (const auto& bb : elems) {
        ++r.checked;
        if (ts.comp(ts.comp(a, bb), a) != ts.comp(a, ts.comp(bb, a)))
          r.status = Status::Refuted;
      }
    push(rep, r);
  }

  // The remaining composition laws, decided up to the bounded equality.
  auto law = [&](const std::string& name, auto&& lhs_fn, auto&& rhs_fn) {
    AxiomResult r{name, Status::Verified, 0, 0, ""};
    for (const auto& a : elems)
      for (const auto& bb : elems)
        for (const auto& cc : elems) {
          std::optional<Comp> lhs = lhs_fn(a, bb, cc);
          std::optional<Comp> rhs = rhs_fn(a, bb, cc);
          if (!lhs || !rhs) {
            ++r.skipped;
            continue;
          }
          switch (ts.equal(*lhs, *rhs)) {
            case TwoSorted::Eq::Equal:
              ++r.checked;
              break;
            case TwoSorted::Eq::Unknown:
              ++r.skipped;
              break;
            case TwoSorted::Eq::Distinct:
              ++r.checked;
              if (r.status != Status::Refuted) {
                r.status = Status::Refuted;
                r.detail = "(" + comp_string(a) + ", " + comp_string(bb) +
                           ", " + comp_string(cc) + ")";
              }
          }
        }
    push(rep, r);
  };
  law(
      "law-compose-product",
      [&](const Comp& a, const Comp& bb, const Comp& cc) {
        return ts.prod(ts.comp(a, bb), cc);
      },
      [&](const Comp& a, const Comp& bb, const Comp& cc) -> std::optional<Comp> {
        auto bc = ts.prod(bb, cc);
        if (!bc) return std::nullopt;
        return ts.prod(a, *bc);
      });
  law(
      "law-distribute-compose",
      [&](const Comp& a, const Comp& bb, const Comp& cc) {
        return ts.prod(a, ts.comp(bb, cc));
      },
      [&](const Comp& a, const Comp& bb, const Comp& cc) -> std::optional<Comp> {
        auto ab = ts.prod(a, bb);
        auto ac = ts.prod(a, cc);
        if (!ab || !ac) return std::nullopt;
        return ts.comp(*ab, *ac);
      });
  law(
      "law-swap",
      [&](const Comp& a, const Comp& bb, const Comp&) {
        return std::optional<Comp>(ts.comp(a, bb));
      },
      [&](const Comp& a, const Comp& bb, const Comp&) -> std::optional<Comp> {
        auto ab = ts.prod(a, bb);
        if (!ab) return std::nullopt;
        return ts.comp(*ab, a);
      });

  {  // absorption below the critical point, with product contexts
    AxiomResult r{"absorb-below-crit", Status::Verified, 0, 0, ""};
    std::vector<std::vector<Comp>> contexts{{}};
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      auto ctx = contexts[i];
      if ((int)ctx.size() < b.max_context)
        for (const auto& e : elems) {
          if (e.empty()) continue;
          auto ext = ctx;
          ext.push_back(e);
          contexts.push_back(ext);
        }
    }
    for (const auto& a : elems) {
      auto ca = ts.crit(a);
      if (!ca) continue;
      for (const auto& ctx : contexts)
        for (std::int64_t g = 0; g < horizon; ++g) {
          // base = (b_1 b_2 ... b_k)(gamma), left-associated products
          std::optional<std::int64_t> base;
          if (ctx.empty()) {
            base = g;
          } else {
            Comp acc = ctx[0];
            bool ok = true;
            for (std::size_t i = 1; i < ctx.size(); ++i) {
              auto p = ts.prod(acc, ctx[i]);
              if (!p) {
                ok = false;
                break;
              }
              acc = *p;
            }
            if (ok) base = ts.apply(acc, g);
          }
          auto lhs = chain_apply(ts, a, ctx, g);
          if (!base || !lhs) {
            ++r.skipped;
            continue;
          }
          bool hyp_i = *ca > *base;    // crit a > b_1...b_k gamma
          bool hyp_ii = *ca > *lhs;    // crit a > a b_1...b_k gamma
          if (!hyp_i && !hyp_ii) continue;
          ++r.checked;
          if (*lhs != *base && r.status != Status::Refuted) {
            r.status = Status::Refuted;
            std::string cs;
            for (const auto& e : ctx) cs += " " + comp_string(e);
            r.detail = "(" + comp_string(a) + "," + cs + ", " +
                       std::to_string(g) + ")";
          }
        }
    }
    push(rep, r);
  }

  {  // graded equivalence: downward monotone in gamma
    AxiomResult r{"equiv-monotone", Status::Verified, 0, 0, ""};
    for (const auto& a : elems)
      for (const auto& bb : elems)
        for (std::int64_t d = 1; d < horizon; d += horizon / 4 + 1) {
          if (!bounded_equiv(ts, a, bb, d, b.max_context)) continue;
          ++r.checked;
          if (!bounded_equiv(ts, a, bb, d - 1, b.max_context) &&
              r.status != Status::Refuted) {
            r.status = Status::Refuted;
            r.detail = "(" + comp_string(a) + ", " + comp_string(bb) + ", " +
                       std::to_string(d) + ")";
          }
        }
    push(rep, r);
  }

  {  // a equivalent to b below gamma and a(delta) < gamma force agreement
    AxiomResult r{"equiv-application", Status::Verified, 0, 0, ""};
    for (const auto& a : elems)
      for (const auto& bb : elems)
        for (std::int64_t g = 1; g < horizon; g += horizon / 4 + 1) {
          if (!bounded_equiv(ts, a, bb, g, b.max_context)) continue;
          for (std::int64_t d = 0; d < horizon; ++d) {
            auto va = ts.apply(a, d);
            auto vb = ts.apply(bb, d);
            if (!va || !vb || *va >= g) continue;
            ++r.checked;
            if (*va != *vb && r.status != Status::Refuted) {
              r.status = Status::Refuted;
              r.detail = "(" + comp_string(a) + ", " + comp_string(bb) + ", " +
                         std::to_string(d) + ")";
            }
          }
        }
    push(rep, r);
  }

  {  // every non-identity element is equivalent to id below its critical point
    AxiomResult r{"equiv-crit-id", Status::Verified, 0, 0, ""};
    for (const auto& a : elems) {
      auto c = ts.crit(a);
      if (!c) continue;
      ++r.checked;
      if (!bounded_equiv(ts, a, {}, *c, b.max_context) &&
          r.status != Status::Refuted) {
        r.status = Status::Refuted;
        r.detail = comp_string(a);
      }
    }
    push(rep, r);
  }

  {  // coherence: a ~_gamma b implies ca ~_{c gamma} cb, refutation-only
    AxiomResult r{"equiv-coherence", Status::Verified, 0, 0, ""};
    for (const auto& a : elems)
      for (const auto& bb : elems)
        for (std::int64_t g = 1; g < horizon; g += horizon / 4 + 1) {
          if (!bounded_equiv(ts, a, bb, g, b.max_context)) continue;
          for (const auto& cc : elems) {
            if (cc.empty()) continue;
            auto cza = ts.prod(cc, a);
            auto czb = ts.prod(cc, bb);
            auto cg = ts.apply(cc, g);
            if (!cza || !czb || !cg) {
              ++r.skipped;
              continue;
            }
            ++r.checked;
            if (!bounded_equiv(ts, *cza, *czb, *cg, b.max_context) &&
                r.status != Status::Refuted) {
              r.status = Status::Refuted;
              r.detail = "(" + comp_string(a) + ", " + comp_string(bb) + ", " +
                         comp_string(cc) + ", " + std::to_string(g) + ")";
            }
          }
        }
    push(rep, r);
  }

  {  // generator kappa-sequence: depth-bounded elements advance it
    AxiomResult r{"kappa-sequence", Status::Unchecked, 0, 0, "no generator"};
    const auto& cand = ts.candidate();
    if (cand.generator) {
      FnPrefix g = resolve(cand, *cand.generator);
      if (g.is_id()) {
        r.detail = "generator is the identity";
      } else {
        CriticalSequence kappa = critical_sequence(g, 3);
        if (kappa.points.size() < 3) {
          r.detail = "prefix too short for kappa_2";
        } else {
          r.status = Status::Verified;
          r.detail.clear();
          std::int64_t k1 = kappa.points[1], k2 = kappa.points[2];
          // depth <= 1 elements from the generator: g and g.g (when defined)
          std::vector<Comp> depth1{{*cand.generator}};
          if (auto gg = cand.product(*cand.generator, *cand.generator))
            depth1.push_back({*gg});
          for (const auto& e : depth1) {
            auto v = ts.apply(e, k1);
            if (!v) {
              ++r.skipped;
              continue;
            }
            ++r.checked;
            if (*v != k2 && r.status != Status::Refuted) {
              r.status = Status::Refuted;
              r.detail = comp_string(e);
            }
          }
        }
      }
    }
    push(rep, r);
  }

  {  // critical sequences dominate the generator's kappa-sequence
    AxiomResult r{"critical-cofinal", Status::Unchecked, 0, 0, "no generator"};
    const auto& cand = ts.candidate();
    if (cand.generator && !resolve(cand, *cand.generator).is_id()) {
      r.status = Status::Verified;
      r.detail.clear();
      CriticalSequence kappa =
          critical_sequence(resolve(cand, *cand.generator), b.max_seq);
      for (const auto& a : elems) {
        if (!ts.crit(a)) continue;
        CriticalSequence alpha = critical_sequence(cand, a, b.max_seq);
        std::size_t upto = std::min(alpha.points.size(), kappa.points.size());
        for (std::size_t n = 0; n < upto; ++n) {
          ++r.checked;
          if (alpha.points[n] < kappa.points[n] &&
              r.status != Status::Refuted) {
            r.status = Status::Refuted;
            r.detail = "(" + comp_string(a) + ", " + std::to_string(n) + ")";
          }
        }
      }
    }
    push(rep, r);
  }

  return rep;
}

}  // namespace laver
