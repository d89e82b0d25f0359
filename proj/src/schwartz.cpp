#include "oligocat/schwartz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "oligocat/sym_context.hpp"

namespace olig {

// ---------------------------------------------------------------- SchwartzFunction

SchwartzFunction::SchwartzFunction(ContextPtr ctx, SetExpr domain, int level)
    : ctx_(std::move(ctx)), dom_(std::move(domain)), level_(level) {
  if (!ctx_) throw std::invalid_argument("Schwartz function needs a context");
  if (level_ < 0) throw std::invalid_argument("negative level");
}

SchwartzFunction SchwartzFunction::zero(ContextPtr ctx, SetExpr domain, int level) {
  return SchwartzFunction(std::move(ctx), std::move(domain), level);
}

SchwartzFunction SchwartzFunction::constant(ContextPtr ctx, SetExpr domain, const Poly& c, int level) {
  SchwartzFunction f(ctx, domain, level);
  if (c.is_zero()) return f;
  for (const auto& o : orbits(*ctx, domain, level)) f.terms_[o] = c;
  return f;
}

SchwartzFunction SchwartzFunction::indicator(ContextPtr ctx, SetExpr domain, const Orbit& o) {
  SchwartzFunction f(std::move(ctx), std::move(domain), o.p.level);
  f.terms_[o] = Poly(1);
  return f;
}

Poly SchwartzFunction::value(const Orbit& o) const {
  auto it = terms_.find(o);
  return it == terms_.end() ? Poly() : it->second;
}

Poly SchwartzFunction::value_at(int comp, const Pattern& ordered) const {
  if (terms_.empty()) return Poly();
  return value(Orbit{comp, canonical(*ctx_, dom_.comps.at(comp), ordered)});
}

void SchwartzFunction::add(const Orbit& o, const Poly& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[o];
  slot += c;
  if (slot.is_zero()) terms_.erase(o);
}

void SchwartzFunction::set(const Orbit& o, const Poly& c) {
  if (c.is_zero())
    terms_.erase(o);
  else
    terms_[o] = c;
}

namespace {

void require_same_domain(const SchwartzFunction& a, const SchwartzFunction& b) {
  if (!(a.domain() == b.domain())) throw std::invalid_argument("Schwartz functions on different domains");
  if (a.ctx().name() != b.ctx().name()) throw std::invalid_argument("Schwartz functions over different contexts");
}

}  // namespace

SchwartzFunction& SchwartzFunction::operator+=(const SchwartzFunction& o) {
  require_same_domain(*this, o);
  if (o.level_ > level_) *this = change_level(*this, o.level_);
  const SchwartzFunction& src = o.level_ < level_ ? change_level(o, level_) : o;
  for (const auto& [k, v] : src.terms_) add(k, v);
  return *this;
}

SchwartzFunction& SchwartzFunction::operator-=(const SchwartzFunction& o) {
  require_same_domain(*this, o);
  if (o.level_ > level_) *this = change_level(*this, o.level_);
  const SchwartzFunction& src = o.level_ < level_ ? change_level(o, level_) : o;
  for (const auto& [k, v] : src.terms_) add(k, -v);
  return *this;
}

SchwartzFunction& SchwartzFunction::operator*=(const Poly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

SchwartzFunction operator*(const SchwartzFunction& a, const SchwartzFunction& b) {
  require_same_domain(a, b);
  int level = std::max(a.level_, b.level_);
  SchwartzFunction x = change_level(a, level), y = change_level(b, level);
  SchwartzFunction r(a.ctx_, a.dom_, level);
  for (const auto& [k, v] : x.terms_) r.add(k, v * y.value(k));
  return r;
}

bool operator==(const SchwartzFunction& a, const SchwartzFunction& b) {
  if (!(a.dom_ == b.dom_) || a.ctx().name() != b.ctx().name()) return false;
  if (a.level_ == b.level_) return a.terms_ == b.terms_;
  int level = std::max(a.level_, b.level_);
  return change_level(a, level).terms_ == change_level(b, level).terms_;
}

std::string SchwartzFunction::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [o, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*1[" + format_orbit(*ctx_, dom_, o) + "]";
  }
  return s;
}

SchwartzFunction tabulate(ContextPtr ctx, const SetExpr& dom, int level,
                          const std::function<Poly(int comp, const Pattern& rep)>& fn) {
  SchwartzFunction f(ctx, dom, level);
  for (const auto& o : orbits(*ctx, dom, level)) f.set(o, fn(o.comp, o.p));
  return f;
}

// ---------------------------------------------------------------- GSetMap

GSetMap GSetMap::make(SetExpr src, SetExpr tgt, std::vector<int> comp, std::vector<std::vector<int>> pi,
                      std::string label) {
  GSetMap f{std::move(src), std::move(tgt), std::move(comp), std::move(pi), std::move(label)};
  f.validate();
  return f;
}

void GSetMap::validate() const {
  auto bad = [&](const std::string& m) { throw std::invalid_argument("map " + str() + ": " + m); };
  if (static_cast<int>(comp.size()) != src.size() || static_cast<int>(pi.size()) != src.size())
    bad("component data does not match the source");
  for (int c = 0; c < src.size(); ++c) {
    if (comp[c] < 0 || comp[c] >= tgt.size()) bad("target component out of range");
    const Product& xs = src.comps[c];
    const Product& ys = tgt.comps[comp[c]];
    const auto& p = pi[c];
    if (static_cast<int>(p.size()) != ys.slot_count()) bad("slot map has the wrong length");
    for (int j : p)
      if (j < 0 || j >= xs.slot_count()) bad("slot map entry out of range");
    auto sg = xs.slot_group();
    auto tg = ys.slot_group();
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = a + 1; b < p.size(); ++b)
        if (tg[a] >= 0 && tg[a] == tg[b] && (p[a] == p[b] || sg[p[a]] < 0 || sg[p[a]] != sg[p[b]]))
          bad("target coordinates that must differ are not forced apart");
    // Sub symmetry of the source must be matched by Sub symmetry of the target
    auto start = xs.factor_start();
    const auto& tperms = sub_permutations(ys);
    for (size_t fi = 0; fi < xs.factors.size(); ++fi) {
      const auto& fac = xs.factors[fi];
      if (fac.kind != FactorKind::Sub || fac.n < 2) continue;
      for (int k = 0; k + 1 < fac.n; ++k) {
        int s0 = start[fi] + k, s1 = s0 + 1;
        auto sigma = [&](int s) { return s == s0 ? s1 : s == s1 ? s0 : s; };
        bool found = false;
        for (const auto& tau : tperms) {
          bool all = true;
          for (size_t j = 0; j < p.size() && all; ++j)
            if (sigma(p[j]) != p[tau[j]]) all = false;
          if (all) {
            found = true;
            break;
          }
        }
        if (!found) bad("not invariant under reordering a Sub factor");
      }
    }
  }
}

namespace {
std::vector<int> iota_vec(int n, int start = 0) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), start);
  return v;
}
}  // namespace

GSetMap GSetMap::identity(const SetExpr& x) {
  std::vector<int> comp = iota_vec(x.size());
  std::vector<std::vector<int>> pi;
  for (const auto& c : x.comps) pi.push_back(iota_vec(c.slot_count()));
  return make(x, x, comp, pi, "id:" + x.str());
}

GSetMap GSetMap::to_point(const SetExpr& x) {
  return make(x, SetExpr::point(), std::vector<int>(x.size(), 0), std::vector<std::vector<int>>(x.size()),
              "pt:" + x.str());
}

GSetMap GSetMap::projection(const SetExpr& x, const SetExpr& y, bool first) {
  SetExpr src = x * y;
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j) {
      int sx = x.comps[i].slot_count(), sy = y.comps[j].slot_count();
      comp.push_back(first ? i : j);
      pi.push_back(first ? iota_vec(sx) : iota_vec(sy, sx));
    }
  return make(src, first ? x : y, comp, pi, std::string(first ? "proj1:" : "proj2:") + x.str() + "|" + y.str());
}

GSetMap GSetMap::diagonal(const SetExpr& x) {
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int i = 0; i < x.size(); ++i) {
    comp.push_back(i * x.size() + i);
    auto p = iota_vec(x.comps[i].slot_count());
    auto q = p;
    p.insert(p.end(), q.begin(), q.end());
    pi.push_back(p);
  }
  return make(x, x * x, comp, pi, "diag:" + x.str());
}

GSetMap GSetMap::swap(const SetExpr& x, const SetExpr& y) {
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j) {
      int sx = x.comps[i].slot_count(), sy = y.comps[j].slot_count();
      comp.push_back(j * x.size() + i);
      auto p = iota_vec(sy, sx);
      auto q = iota_vec(sx);
      p.insert(p.end(), q.begin(), q.end());
      pi.push_back(p);
    }
  return make(x * y, y * x, comp, pi, "swap:" + x.str() + "|" + y.str());
}

GSetMap GSetMap::inclusion(const SetExpr& x, const SetExpr& y, bool left) {
  const SetExpr& s = left ? x : y;
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int i = 0; i < s.size(); ++i) {
    comp.push_back(left ? i : x.size() + i);
    pi.push_back(iota_vec(s.comps[i].slot_count()));
  }
  return make(s, x + y, comp, pi, std::string(left ? "incl1:" : "incl2:") + x.str() + "|" + y.str());
}

GSetMap GSetMap::fold(const SetExpr& x, int copies) {
  SetExpr src = SetExpr::empty();
  for (int k = 0; k < copies; ++k) src = src + x;
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int c = 0; c < src.size(); ++c) {
    comp.push_back(c % x.size());
    pi.push_back(iota_vec(src.comps[c].slot_count()));
  }
  return make(src, x, comp, pi, "fold:" + x.str() + "|" + std::to_string(copies));
}

GSetMap GSetMap::relabel(const SetExpr& src, const SetExpr& tgt) {
  if (src.size() != tgt.size()) throw std::invalid_argument("relabel needs matching components");
  std::vector<int> comp = iota_vec(src.size());
  std::vector<std::vector<int>> pi;
  for (int c = 0; c < src.size(); ++c) {
    if (src.comps[c].slot_count() != tgt.comps[c].slot_count())
      throw std::invalid_argument("relabel needs matching slot counts");
    pi.push_back(iota_vec(src.comps[c].slot_count()));
  }
  return make(src, tgt, comp, pi, "relabel:" + src.str() + "|" + tgt.str());
}

GSetMap GSetMap::product(const GSetMap& f, const GSetMap& g) {
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int i = 0; i < f.src.size(); ++i)
    for (int j = 0; j < g.src.size(); ++j) {
      comp.push_back(f.comp[i] * g.tgt.size() + g.comp[j]);
      auto p = f.pi[i];
      int off = f.src.comps[i].slot_count();
      for (int s : g.pi[j]) p.push_back(s + off);
      pi.push_back(p);
    }
  return make(f.src * g.src, f.tgt * g.tgt, comp, pi, "(" + f.str() + ")x(" + g.str() + ")");
}

GSetMap GSetMap::slots(const SetExpr& src, const SetExpr& tgt, const std::vector<int>& pi) {
  if (src.size() != 1 || tgt.size() != 1) throw std::invalid_argument("slot maps need single components");
  std::string l = "slots:" + src.str() + "|" + tgt.str() + "|";
  for (size_t i = 0; i < pi.size(); ++i) l += (i ? "," : "") + std::to_string(pi[i]);
  return make(src, tgt, {0}, {pi}, l);
}

GSetMap GSetMap::parse(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw ParseError("map needs kind:args");
  std::string kind(s.substr(0, colon));
  std::vector<std::string> args;
  std::string rest(s.substr(colon + 1));
  size_t pos = 0;
  for (;;) {
    auto bar = rest.find('|', pos);
    args.push_back(rest.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  auto need = [&](size_t n) {
    if (args.size() != n) throw ParseError("map '" + kind + "' expects " + std::to_string(n) + " arguments");
  };
  auto X = [&](size_t i) { return SetExpr::parse(args.at(i)); };
  if (kind == "id") return need(1), identity(X(0));
  if (kind == "pt") return need(1), to_point(X(0));
  if (kind == "proj1") return need(2), projection(X(0), X(1), true);
  if (kind == "proj2") return need(2), projection(X(0), X(1), false);
  if (kind == "diag") return need(1), diagonal(X(0));
  if (kind == "swap") return need(2), swap(X(0), X(1));
  if (kind == "incl1") return need(2), inclusion(X(0), X(1), true);
  if (kind == "incl2") return need(2), inclusion(X(0), X(1), false);
  if (kind == "fold") return need(2), fold(X(0), std::stoi(args[1]));
  if (kind == "relabel") return need(2), relabel(X(0), X(1));
  if (kind == "sym") {
    need(1);
    int n = std::stoi(args[0]);
    return relabel(SetExpr::single(FactorKind::Inj, n), SetExpr::single(FactorKind::Sub, n));
  }
  if (kind == "slots") {
    need(3);
    std::vector<int> pi;
    std::stringstream ss(args[2]);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) pi.push_back(std::stoi(tok));
    return slots(X(0), X(1), pi);
  }
  throw ParseError("unknown map kind '" + kind + "'");
}

GSetMap compose(const GSetMap& g, const GSetMap& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("cannot compose " + g.str() + " after " + f.str());
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int c = 0; c < f.src.size(); ++c) {
    int mid = f.comp[c];
    comp.push_back(g.comp[mid]);
    std::vector<int> p;
    for (int j : g.pi[mid]) p.push_back(f.pi[c][j]);
    pi.push_back(p);
  }
  return GSetMap::make(f.src, g.tgt, comp, pi, "(" + g.str() + ")o(" + f.str() + ")");
}

// ---------------------------------------------------------------- calculus

Poly integrate(const SchwartzFunction& phi) {
  Poly total;
  for (const auto& [o, c] : phi.terms()) total += c * orbit_measure(phi.ctx(), phi.domain(), o);
  return total;
}

SchwartzFunction pushforward(const GSetMap& f, const SchwartzFunction& phi) {
  if (!(phi.domain() == f.src)) throw std::invalid_argument("pushforward: function not on the source of " + f.str());
  SchwartzFunction out(phi.context(), f.tgt, phi.level());
  for (int c = 0; c < f.src.size(); ++c) {
    bool any = false;
    for (const auto& [o, v] : phi.terms())
      if (o.comp == c) any = true;
    if (!any) continue;
    auto fn = [&](const Pattern& r) { return phi.value_at(c, r); };
    auto res = push_ordered(phi.ctx(), f.src.comps[c], f.tgt.comps[f.comp[c]], f.pi[c], phi.level(), fn);
    for (auto& [q, v] : res) out.add(Orbit{f.comp[c], q}, v);
  }
  return out;
}

SchwartzFunction pullback(const GSetMap& f, const SchwartzFunction& psi) {
  if (!(psi.domain() == f.tgt)) throw std::invalid_argument("pullback: function not on the target of " + f.str());
  return tabulate(psi.context(), f.src, psi.level(), [&](int c, const Pattern& rep) {
    return psi.value_at(f.comp[c], pull_slots(psi.ctx(), rep, f.pi[c]));
  });
}

SchwartzFunction change_level(const SchwartzFunction& phi, int level) {
  if (level < phi.level()) throw std::invalid_argument("change_level: target level is coarser");
  if (level == phi.level()) return phi;
  return tabulate(phi.context(), phi.domain(), level, [&](int c, const Pattern& rep) {
    return phi.value_at(c, phi.ctx().coarsen(rep, phi.level()));
  });
}

SchwartzFunction external_product(const SchwartzFunction& phi, const SchwartzFunction& psi) {
  int level = std::max(phi.level(), psi.level());
  SchwartzFunction a = change_level(phi, level), b = change_level(psi, level);
  const SetExpr& x = phi.domain();
  const SetExpr& y = psi.domain();
  return tabulate(phi.context(), x * y, level, [&](int c, const Pattern& rep) {
    int i = c / y.size(), j = c % y.size();
    int sx = x.comps[i].slot_count(), sy = y.comps[j].slot_count();
    Poly va = a.value_at(i, pull_slots(phi.ctx(), rep, iota_vec(sx)));
    if (va.is_zero()) return Poly();
    return va * b.value_at(j, pull_slots(phi.ctx(), rep, iota_vec(sy, sx)));
  });
}

SchwartzFunction refine_project(ContextPtr ctx, const SetExpr& x, const Orbit& o, const GSetMap& f) {
  return pushforward(f, SchwartzFunction::indicator(std::move(ctx), x, o));
}

SchwartzFunction sym_refine_project(const SetExpr& x, const SetExpr& y, const SetExpr& z, const Orbit& o) {
  SetExpr src = x * y * z;
  SetExpr tgt = x * z;
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j)
      for (int k = 0; k < z.size(); ++k) {
        comp.push_back(i * z.size() + k);
        int sx = x.comps[i].slot_count(), sy = y.comps[j].slot_count(), sz = z.comps[k].slot_count();
        auto p = iota_vec(sx);
        auto q = iota_vec(sz, sx + sy);
        p.insert(p.end(), q.begin(), q.end());
        pi.push_back(p);
      }
  static auto ctx = std::make_shared<SymContext>();
  return refine_project(ctx, src, o, GSetMap::make(src, tgt, comp, pi, "forget middle"));
}

}  // namespace olig
