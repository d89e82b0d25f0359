#include "oligocat/category.hpp"

namespace olig {

std::vector<InvariantMatrix> hom_basis(const PermObject& x, const PermObject& y) {
  std::vector<InvariantMatrix> out;
  for (const auto& o : orbits(*x.ctx, y.x * x.x, 0)) out.push_back(InvariantMatrix::orbit(x.ctx, x.x, y.x, o));
  return out;
}

InvariantMatrix compose(const InvariantMatrix& g, const InvariantMatrix& f) { return matmul(g, f); }
InvariantMatrix tensor(const InvariantMatrix& m, const InvariantMatrix& n) { return kron(m, n); }
InvariantMatrix identity(const PermObject& x) { return InvariantMatrix::identity(x.ctx, x.x); }
InvariantMatrix dual(const InvariantMatrix& m) { return m.transpose(); }

InvariantMatrix braiding(const PermObject& x, const PermObject& y) {
  return InvariantMatrix::graph(x.ctx, GSetMap::swap(x.x, y.x));
}

Duality duality_data(const PermObject& x) {
  auto diag = identity(x).entries();  // indicator of the diagonal on X*X
  SetExpr xx = x.x * x.x;
  return Duality{InvariantMatrix(xx, SetExpr::point(), diag), InvariantMatrix(SetExpr::point(), xx, diag)};
}

Poly unit_scalar(const InvariantMatrix& m) {
  if (!(m.dom() == SetExpr::point()) || !(m.cod() == SetExpr::point()))
    throw std::invalid_argument("not an endomorphism of the unit object");
  return m.entries().value(Orbit{0, Pattern{m.level(), {}}});
}

Poly categorical_trace(const InvariantMatrix& m) {
  if (!(m.dom() == m.cod())) throw std::invalid_argument("categorical trace needs an endomorphism");
  PermObject x{m.context(), m.dom()};
  auto d = duality_data(x);
  return unit_scalar(matmul(d.ev, matmul(tensor(m, identity(x)), d.cv)));
}

GraphPair graph_matrices(const ContextPtr& ctx, const GSetMap& f) {
  auto a = InvariantMatrix::graph(ctx, f);
  return GraphPair{a, a.transpose()};
}

std::optional<Poly> scalar_multiple_of_identity(const InvariantMatrix& m) {
  if (!(m.dom() == m.cod())) return std::nullopt;
  auto id = InvariantMatrix::identity(m.context(), m.dom(), m.level());
  if (id.entries().terms().empty()) return Poly();
  Poly c = m.entries().value(id.entries().terms().begin()->first);
  if (m == c * id) return c;
  return std::nullopt;
}

namespace {

std::string short_str(const InvariantMatrix& m) {
  std::string s = m.str();
  return s.size() > 160 ? s.substr(0, 157) + "..." : s;
}

void expect_equal(Report& r, const std::string& name, const InvariantMatrix& lhs, const InvariantMatrix& rhs) {
  bool ok = lhs == rhs;
  r.add(name, ok, ok ? "" : "lhs = " + short_str(lhs) + " ; rhs = " + short_str(rhs));
}

// multiplication by a function on the diagonal
InvariantMatrix diag_matrix(const SchwartzFunction& phi) {
  const SetExpr& y = phi.domain();
  return InvariantMatrix(y, y, pushforward(GSetMap::diagonal(y), phi));
}

}  // namespace

Report graph_map_report(const ContextPtr& ctx, const GSetMap& f) {
  Report r;
  auto [a, b] = graph_matrices(ctx, f);
  auto fiber = pushforward(f, SchwartzFunction::constant(ctx, f.src, 1));
  auto ab = matmul(a, b);
  expect_equal(r, "A_f B_f = diag(f_* 1) for " + f.str(), ab, diag_matrix(fiber));
  if (f.tgt.size() == 1 && orbits(*ctx, f.tgt, 0).size() == 1) {
    auto c = scalar_multiple_of_identity(ab);
    r.add("A_f B_f = c I on transitive target for " + f.str(), c.has_value(),
          c ? "c = " + c->str() : "A_f B_f = " + short_str(ab));
  }
  expect_equal(r, "B_f = A_f^t for " + f.str(), b, a.transpose());
  return r;
}

Report graph_composition_report(const ContextPtr& ctx, const GSetMap& f, const GSetMap& g) {
  Report r;
  auto gf = compose(g, f);
  auto F = graph_matrices(ctx, f), G = graph_matrices(ctx, g), GF = graph_matrices(ctx, gf);
  expect_equal(r, "A_g A_f = A_gf for " + gf.str(), matmul(G.a, F.a), GF.a);
  expect_equal(r, "B_f B_g = B_gf for " + gf.str(), matmul(F.b, G.b), GF.b);
  return r;
}

Report base_change_report(const ContextPtr& ctx, const SetExpr& x, const SetExpr& y, const SetExpr& z) {
  Report r;
  auto f = GSetMap::projection(x, y, true);
  auto g = GSetMap::projection(x, z, true);
  auto gp = GSetMap::product(GSetMap::identity(x * y), GSetMap::to_point(z));
  auto fp = GSetMap::product(GSetMap::product(GSetMap::identity(x), GSetMap::to_point(y)), GSetMap::identity(z));
  auto lhs = matmul(graph_matrices(ctx, g).b, graph_matrices(ctx, f).a);
  auto rhs = matmul(graph_matrices(ctx, fp).a, graph_matrices(ctx, gp).b);
  expect_equal(r, "base change B_g A_f = A_f' B_g' over " + x.str() + " with " + y.str() + ", " + z.str(), lhs, rhs);
  return r;
}

Report additivity_report(const ContextPtr& ctx, const SetExpr& x, const SetExpr& y) {
  Report r;
  auto i = graph_matrices(ctx, GSetMap::inclusion(x, y, true));
  auto j = graph_matrices(ctx, GSetMap::inclusion(x, y, false));
  std::string tag = " for " + x.str() + " + " + y.str();
  expect_equal(r, "B_i A_i = I" + tag, matmul(i.b, i.a), InvariantMatrix::identity(ctx, x));
  expect_equal(r, "B_j A_j = I" + tag, matmul(j.b, j.a), InvariantMatrix::identity(ctx, y));
  expect_equal(r, "B_j A_i = 0" + tag, matmul(j.b, i.a), InvariantMatrix::zero(ctx, x, y));
  expect_equal(r, "A_i B_i + A_j B_j = I" + tag, matmul(i.a, i.b) + matmul(j.a, j.b),
               InvariantMatrix::identity(ctx, x + y));
  return r;
}

FrobeniusData frobenius(const PermObject& x) {
  auto pt = graph_matrices(x.ctx, GSetMap::to_point(x.x));
  auto dg = graph_matrices(x.ctx, GSetMap::diagonal(x.x));
  return FrobeniusData{x, pt.b, dg.b, pt.a, dg.a};
}

Report frobenius_report(const FrobeniusData& f) {
  Report r;
  auto id = identity(f.x);
  auto sw = braiding(f.x, f.x);
  const auto &mu = f.mu, &eta = f.eta, &eps = f.eps, &delta = f.delta;
  std::string tag = " on " + f.x.x.str();
  expect_equal(r, "(a) associative" + tag, matmul(mu, tensor(mu, id)), matmul(mu, tensor(id, mu)));
  expect_equal(r, "(a) left unit" + tag, matmul(mu, tensor(eta, id)), id);
  expect_equal(r, "(a) right unit" + tag, matmul(mu, tensor(id, eta)), id);
  expect_equal(r, "(a) commutative" + tag, matmul(mu, sw), mu);
  expect_equal(r, "(b) coassociative" + tag, matmul(tensor(delta, id), delta), matmul(tensor(id, delta), delta));
  expect_equal(r, "(b) left counit" + tag, matmul(tensor(eps, id), delta), id);
  expect_equal(r, "(b) right counit" + tag, matmul(tensor(id, eps), delta), id);
  expect_equal(r, "(b) cocommutative" + tag, matmul(sw, delta), delta);
  auto dm = matmul(delta, mu);
  expect_equal(r, "(c) (id x mu)(delta x id) = delta mu" + tag, matmul(tensor(id, mu), tensor(delta, id)), dm);
  expect_equal(r, "(c) (mu x id)(id x delta) = delta mu" + tag, matmul(tensor(mu, id), tensor(id, delta)), dm);
  expect_equal(r, "(d) mu delta = id" + tag, matmul(mu, delta), id);
  return r;
}

Report duality_report(const PermObject& x) {
  Report r;
  auto d = duality_data(x);
  auto id = identity(x);
  std::string tag = " on " + x.x.str();
  expect_equal(r, "zigzag (id x ev)(cv x id) = id" + tag, matmul(tensor(id, d.ev), tensor(d.cv, id)), id);
  expect_equal(r, "zigzag (ev x id)(id x cv) = id" + tag, matmul(tensor(d.ev, id), tensor(id, d.cv)), id);
  Poly dim = unit_scalar(matmul(d.ev, d.cv));
  Poly mu = set_measure(*x.ctx, x.x);
  r.add("ev cv = mu(X)" + tag, dim == mu, "dim = " + dim.str() + ", mu = " + mu.str());
  for (const auto& m : hom_basis(x, x)) {
    // mate identity: ev (M x id) = ev (id x M^t)
    expect_equal(r, "M^dual = M^t: ev (M x id) = ev (id x M^t) for " + short_str(m), matmul(d.ev, tensor(m, id)),
                 matmul(d.ev, tensor(id, dual(m))));
    expect_equal(r, "dual dual = id for " + short_str(m), dual(dual(m)), m);
    Poly ct = categorical_trace(m), mt = trace(m);
    r.add("categorical trace = trace for " + short_str(m), ct == mt, ct.str() + " vs " + mt.str());
  }
  return r;
}

MapFamily structural_map_family() {
  MapFamily fam;
  auto S = [](const char* s) { return SetExpr::parse(s); };
  fam.maps = {
      GSetMap::slots(S("Inj(2)"), S("Omega"), {0}),
      GSetMap::projection(S("Omega"), S("Omega"), true),
      GSetMap::diagonal(S("Omega")),
      GSetMap::parse("sym:2"),
      GSetMap::to_point(S("Sub(2)")),
      GSetMap::fold(S("Omega"), 2),
      GSetMap::inclusion(S("Omega"), S("Sub(2)"), true),
      GSetMap::projection(S("Sub(2)"), S("Omega"), true),
      GSetMap::identity(S("Omega")),
  };
  fam.composable = {
      {GSetMap::slots(S("Inj(3)"), S("Inj(2)"), {0, 1}), GSetMap::slots(S("Inj(2)"), S("Omega"), {0})},
      {GSetMap::parse("sym:2"), GSetMap::to_point(S("Sub(2)"))},
      {GSetMap::diagonal(S("Omega")), GSetMap::projection(S("Omega"), S("Omega"), true)},
      {GSetMap::projection(S("Omega"), S("Omega"), false), GSetMap::to_point(S("Omega"))},
  };
  return fam;
}

Report balanced_axioms_report(const ContextPtr& ctx, const MapFamily& fam) {
  Report r;
  for (const auto& f : fam.maps) r.merge(graph_map_report(ctx, f), "mu-adapted: ");
  for (const auto& [f, g] : fam.composable) r.merge(graph_composition_report(ctx, f, g), "functorial: ");
  auto S = [](const char* s) { return SetExpr::parse(s); };
  r.merge(additivity_report(ctx, S("Omega"), S("Sub(2)")), "additive: ");
  r.merge(additivity_report(ctx, S("Pt"), S("Omega")), "additive: ");
  r.merge(base_change_report(ctx, S("Omega"), S("Omega"), S("Omega")), "");
  r.merge(base_change_report(ctx, S("Pt"), S("Sub(2)"), S("Omega")), "");
  return r;
}

IdempotentSplitting idempotent_split(const PermObject& x, const Rational& t0, unsigned seed) {
  IdempotentSplitting out;
  EndAlgebra e(x.ctx, x.x);
  auto ss = is_semisimple_end(e, t0, seed);
  out.semisimple = ss.semisimple;
  SpecializedAlgebra s(e, t0);
  auto dec = idempotent_decompose(s, seed);
  out.complete = dec.complete && ss.semisimple;
  out.note = ss.semisimple ? dec.note : ss.note;
  for (size_t i = 0; i < dec.idempotents.size(); ++i) {
    std::vector<Poly> c;
    for (const auto& q : dec.idempotents[i]) c.push_back(Poly(q));
    out.idempotents.push_back(e.element(c));
    out.dims.push_back(dec.dims[i]);
  }
  return out;
}

}  // namespace olig
