#include <catch_amalgamated.hpp>

#include "oligocat/category.hpp"
#include "oligocat/order_context.hpp"

using namespace olig;

namespace {
SetExpr S(const char* s) { return SetExpr::parse(s); }
const Poly t = Poly::var();
auto sym = make_context("sym");
auto ord = make_context("order:-1,-1");
PermObject P(const ContextPtr& c, const char* s) { return PermObject{c, S(s)}; }
const long kBell[] = {1, 1, 2, 5, 15, 52, 203};
}  // namespace

TEST_CASE("hom basis sizes") {
  CHECK(hom_basis(P(sym, "Omega"), P(sym, "Omega")).size() == 2);
  CHECK(hom_basis(P(ord, "R"), P(ord, "R")).size() == 3);
  CHECK(hom_basis(P(ord, "Sub(2)"), P(ord, "Sub(2)")).size() == 13);
  CHECK(hom_basis(P(ord, "R^2"), P(ord, "R^2")).size() == 75);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 6 && b <= 3; ++b)
      CHECK(static_cast<long>(hom_basis(PermObject{sym, power(S("Omega"), a)}, PermObject{sym, power(S("Omega"), b)}).size()) ==
            kBell[a + b]);
  CHECK(S("R*R") == S("R^2"));
  CHECK(S("Inj(1)") == S("Omega"));
}

TEST_CASE("End(Vec_R) relations") {
  for (auto spec : {OrderMeasureSpec{-1, -1}, OrderMeasureSpec{-1, 0}, OrderMeasureSpec{0, -1}, OrderMeasureSpec{0, 0}}) {
    auto ctx = std::make_shared<OrderContext>(spec);
    SetExpr r = S("R");
    auto A = InvariantMatrix::orbit(ctx, r, r, parse_orbit(*ctx, S("R^2"), "r1<r2"));
    auto B = InvariantMatrix::orbit(ctx, r, r, parse_orbit(*ctx, S("R^2"), "r2<r1"));
    auto I = InvariantMatrix::identity(ctx, r);
    CHECK(A * A == -1 * A);
    CHECK(B * B == -1 * B);
    CHECK(A * B == Poly(spec.delta) * (I + A + B));
    CHECK(B * A == Poly(spec.eps) * (I + A + B));
  }
  SetExpr r = S("R");
  auto A = InvariantMatrix::orbit(ord, r, r, parse_orbit(*ord, S("R^2"), "r1<r2"));
  auto B = A.transpose();
  auto I = InvariantMatrix::identity(ord, r);
  std::vector<InvariantMatrix> e{A + I, B + I, Poly(-1) * (I + A + B)};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      CHECK(e[i] * e[j] == (i == j ? e[i] : InvariantMatrix::zero(ord, r, r)));
  CHECK(categorical_trace(e[0]) == Poly(-1));
  CHECK(categorical_trace(e[1]) == Poly(-1));
  CHECK(categorical_trace(e[2]) == Poly(1));
  auto split = idempotent_split(P(ord, "R"), 0);
  CHECK(split.complete);
  REQUIRE(split.idempotents.size() == 3);
  for (const auto& f : split.idempotents)
    CHECK(std::find(e.begin(), e.end(), f) != e.end());
}

TEST_CASE("idempotents on Omega at t=5") {
  auto split = idempotent_split(P(sym, "Omega"), 5);
  CHECK(split.complete);
  std::vector<Rational> d = split.dims;
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<Rational>{1, 4});
  auto A = InvariantMatrix::all_ones(sym, S("Omega"), S("Omega"));
  auto e = Poly(Rational(1, 5)) * A;
  CHECK(std::find(split.idempotents.begin(), split.idempotents.end(), e) != split.idempotents.end());
}

TEST_CASE("duality and traces") {
  for (auto [c, s] : {std::pair{sym, "Omega"}, std::pair{sym, "Sub(2)"}, std::pair{ord, "R"}, std::pair{sym, "Omega+Pt"}}) {
    auto rep = duality_report(P(c, s));
    INFO(rep.str());
    CHECK(rep.ok());
  }
  CHECK(categorical_trace(identity(P(sym, "Omega"))) == t);
  CHECK(categorical_trace(InvariantMatrix::all_ones(sym, S("Omega"), S("Omega"))) == t);
  CHECK(categorical_trace(identity(P(ord, "R"))) == Poly(-1));
}

TEST_CASE("Frobenius structure") {
  for (auto [c, s] : {std::pair{sym, "Omega"}, std::pair{ord, "R"}, std::pair{sym, "Omega+Pt"}}) {
    auto rep = frobenius_report(frobenius(P(c, s)));
    INFO(rep.str());
    CHECK(rep.ok());
  }
}

TEST_CASE("graph matrix calculus") {
  auto f = GSetMap::slots(S("Inj(2)"), S("Omega"), {0});
  auto rep = graph_map_report(sym, f);
  INFO(rep.str());
  CHECK(rep.ok());
  CHECK(rep.str().find("c = t - 1") != std::string::npos);
  auto g = graph_matrices(sym, GSetMap::identity(S("Omega")));
  CHECK(g.a == identity(P(sym, "Omega")));
  CHECK(g.b == identity(P(sym, "Omega")));
  for (const auto& ctx : {sym, ord}) {
    auto b = balanced_axioms_report(ctx, structural_map_family());
    INFO(b.str());
    CHECK(b.ok());
  }
}

TEST_CASE("tensor functoriality and braiding") {
  std::mt19937 rng(5);
  for (const auto& ctx : {sym, ord}) {
    SetExpr x = S("Omega"), y = S("Sub(2)");
    auto a1 = InvariantMatrix::random(ctx, x, x, 0, rng), b1 = InvariantMatrix::random(ctx, x, x, 0, rng);
    auto a2 = InvariantMatrix::random(ctx, y, x, 0, rng), b2 = InvariantMatrix::random(ctx, y, y, 0, rng);
    CHECK(tensor(a1, a2) * tensor(b1, b2) == tensor(a1 * b1, a2 * b2));
    CHECK(tensor(identity(P(ctx, "Omega")), identity(P(ctx, "Sub(2)"))) == identity(PermObject{ctx, x * y}));
    auto s = braiding(PermObject{ctx, x}, PermObject{ctx, y});
    auto s2 = braiding(PermObject{ctx, y}, PermObject{ctx, x});
    CHECK(s2 * s == identity(PermObject{ctx, x * y}));
    CHECK(tensor(a1, identity(PermObject::unit(ctx))) == a1);
  }
}
