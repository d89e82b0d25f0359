#include <catch_amalgamated.hpp>

#include "oligocat/matrix.hpp"
#include "oligocat/sym_context.hpp"

using namespace olig;

namespace {
SetExpr S(const char* s) { return SetExpr::parse(s); }
const Poly t = Poly::var();
auto sym = make_context("sym");
auto ord = make_context("order:-1,-1");
}  // namespace

TEST_CASE("Deligne examples on Omega") {
  SetExpr om = S("Omega");
  auto I = InvariantMatrix::identity(sym, om);
  auto A = InvariantMatrix::all_ones(sym, om, om);
  CHECK(A * A == t * A);
  CHECK(I * A == A);
  CHECK(A * I == A);
  CHECK(trace(I) == t);
  CHECK(trace(A) == t);
  Poly al = Poly(3), be = Poly(Rational(-2, 5));
  // intro matrix: alpha on the diagonal, beta off it
  auto M = al * I + be * (A - I);
  CHECK(trace(M) == t * al);
  CHECK(higher_trace(I, 0) == Poly(1));
  CHECK(higher_trace(I, 1) == t);
  CHECK(higher_trace(I, 2) == binomial_poly(2));
  for (int n = 0; n <= 3; ++n) CHECK(higher_trace_direct(M, n) == higher_trace(M, n));
  CHECK(char_series(A, 4).str() == "1 + t*u + O(u^4)");
  auto chi_I = char_series(I, 6);
  for (int n = 0; n < 6; ++n) CHECK(chi_I[n] == binomial_poly(n));
  // chi_{alpha+beta A} = (1+alpha u)^{t-1} (1 + (alpha + t beta) u)
  auto N = al * I + be * A;
  auto lhs = char_series(N, 6);
  auto rhs = series_mul(binomial_series(al, t - Poly(1), 6),
                        TruncatedSeries::one(6) + (al + t * be) * TruncatedSeries::u(6));
  CHECK(lhs == rhs);
}

TEST_CASE("graph matrices of Inj(2) -> Omega") {
  auto f = GSetMap::slots(S("Inj(2)"), S("Omega"), {0});
  auto Af = InvariantMatrix::graph(sym, f);
  auto Bf = Af.transpose();
  CHECK(Af * Bf == (t - Poly(1)) * InvariantMatrix::identity(sym, S("Omega")));
  CHECK(Bf.transpose() == Af);
}

TEST_CASE("order context trace examples") {
  SetExpr r = S("R");
  auto lt = InvariantMatrix::orbit(ord, r, r, parse_orbit(*ord, S("R^2"), "r1<r2"));
  CHECK(trace(lt) == Poly(0));
  CHECK(trace(InvariantMatrix::identity(ord, r)) == Poly(-1));
}

TEST_CASE("trace pairing discriminants") {
  EndAlgebra om(sym, S("Omega"));
  CHECK(om.dim() == 2);
  auto tp = trace_pairing(om);
  CHECK(tp.discriminant == t * t * (t - Poly(1)));
  CHECK(tp.matches());
  EndAlgebra r(ord, S("R"));
  auto tr = trace_pairing(r);
  CHECK(tr.transpose_pairs == 1);
  CHECK(tr.discriminant == Poly(1));
  CHECK(tr.matches());
  EndAlgebra pt(sym, S("Pt"));
  CHECK(trace_pairing(pt).discriminant == Poly(1));
  CHECK(trace_pairing(EndAlgebra(sym, S("Omega^2"))).matches());
  CHECK(trace_pairing(EndAlgebra(ord, S("Sub(2)"))).matches());
}

TEST_CASE("specialized algebra") {
  EndAlgebra om(sym, S("Omega"));
  auto A = om.coords(InvariantMatrix::all_ones(sym, S("Omega"), S("Omega")));
  std::vector<Rational> a0;
  for (auto& p : A) a0.push_back(p.eval(0));
  SpecializedAlgebra s0(om, 0);
  auto [s, n] = s0.jordan_split(a0);
  CHECK(s0.is_zero(s));
  CHECK(n == a0);
  SpecializedAlgebra s5(om, 5);
  std::vector<Rational> a5;
  for (auto& p : A) a5.push_back(p.eval(5));
  CHECK(s5.min_poly(a5) == Poly(std::vector<Rational>{0, -5, 1}));
  auto [s2, n2] = s5.jordan_split(a5);
  CHECK(s2 == a5);
  CHECK(s5.is_zero(n2));
  auto dec = idempotent_decompose(s5);
  CHECK(dec.complete);
  REQUIRE(dec.idempotents.size() == 2);
  std::vector<Rational> dims = dec.dims;
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<Rational>{1, 4});
  CHECK(is_semisimple_end(om, 5).semisimple);
  CHECK_FALSE(is_semisimple_end(om, 0).semisimple);
  CHECK(is_semisimple_end(EndAlgebra(ord, S("R")), 0).semisimple);
}

TEST_CASE("finite oracle agrees with interpolation") {
  for (auto [n, N] : {std::pair{1, 4}, std::pair{2, 6}}) {
    SetExpr x = power(S("Omega"), n);
    EndAlgebra e(sym, x);
    auto fin = finite_sym_end(n, N);
    REQUIRE(static_cast<int>(fin.patterns.size()) == e.dim());
    std::vector<int> map(e.dim());
    for (int i = 0; i < e.dim(); ++i) {
      std::vector<int> v = e.basis_orbits()[i].p.v;
      std::map<int, int> rl;
      for (int& q : v) q = rl.emplace(q, static_cast<int>(rl.size())).first->second;
      auto it = std::find(fin.patterns.begin(), fin.patterns.end(), v);
      REQUIRE(it != fin.patterns.end());
      map[i] = static_cast<int>(it - fin.patterns.begin());
    }
    for (int a = 0; a < e.dim(); ++a)
      for (int b = 0; b < e.dim(); ++b)
        for (int k = 0; k < e.dim(); ++k)
          CHECK(e.structure()[a][b][k].eval(N) == fin.c[map[a]][map[b]][map[k]]);
  }
}
