#include <catch_amalgamated.hpp>

#include <random>

#include "oligocat/scalar.hpp"

using namespace olig;

namespace {
Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), c(-5, 5), d(1, 3);
  std::vector<Rational> v(deg(rng) + 1);
  for (auto& x : v) {
    x = Rational(c(rng), d(rng));
    x.canonicalize();
  }
  return Poly(v);
}
}  // namespace

TEST_CASE("falling factorial and binomial polynomials") {
  Poly t = Poly::var();
  CHECK(falling_factorial(0, 2) == t * t - t);
  CHECK(falling_factorial(7, 0) == Poly(1));
  CHECK(falling_factorial(2, 1) == t - Poly(2));
  CHECK(binomial_poly(0) == Poly(1));
  CHECK(binomial_poly(2) == (t * t - t) / Rational(2));
  CHECK(binomial_poly(2).eval(4) == 6);
  for (unsigned n = 0; n <= 6; ++n)
    for (int t0 = 0; t0 <= 10; ++t0) {
      Rational v = binomial_poly(n).eval(t0);
      CHECK(v.get_den() == 1);
    }
}

TEST_CASE("polynomial text round trip") {
  CHECK(binomial_poly(2).str() == "(t^2 - t)/2");
  CHECK(binomial_poly(3).str() == "(t^3 - 3t^2 + 2t)/6");
  CHECK(Poly(Rational(-1, 2)).str() == "-1/2");
  CHECK(Poly::parse("(t^2 - t)/2") == binomial_poly(2));
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng);
    CHECK(Poly::parse(p.str()) == p);
  }
}

TEST_CASE("ring axioms and evaluation homomorphism") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Rational x(static_cast<long>(rng() % 7) - 3, 2);
    x.canonicalize();
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("polynomial division and gcd") {
  Poly t = Poly::var();
  Poly a = (t - Poly(1)) * (t - Poly(2)) * (t + Poly(3));
  Poly b = (t - Poly(1)) * (t + Poly(5));
  CHECK(Poly::gcd(a, b) == t - Poly(1));
  CHECK(Poly::exact_div(a, t - Poly(2)) == (t - Poly(1)) * (t + Poly(3)));
  CHECK_THROWS(Poly::exact_div(a, t - Poly(7)));
}

TEST_CASE("truncated series") {
  auto u = TruncatedSeries::u(3);
  auto one = TruncatedSeries::one(3);
  CHECK(series_mul(one + u, one - u).str() == "1 - u^2 + O(u^3)");
  CHECK(series_mul(one + u, one) == one + u);
  Poly t = Poly::var();
  auto s = one + t * u;
  auto sq = series_mul(s, s);
  CHECK(sq[1] == Poly(2) * t);
  CHECK(sq[2] == t * t);
  CHECK_THROWS(series_mul(TruncatedSeries::one(3), TruncatedSeries::one(4)));
  auto r = TruncatedSeries::parse("1 + t*u + O(u^4)");
  CHECK(r.order() == 4);
  CHECK(r.str() == "1 + t*u + O(u^4)");
  CHECK(TruncatedSeries::parse(sq.str()) == sq);
}

TEST_CASE("binomial series matches integer powers") {
  Poly t = Poly::var();
  auto s = binomial_series(Poly(1), Poly(3), 6);
  CHECK(s == (TruncatedSeries::one(6) + TruncatedSeries::u(6)).pow(3));
  auto g = binomial_series(Poly(1), t, 5);
  for (int n = 0; n < 5; ++n) CHECK(g[n] == binomial_poly(n));
}

TEST_CASE("evaluation points") {
  Poly t = Poly::var();
  CHECK(eval(t * t - t, EvalPoint::rational(3)).value == 6);
  CHECK(eval(binomial_poly(2), EvalPoint::modular(0, 2)).residue == 0);
  CHECK(eval(Poly(1), EvalPoint::parse("p:5:3")).residue == 1);
  CHECK(eval(binomial_poly(2), EvalPoint::modular(3, 2)).residue == 1);
  CHECK_THROWS(eval(Poly(Rational(1, 2)), EvalPoint::modular(3, 2)));
  CHECK_THROWS(EvalPoint::parse("p:4:1"));
  CHECK(EvalPoint::parse("-1/2").t0() == Rational(-1, 2));
}
