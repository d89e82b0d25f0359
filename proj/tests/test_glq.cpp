#include <catch_amalgamated.hpp>

#include "oligocat/glq.hpp"

using namespace olig;

TEST_CASE("q-integers and Gaussian binomials", "[glq]") {
  QContext c2(2), c3(3);
  CHECK(c2.q_int(3) == 7);
  CHECK(c2.q_binom(4, 2) == 35);
  for (long n = 0; n < 6; ++n) CHECK(c3.q_binom(n, 0) == 1);
  CHECK_THROWS(c2.q_binom(2, 3));
  CHECK_THROWS(QContext(1));
  CHECK(brute_subspace_counts(2, 4)[2] == 35);
}

TEST_CASE("omega polynomials", "[glq]") {
  QContext c(2);
  CHECK(c.omega0(1) == Poly::var());
  CHECK(c.omega0(2).eval(Rational(c.q_int(4))) == 35);
  Poly w = c.omega(1, 1);
  for (long n = 1; n <= 5; ++n) CHECK(w.eval(Rational(c.q_int(n))) == Rational(c.q_int(n - 1)));
  CHECK(c.shift().compose(c.shift_inverse()) == Poly::var());
}

TEST_CASE("q-Pascal and Grassmannian products", "[glq]") {
  for (long q : {2L, 3L}) {
    QContext c(q);
    CHECK(check_q_pascal(c, 4).ok());
    CHECK(check_grassmann_products(c, 3).ok());
    CHECK(check_omega_values(c, 3, 6).ok());
    CHECK(check_subspace_counts(c, 4).ok());
  }
  QContext c(2);
  auto n = c.grassmann_structure_constants(1, 1);
  CHECK(n.size() == 2);
  CHECK(n[1] == 1);
  CHECK(n[2] == 6);
  CHECK(c.grassmann_structure_constants(0, 2) == std::map<long, Integer>{{2, 1}});
  // pairs of lines in F_2^4 by span dimension: n_d times #Gr(d,4)
  auto pairs = brute_span_pairs(2, 4, 1, 1);
  CHECK(pairs[1] == n[1] * c.q_binom(4, 1));
  CHECK(pairs[2] == n[2] * c.q_binom(4, 2));
}

TEST_CASE("perturbed omega is caught", "[glq]") {
  QContext c(2);
  OmegaHook bump = [](long m, long d, const Poly& w) { return (m == 2 && d == 1) ? w + Poly(1) : w; };
  auto rep = check_q_pascal(c, 4, bump);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.first_failure()->name.find("(m,d)=(1,1)") != std::string::npos);
  CHECK_FALSE(check_grassmann_products(c, 3, [](long, long d, const Poly& w) { return d == 2 ? w * Rational(2) : w; }).ok());
}
