// Measure arithmetic for GL over F_q: q-integers, Gaussian binomials and the
// shifted q-binomial polynomials omega_{m,d} in Q[x].
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "oligocat/report.hpp"
#include "oligocat/scalar.hpp"

namespace olig {

class QContext {
 public:
  explicit QContext(long q);
  long q() const { return q_; }

  Integer q_int(long n) const;  // [n]_q, n >= 0
  Integer q_factorial(long n) const;
  Integer q_binom(long n, long d) const;  // throws unless 0 <= d <= n
  Integer q_pow(long e) const;

  // x -> q x + 1 and its inverse, as polynomials in x
  Poly shift() const;
  Poly shift_inverse() const;
  // omega_{0,d}(x) = x (x - [1]) ... (x - [d-1]) / (q^{d(d-1)/2} [d]!)
  Poly omega0(long d) const;
  // omega_{m,d} = omega_{0,d} o S^{-m}, so omega_{m,d}([n]) = qbinom(n - m, d)
  Poly omega(long m, long d) const;

  // {d: n_d} for max(i,j) <= d <= i+j
  std::map<long, Integer> grassmann_structure_constants(long i, long j) const;

 private:
  long q_;
};

// Hook for negative controls: receives (m, d, omega) and returns the
// polynomial the check should use.
using OmegaHook = std::function<Poly(long, long, const Poly&)>;

Report check_q_pascal(const QContext& c, long bound, const OmegaHook& hook = nullptr);
Report check_grassmann_products(const QContext& c, long bound, const OmegaHook& hook = nullptr);
// omega_{m,d}([n]) integral for n >= m, and equal to qbinom(n-m, d)
Report check_omega_values(const QContext& c, long bound, long max_n);

// Number of d-dimensional subspaces of F_q^n by explicit enumeration (q prime).
std::vector<Integer> brute_subspace_counts(long q, int n);
// pairs (U,V), dim U = i, dim V = j, of subspaces of F_q^n, bucketed by dim(U+V)
std::map<long, Integer> brute_span_pairs(long q, int n, int i, int j);
Report check_subspace_counts(const QContext& c, int max_n);

// rows (m,d), columns n
struct OmegaTable {
  long q = 2;
  std::vector<std::pair<long, long>> rows;
  std::vector<long> ns;
  std::vector<std::vector<Rational>> values;
};
OmegaTable omega_table(const QContext& c, long max_m, long max_d, long max_n);

}  // namespace olig
