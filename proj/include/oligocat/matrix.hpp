// Invariant matrices: Schwartz functions on Y x X composed by integrating
// over the middle factor.  Trace, higher traces, characteristic series, the
// orbit-basis endomorphism algebra and its specializations at rational t.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oligocat/schwartz.hpp"

namespace olig {

class InvariantMatrix {
 public:
  // entries live on cod * dom (codomain slots first)
  InvariantMatrix(SetExpr dom, SetExpr cod, SchwartzFunction entries);

  static InvariantMatrix zero(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod, int level = 0);
  static InvariantMatrix identity(ContextPtr ctx, const SetExpr& x, int level = 0);
  // constant 1 on Y x X
  static InvariantMatrix all_ones(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod);
  // indicator of a single orbit of cod * dom
  static InvariantMatrix orbit(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod, const Orbit& o);
  // A_f in Mat_{Y,X}: A_f(y,x) = 1 iff y = f(x)
  static InvariantMatrix graph(ContextPtr ctx, const GSetMap& f);
  static InvariantMatrix random(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod, int level,
                                std::mt19937& rng, int spread = 2);

  const SetExpr& dom() const { return dom_; }
  const SetExpr& cod() const { return cod_; }
  const SchwartzFunction& entries() const { return f_; }
  const GroupContext& ctx() const { return f_.ctx(); }
  const ContextPtr& context() const { return f_.context(); }
  int level() const { return f_.level(); }
  bool is_zero() const { return f_.is_zero(); }

  InvariantMatrix transpose() const;
  InvariantMatrix at_level(int level) const;

  InvariantMatrix& operator+=(const InvariantMatrix& o);
  InvariantMatrix& operator-=(const InvariantMatrix& o);
  InvariantMatrix& operator*=(const Poly& s);
  friend InvariantMatrix operator+(InvariantMatrix a, const InvariantMatrix& b) { return a += b; }
  friend InvariantMatrix operator-(InvariantMatrix a, const InvariantMatrix& b) { return a -= b; }
  friend InvariantMatrix operator*(const Poly& s, InvariantMatrix a) { return a *= s; }
  friend InvariantMatrix operator*(InvariantMatrix a, const Poly& s) { return a *= s; }
  // composition B*A = B o A
  friend InvariantMatrix operator*(const InvariantMatrix& b, const InvariantMatrix& a);
  friend bool operator==(const InvariantMatrix& a, const InvariantMatrix& b);
  friend bool operator!=(const InvariantMatrix& a, const InvariantMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  SetExpr dom_, cod_;
  SchwartzFunction f_;
};

// (BA)(z,x) = integral over y of B(z,y) A(y,x)
InvariantMatrix matmul(const InvariantMatrix& b, const InvariantMatrix& a);
InvariantMatrix matpow(const InvariantMatrix& a, unsigned n);
Poly trace(const InvariantMatrix& a);
// T_n by the permutation expansion: sum over cycle types of sign/z_lambda
// times products of traces of powers
Poly higher_trace(const InvariantMatrix& a, int n);
// T_n straight from the definition: integral of det(A(x_i,x_j)) over
// n-tuples of distinct points, divided by n!  Slow; used as an oracle.
Poly higher_trace_direct(const InvariantMatrix& a, int n);
TruncatedSeries char_series(const InvariantMatrix& a, int order = kDefaultSeriesOrder);
// Kronecker product on X*X' -> Y*Y'
InvariantMatrix kron(const InvariantMatrix& a, const InvariantMatrix& b);

// ---------------------------------------------------------------- End algebra

// Orbit basis of Mat_X^G with structure constants over Q[t].
class EndAlgebra {
 public:
  EndAlgebra(ContextPtr ctx, SetExpr x);

  int dim() const { return static_cast<int>(basis_.size()); }
  const SetExpr& object() const { return x_; }
  const ContextPtr& context() const { return ctx_; }
  const std::vector<Orbit>& basis_orbits() const { return basis_; }
  InvariantMatrix basis(int i) const;
  // coefficients of a level-0 matrix in the orbit basis
  std::vector<Poly> coords(const InvariantMatrix& m) const;
  InvariantMatrix element(const std::vector<Poly>& c) const;
  // c[a][b][k]: B_a B_b = sum_k c[a][b][k] B_k
  const std::vector<std::vector<std::vector<Poly>>>& structure() const { return c_; }
  const std::vector<Poly>& unit() const { return unit_; }
  const std::vector<Poly>& basis_traces() const { return tr_; }
  // index of the orbit transpose to basis element i
  int transpose_index(int i) const { return transpose_[i]; }
  Poly orbit_measure(int i) const;

 private:
  ContextPtr ctx_;
  SetExpr x_;
  std::vector<Orbit> basis_;
  std::vector<std::vector<std::vector<Poly>>> c_;
  std::vector<Poly> unit_, tr_;
  std::vector<int> transpose_;
};

using QVec = std::vector<Rational>;

// The End algebra with t specialized to a rational number.
class SpecializedAlgebra {
 public:
  SpecializedAlgebra(const EndAlgebra& a, const Rational& t0);

  int dim() const { return d_; }
  const Rational& t0() const { return t0_; }
  const QVec& unit() const { return unit_; }
  QVec mul(const QVec& x, const QVec& y) const;
  QVec add(const QVec& x, const QVec& y) const;
  QVec scale(const QVec& x, const Rational& s) const;
  QVec basis(int i) const;
  Rational trace(const QVec& x) const;
  bool is_zero(const QVec& x) const;

  // polynomial p evaluated at x
  QVec eval_poly(const Poly& p, const QVec& x) const;
  // minimal polynomial of x (monic), via linear dependence of powers
  Poly min_poly(const QVec& x) const;
  // minimal polynomial of x inside the corner algebra eAe (unit e)
  Poly min_poly_in(const QVec& x, const QVec& e) const;
  std::optional<QVec> inverse(const QVec& x) const;
  // x = s + n, s semisimple, n nilpotent, both polynomials in x
  std::pair<QVec, QVec> jordan_split(const QVec& x) const;
  // dimension of the subspace e A e
  int corner_dim(const QVec& e) const;

 private:
  int d_;
  Rational t0_;
  std::vector<std::vector<QVec>> c_;  // c_[a][b] = coords of B_a B_b
  QVec unit_, tr_;
};

struct TracePairing {
  std::vector<std::vector<Poly>> gram;
  Poly discriminant;
  Poly predicted;  // (-1)^r prod mu(Z_i)
  int transpose_pairs = 0;
  bool matches() const { return discriminant == predicted; }
};

TracePairing trace_pairing(const EndAlgebra& a);

// Fraction-free determinant over Q[t].
Poly determinant(std::vector<std::vector<Poly>> m);

struct SemisimpleReport {
  bool semisimple = false;
  Rational discriminant_value;
  bool nilpotent_traces_zero = true;
  std::string note;
};
SemisimpleReport is_semisimple_end(const EndAlgebra& a, const Rational& t0, unsigned seed = 1);

// Primitive orthogonal idempotents of the specialized algebra, found by
// splitting with generalized eigenspaces of elements with rational roots.
struct IdempotentDecomposition {
  std::vector<QVec> idempotents;
  std::vector<Rational> dims;  // traces
  bool complete = false;       // every piece is primitive (corner dim 1)
  std::string note;
};
IdempotentDecomposition idempotent_decompose(const SpecializedAlgebra& a, unsigned seed = 1);

// ---------------------------------------------------------------- finite oracle

// Structure constants of End_{S_N}(Q[{1..N}^n]) in the basis of equality
// patterns, by multiplying explicit N^n x N^n 0/1 matrices.  Returns, for
// each pair of patterns (a,b), the coefficient vector of M_a M_b.  Patterns
// are set partitions of 2n slots given as first-occurrence labelings, cod
// slots first.  Throws if a product is not constant on some pattern class.
struct FiniteEndTable {
  std::vector<std::vector<int>> patterns;
  std::vector<std::vector<std::vector<long>>> c;
};
FiniteEndTable finite_sym_end(int n, int N);

}  // namespace olig
