// Exact coefficient arithmetic: rationals, univariate polynomials over Q,
// truncated power series with polynomial coefficients, evaluation points.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace olig {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view s);

// Dense polynomial in one variable with rational coefficients.  Used as the
// parameter ring Q[t] for measures and also for min polys, q-binomial
// polynomials and similar univariate objects (the variable name only matters
// when printing).
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly var();
  static Poly monomial(const Rational& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  Rational constant_term() const { return coeff(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  int term_count() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& r);
  Poly& operator/=(const Rational& r);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  friend Poly operator*(const Rational& r, Poly a) { return a *= r; }
  friend Poly operator/(Poly a, const Rational& r) { return a /= r; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Rational eval(const Rational& x) const;
  Poly compose(const Poly& inner) const;
  Poly derivative() const;
  Poly monic() const;

  // Euclidean division; throws on division by zero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Exact quotient, throws if b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0)=0

  // Text form, e.g. "(t^2 - t)/2".
  std::string str(char var = 't') const;
  static Poly parse(std::string_view s, char var = 't');

 private:
  void trim();
  std::vector<Rational> c_;
};

using ParamScalar = Poly;

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // 0 outside 0<=k<=n
ParamScalar falling_factorial(long shift, unsigned length);
ParamScalar binomial_poly(unsigned n);

constexpr int kDefaultSeriesOrder = 8;

// Power series in u truncated at O(u^order), coefficients in Q[t].
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = kDefaultSeriesOrder);
  TruncatedSeries(int order, std::vector<Poly> coeffs);
  static TruncatedSeries one(int order);
  static TruncatedSeries u(int order);

  int order() const { return static_cast<int>(c_.size()); }
  const Poly& operator[](int i) const { return c_.at(i); }
  Poly& operator[](int i) { return c_.at(i); }
  const std::vector<Poly>& coeffs() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Poly& s, TruncatedSeries a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  TruncatedSeries truncate(int order) const;
  TruncatedSeries pow(unsigned e) const;

  // "c0 + c1*u + ... + O(u^N)"
  std::string str() const;
  static TruncatedSeries parse(std::string_view s);

 private:
  std::vector<Poly> c_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// (1 + a u)^e where e is a polynomial in t; uses binomial series.
TruncatedSeries binomial_series(const Poly& a, const Poly& e, int order);

class EvalPoint {
 public:
  enum class Mode { Generic, Rational, Modular };
  static EvalPoint generic() { return EvalPoint(); }
  static EvalPoint rational(const Rational& t0);
  static EvalPoint modular(long t0, long p);
  // "generic", a rational like "5" or "-1/2", or "p:<prime>:<residue>".
  static EvalPoint parse(std::string_view s);

  Mode mode() const { return mode_; }
  const Rational& t0() const { return t0_; }
  long prime() const { return p_; }
  long residue() const { return r_; }
  std::string str() const;

 private:
  Mode mode_ = Mode::Generic;
  Rational t0_ = 0;
  long p_ = 0;
  long r_ = 0;
};

struct EvalValue {
  EvalPoint::Mode mode = EvalPoint::Mode::Generic;
  Poly poly;        // generic
  Rational value;   // rational
  long residue = 0; // modular
  std::string str() const;
  bool is_zero() const;
};

EvalValue eval(const Poly& x, const EvalPoint& at);
long eval_mod(const Poly& x, long t0, long p);
long reduce_mod(const Rational& q, long p);
bool is_prime(long p);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace olig
