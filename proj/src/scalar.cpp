#include "oligocat/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace olig {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string str(s);
  str.erase(std::remove_if(str.begin(), str.end(), ::isspace), str.end());
  if (str.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(str, 10) != 0 || q.get_den() == 0) throw ParseError("bad rational: " + str);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) c_.push_back(Rational(c));
}
// callers may hand in mpq values built from an unreduced num/den pair
Poly::Poly(const Rational& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}
Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Poly Poly::var() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int deg) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(deg + 1, Rational(0));
  p.c_[deg] = c;
  p.c_[deg].canonicalize();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

int Poly::term_count() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return q != 0; }));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& r) {
  if (r == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= r;
  return *this;
}

Poly& Poly::operator/=(const Rational& r) {
  if (r == 0) throw std::domain_error("polynomial division by zero");
  for (auto& x : c_) x /= r;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  q = Poly();
  r = a;
  const int db = b.degree();
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    Poly m = monomial(r.leading() / lb, r.degree() - db);
    q += m;
    r -= m * b;
  }
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  Integer d = 1;
  for (const auto& x : c_)
    if (x != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  std::string s;
  int terms = 0;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    Rational scaled = c_[k] * Rational(d);
    Integer a = scaled.get_num();
    bool neg = a < 0;
    Integer mag = abs(a);
    std::string body;
    if (k == 0) {
      body = mag.get_str();
    } else {
      if (mag != 1) body = mag.get_str();
      body += var;
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (terms == 0)
      s += (neg ? "-" : "") + body;
    else
      s += (neg ? " - " : " + ") + body;
    ++terms;
  }
  if (d == 1) return s;
  if (terms > 1) return "(" + s + ")/" + d.get_str();
  return s + "/" + d.get_str();
}

// ---------------------------------------------------------------- parser
// One recursive-descent grammar covers polynomials and series:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary | power)*      juxtaposition multiplies
//   unary := ('-'|'+') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | var | 'u' | '(' expr ')' | 'O(' u^N ')'
namespace {

constexpr int kMaxParseDegree = 256;

struct SVal {
  std::vector<Poly> c;  // coefficient of u^k
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_scalar() const { return c.size() <= 1; }
  Poly scalar() const { return c.empty() ? Poly() : c[0]; }
};

SVal sadd(const SVal& a, const SVal& b, bool sub) {
  SVal r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) {
    Poly x = i < a.c.size() ? a.c[i] : Poly();
    Poly y = i < b.c.size() ? b.c[i] : Poly();
    r.c[i] = sub ? x - y : x + y;
  }
  r.trim();
  return r;
}

SVal smul(const SVal& a, const SVal& b) {
  SVal r;
  if (a.c.empty() || b.c.empty()) return r;
  size_t n = a.c.size() + b.c.size() - 1;
  if (n > kMaxParseDegree) throw ParseError("expression degree too large");
  r.c.assign(n, Poly());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

class Parser {
 public:
  Parser(std::string_view s, char var, bool allow_u) : s_(s), var_(var), allow_u_(allow_u) {}

  SVal parse_all() {
    SVal v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }
  int big_o() const { return big_o_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(' || (allow_u_ && (c == 'u' || c == 'O'));
  }

  SVal expr() {
    SVal v = term();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        v = sadd(v, term(), c == '-');
      } else {
        return v;
      }
    }
  }

  SVal term() {
    SVal v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v = smul(v, unary());
      } else if (c == '/') {
        ++pos_;
        SVal d = unary();
        if (!d.is_scalar() || !d.scalar().is_constant() || d.scalar().is_zero()) fail("division by a non-constant");
        Rational q = d.scalar().constant_term();
        for (auto& p : v.c) p /= q;
      } else if (starts_atom()) {
        v = smul(v, power());
      } else {
        return v;
      }
    }
  }

  SVal unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      SVal v = unary();
      for (auto& p : v.c) p = -p;
      return v;
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  SVal power() {
    SVal a = atom();
    if (peek() == '^') {
      ++pos_;
      long e = integer();
      if (e > kMaxParseDegree) fail("exponent too large");
      SVal r;
      r.c = {Poly(1)};
      for (long i = 0; i < e; ++i) r = smul(r, a);
      return r;
    }
    return a;
  }

  SVal atom() {
    char c = peek();
    SVal v;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer z(std::string(s_.substr(start, pos_ - start)));
      v.c = {Poly(Rational(z))};
      v.trim();
      return v;
    }
    if (c == var_) {
      ++pos_;
      v.c = {Poly::var()};
      return v;
    }
    if (allow_u_ && c == 'u') {
      ++pos_;
      v.c = {Poly(), Poly(1)};
      return v;
    }
    if (allow_u_ && c == 'O') {
      ++pos_;
      if (peek() != '(') fail("expected '(' after O");
      ++pos_;
      SVal inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      // must be exactly u^N
      if (inner.c.empty() || inner.c.back() != Poly(1)) fail("O() must contain u^N");
      for (size_t i = 0; i + 1 < inner.c.size(); ++i)
        if (!inner.c[i].is_zero()) fail("O() must contain u^N");
      if (big_o_ >= 0) fail("repeated O() term");
      big_o_ = static_cast<int>(inner.c.size()) - 1;
      return v;
    }
    if (c == '(') {
      ++pos_;
      v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  size_t pos_ = 0;
  char var_;
  bool allow_u_;
  int big_o_ = -1;
};

}  // namespace

Poly Poly::parse(std::string_view s, char var) {
  Parser p(s, var, false);
  SVal v = p.parse_all();
  return v.scalar();
}

// ---------------------------------------------------------------- combinatorics

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ParamScalar falling_factorial(long shift, unsigned length) {
  Poly r(1);
  for (unsigned i = 0; i < length; ++i) r *= Poly::var() - Poly(shift + static_cast<long>(i));
  return r;
}

ParamScalar binomial_poly(unsigned n) { return falling_factorial(0, n) / Rational(factorial(n)); }

// ---------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(int order) {
  if (order <= 0) throw std::invalid_argument("series order must be positive");
  c_.assign(order, Poly());
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Poly> coeffs) : TruncatedSeries(order) {
  for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) < order; ++i) c_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.c_[0] = Poly(1);
  return s;
}

TruncatedSeries TruncatedSeries::u(int order) {
  TruncatedSeries s(order);
  if (order > 1) s.c_[1] = Poly(1);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (int i = 0; i < order(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (int i = 0; i < order(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries r(a.order());
  for (int i = 0; i < a.order(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedSeries operator*(const Poly& s, TruncatedSeries a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries TruncatedSeries::truncate(int order) const {
  TruncatedSeries r(order);
  for (int i = 0; i < order && i < this->order(); ++i) r.c_[i] = c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries r = one(order());
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string TruncatedSeries::str() const {
  std::string s;
  bool first = true;
  for (int k = 0; k < order(); ++k) {
    const Poly& c = c_[k];
    if (c.is_zero()) continue;
    std::string piece;
    bool neg = false;
    if (k == 0) {
      piece = c.str();
    } else {
      std::string mono = k == 1 ? "u" : "u^" + std::to_string(k);
      if (c == Poly(1)) {
        piece = mono;
      } else if (c == Poly(-1)) {
        piece = mono;
        neg = true;
      } else if (c.term_count() == 1) {
        if (c.leading() < 0) {
          neg = true;
          piece = (-c).str() + "*" + mono;
        } else {
          piece = c.str() + "*" + mono;
        }
      } else {
        piece = "(" + c.str() + ")*" + mono;
      }
    }
    if (first)
      s += (neg ? "-" : "") + piece;
    else
      s += (neg ? " - " : " + ") + piece;
    first = false;
  }
  if (first) s = "0";
  return s + " + O(u^" + std::to_string(order()) + ")";
}

TruncatedSeries TruncatedSeries::parse(std::string_view s) {
  Parser p(s, 't', true);
  SVal v = p.parse_all();
  if (p.big_o() <= 0) throw ParseError("series needs an O(u^N) term with N >= 1");
  TruncatedSeries r(p.big_o());
  for (size_t i = 0; i < v.c.size() && static_cast<int>(i) < r.order(); ++i) r.c_[i] = v.c[i];
  return r;
}

TruncatedSeries binomial_series(const Poly& a, const Poly& e, int order) {
  TruncatedSeries r(order);
  Poly coeff(1);  // binom(e, n) a^n
  for (int n = 0; n < order; ++n) {
    r[n] = coeff;
    coeff = coeff * (e - Poly(n)) * a / Rational(n + 1);
  }
  return r;
}

// ---------------------------------------------------------------- evaluation

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

EvalPoint EvalPoint::rational(const Rational& t0) {
  EvalPoint e;
  e.mode_ = Mode::Rational;
  e.t0_ = t0;
  return e;
}

EvalPoint EvalPoint::modular(long t0, long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime: " + std::to_string(p));
  EvalPoint e;
  e.mode_ = Mode::Modular;
  e.p_ = p;
  e.r_ = t0;  // kept as given: the integer lift matters for denominators
  e.t0_ = t0;
  return e;
}

EvalPoint EvalPoint::parse(std::string_view s) {
  std::string str(s);
  if (str == "generic" || str.empty()) return generic();
  if (str.rfind("p:", 0) == 0) {
    auto second = str.find(':', 2);
    if (second == std::string::npos) throw ParseError("expected p:<prime>:<residue>");
    long p = std::stol(str.substr(2, second - 2));
    long r = std::stol(str.substr(second + 1));
    return modular(r, p);
  }
  return rational(parse_rational(str));
}

std::string EvalPoint::str() const {
  switch (mode_) {
    case Mode::Generic: return "generic";
    case Mode::Rational: return to_string(t0_);
    case Mode::Modular: return "p:" + std::to_string(p_) + ":" + std::to_string(r_);
  }
  return "";
}

long reduce_mod(const Rational& q, long p) {
  Integer pz = p;
  Integer den = q.get_den();
  Integer num = q.get_num();
  Integer dm = den % pz;
  if (dm == 0) throw std::domain_error("denominator divisible by " + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), pz.get_mpz_t());
  Integer r = (num * inv) % pz;
  if (r < 0) r += pz;
  return r.get_si();
}

long eval_mod(const Poly& x, long t0, long p) {
  long acc = 0;
  long t = ((t0 % p) + p) % p;
  const auto& c = x.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    __int128 v = static_cast<__int128>(acc) * t + reduce_mod(*it, p);
    acc = static_cast<long>(v % p);
  }
  return acc;
}

EvalValue eval(const Poly& x, const EvalPoint& at) {
  EvalValue v;
  v.mode = at.mode();
  switch (at.mode()) {
    case EvalPoint::Mode::Generic: v.poly = x; break;
    case EvalPoint::Mode::Rational: v.value = x.eval(at.t0()); break;
    // t0 is an integer lift (a point of Z_p), so integer-valued polys with
    // p in a denominator still reduce fine
    case EvalPoint::Mode::Modular: v.residue = reduce_mod(x.eval(Rational(at.residue())), at.prime()); break;
  }
  return v;
}

std::string EvalValue::str() const {
  switch (mode) {
    case EvalPoint::Mode::Generic: return poly.str();
    case EvalPoint::Mode::Rational: return to_string(value);
    case EvalPoint::Mode::Modular: return std::to_string(residue);
  }
  return "";
}

bool EvalValue::is_zero() const {
  switch (mode) {
    case EvalPoint::Mode::Generic: return poly.is_zero();
    case EvalPoint::Mode::Rational: return value == 0;
    case EvalPoint::Mode::Modular: return residue == 0;
  }
  return false;
}

}  // namespace olig
