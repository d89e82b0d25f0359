#include "oligocat/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace olig {

namespace {

std::vector<int> iota_vec(int n, int start = 0) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), start);
  return v;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

// ---------------------------------------------------------------- InvariantMatrix

InvariantMatrix::InvariantMatrix(SetExpr dom, SetExpr cod, SchwartzFunction entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), f_(std::move(entries)) {
  if (!(f_.domain() == cod_ * dom_)) throw std::invalid_argument("matrix entries must live on codomain x domain");
}

InvariantMatrix InvariantMatrix::zero(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod, int level) {
  return InvariantMatrix(dom, cod, SchwartzFunction::zero(std::move(ctx), cod * dom, level));
}

InvariantMatrix InvariantMatrix::identity(ContextPtr ctx, const SetExpr& x, int level) {
  auto one = SchwartzFunction::constant(ctx, x, 1, level);
  return InvariantMatrix(x, x, pushforward(GSetMap::diagonal(x), one));
}

InvariantMatrix InvariantMatrix::all_ones(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod) {
  return InvariantMatrix(dom, cod, SchwartzFunction::constant(std::move(ctx), cod * dom, 1));
}

InvariantMatrix InvariantMatrix::orbit(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod, const Orbit& o) {
  return InvariantMatrix(dom, cod, SchwartzFunction::indicator(std::move(ctx), cod * dom, o));
}

InvariantMatrix InvariantMatrix::graph(ContextPtr ctx, const GSetMap& f) {
  // x -> (f(x), x) is injective, so pushing 1 forward gives the indicator of the graph
  const SetExpr& x = f.src;
  std::vector<int> comp;
  std::vector<std::vector<int>> pi;
  for (int c = 0; c < x.size(); ++c) {
    comp.push_back(f.comp[c] * x.size() + c);
    pi.push_back(concat(f.pi[c], iota_vec(x.comps[c].slot_count())));
  }
  auto g = GSetMap::make(x, f.tgt * x, comp, pi, "graph(" + f.str() + ")");
  return InvariantMatrix(x, f.tgt, pushforward(g, SchwartzFunction::constant(std::move(ctx), x, 1)));
}

InvariantMatrix InvariantMatrix::random(ContextPtr ctx, const SetExpr& dom, const SetExpr& cod, int level,
                                        std::mt19937& rng, int spread) {
  std::uniform_int_distribution<int> c(-spread, spread);
  return InvariantMatrix(dom, cod, tabulate(std::move(ctx), cod * dom, level, [&](int, const Pattern&) { return Poly(c(rng)); }));
}

InvariantMatrix InvariantMatrix::transpose() const {
  return InvariantMatrix(cod_, dom_, pullback(GSetMap::swap(dom_, cod_), f_));
}

InvariantMatrix InvariantMatrix::at_level(int level) const {
  return InvariantMatrix(dom_, cod_, change_level(f_, level));
}

InvariantMatrix& InvariantMatrix::operator+=(const InvariantMatrix& o) {
  if (!(dom_ == o.dom_) || !(cod_ == o.cod_)) throw std::invalid_argument("matrix shapes differ");
  f_ += o.f_;
  return *this;
}

InvariantMatrix& InvariantMatrix::operator-=(const InvariantMatrix& o) {
  if (!(dom_ == o.dom_) || !(cod_ == o.cod_)) throw std::invalid_argument("matrix shapes differ");
  f_ -= o.f_;
  return *this;
}

InvariantMatrix& InvariantMatrix::operator*=(const Poly& s) {
  f_ *= s;
  return *this;
}

InvariantMatrix operator*(const InvariantMatrix& b, const InvariantMatrix& a) { return matmul(b, a); }

bool operator==(const InvariantMatrix& a, const InvariantMatrix& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.f_ == b.f_;
}

std::string InvariantMatrix::str() const { return f_.str(); }

InvariantMatrix matmul(const InvariantMatrix& b, const InvariantMatrix& a) {
  if (!(a.cod() == b.dom())) throw std::invalid_argument("matmul: shape mismatch");
  if (a.ctx().name() != b.ctx().name()) throw std::invalid_argument("matmul: contexts differ");
  const int level = std::max(a.level(), b.level());
  const SchwartzFunction fa = change_level(a.entries(), level);
  const SchwartzFunction fb = change_level(b.entries(), level);
  const SetExpr &x = a.dom(), &y = a.cod(), &z = b.cod();
  std::set<int> ca, cb;
  for (const auto& [o, v] : fa.terms()) ca.insert(o.comp);
  for (const auto& [o, v] : fb.terms()) cb.insert(o.comp);
  SchwartzFunction out(a.context(), z * x, level);
  for (int k = 0; k < z.size(); ++k)
    for (int j = 0; j < y.size(); ++j) {
      int bj = k * y.size() + j;
      if (!cb.count(bj)) continue;
      for (int i = 0; i < x.size(); ++i) {
        int aj = j * x.size() + i;
        if (!ca.count(aj)) continue;
        int sz = z.comps[k].slot_count(), sy = y.comps[j].slot_count(), sx = x.comps[i].slot_count();
        Product src = z.comps[k] * y.comps[j] * x.comps[i];
        Product tgt = z.comps[k] * x.comps[i];
        auto pb = iota_vec(sz + sy), pa = iota_vec(sy + sx, sz);
        auto pi = concat(iota_vec(sz), iota_vec(sx, sz + sy));
        const GroupContext& ctx = a.ctx();
        auto fn = [&](const Pattern& r) {
          Poly vb = fb.value_at(bj, pull_slots(ctx, r, pb));
          if (vb.is_zero()) return vb;
          Poly va = fa.value_at(aj, pull_slots(ctx, r, pa));
          if (va.is_zero()) return va;
          return vb * va;
        };
        // cut branches where B already vanishes on the (z, y) slots
        PrefixFilter keep{sz + sy, [&](const Pattern& zy) { return !fb.value_at(bj, zy).is_zero(); }};
        for (auto& [q, v] : push_ordered(ctx, src, tgt, pi, level, fn, &keep)) out.add(Orbit{k * x.size() + i, q}, v);
      }
    }
  return InvariantMatrix(x, z, std::move(out));
}

InvariantMatrix matpow(const InvariantMatrix& a, unsigned n) {
  if (!(a.dom() == a.cod())) throw std::invalid_argument("matpow: not square");
  InvariantMatrix r = InvariantMatrix::identity(a.context(), a.dom(), a.level());
  for (unsigned i = 0; i < n; ++i) r = matmul(a, r);
  return r;
}

Poly trace(const InvariantMatrix& a) {
  if (!(a.dom() == a.cod())) throw std::invalid_argument("trace: not square");
  return integrate(pullback(GSetMap::diagonal(a.dom()), a.entries()));
}

namespace {

// T_0..T_{n} from power traces by Newton: k T_k = sum_{i=1}^k (-1)^{i-1} p_i T_{k-i}
std::vector<Poly> newton(const std::vector<Poly>& p, int n) {
  std::vector<Poly> T(n + 1);
  T[0] = Poly(1);
  for (int k = 1; k <= n; ++k) {
    Poly s;
    for (int i = 1; i <= k; ++i) s += (i % 2 ? p[i] : -p[i]) * T[k - i];
    T[k] = s / Rational(k);
  }
  return T;
}

std::vector<Poly> power_traces(const InvariantMatrix& a, int n) {
  std::vector<Poly> p(n + 1);
  if (n == 0) return p;
  InvariantMatrix pw = a;
  p[1] = trace(pw);
  for (int k = 2; k <= n; ++k) {
    pw = matmul(a, pw);
    p[k] = trace(pw);
  }
  return p;
}

}  // namespace

Poly higher_trace(const InvariantMatrix& a, int n) {
  if (n < 0) throw std::invalid_argument("higher_trace: n < 0");
  if (!(a.dom() == a.cod())) throw std::invalid_argument("higher_trace: not square");
  return newton(power_traces(a, n), n)[n];
}

TruncatedSeries char_series(const InvariantMatrix& a, int order) {
  if (order < 1) throw std::invalid_argument("char_series: order must be positive");
  if (!(a.dom() == a.cod())) throw std::invalid_argument("char_series: not square");
  auto T = newton(power_traces(a, order - 1), order - 1);
  return TruncatedSeries(order, T);
}

Poly higher_trace_direct(const InvariantMatrix& a, int n) {
  if (!(a.dom() == a.cod())) throw std::invalid_argument("higher_trace: not square");
  if (n == 0) return Poly(1);
  const SetExpr& x = a.dom();
  const GroupContext& ctx = a.ctx();
  const int m = x.size();
  SetExpr xn = power(x, n);
  std::vector<int> perm = iota_vec(n);
  auto fn = [&](int c, const Pattern& rep) -> Poly {
    std::vector<int> comp(n);
    for (int i = n - 1, r = c; i >= 0; --i, r /= m) comp[i] = r % m;
    std::vector<std::vector<int>> slots(n);
    int off = 0;
    for (int i = 0; i < n; ++i) {
      int s = x.comps[comp[i]].slot_count();
      slots[i] = iota_vec(s, off);
      off += s;
    }
    // points as sets of values per factor (Sub factors unordered)
    auto key = [&](int i) {
      std::vector<std::vector<int>> k;
      const Product& p = x.comps[comp[i]];
      auto start = p.factor_start();
      for (size_t f = 0; f < p.factors.size(); ++f) {
        std::vector<int> vals;
        for (int s = 0; s < p.factors[f].n; ++s) vals.push_back(rep.v[slots[i][start[f] + s]]);
        if (p.factors[f].kind == FactorKind::Sub) std::sort(vals.begin(), vals.end());
        k.push_back(vals);
      }
      return std::make_pair(comp[i], k);
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (key(i) == key(j)) return Poly();
    std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        e[i][j] = a.entries().value_at(comp[i] * m + comp[j], pull_slots(ctx, rep, concat(slots[i], slots[j])));
    return determinant(e);
  };
  auto f = tabulate(a.context(), xn, a.level(), fn);
  return integrate(f) / Rational(factorial(n));
}

InvariantMatrix kron(const InvariantMatrix& a, const InvariantMatrix& b) {
  const int level = std::max(a.level(), b.level());
  auto fa = change_level(a.entries(), level), fb = change_level(b.entries(), level);
  const SetExpr &x = a.dom(), &y = a.cod(), &x2 = b.dom(), &y2 = b.cod();
  SetExpr dom = x * x2, cod = y * y2;
  const GroupContext& ctx = a.ctx();
  auto fn = [&](int c, const Pattern& rep) -> Poly {
    int cy = c / dom.size(), cx = c % dom.size();
    int yi = cy / y2.size(), yj = cy % y2.size();
    int xi = cx / x2.size(), xj = cx % x2.size();
    int s1 = y.comps[yi].slot_count(), s2 = y2.comps[yj].slot_count();
    int s3 = x.comps[xi].slot_count(), s4 = x2.comps[xj].slot_count();
    Poly va = fa.value_at(yi * x.size() + xi, pull_slots(ctx, rep, concat(iota_vec(s1), iota_vec(s3, s1 + s2))));
    if (va.is_zero()) return va;
    return va * fb.value_at(yj * x2.size() + xj,
                            pull_slots(ctx, rep, concat(iota_vec(s2, s1), iota_vec(s4, s1 + s2 + s3))));
  };
  return InvariantMatrix(dom, cod, tabulate(a.context(), cod * dom, level, fn));
}

// ---------------------------------------------------------------- EndAlgebra

EndAlgebra::EndAlgebra(ContextPtr ctx, SetExpr x) : ctx_(std::move(ctx)), x_(std::move(x)) {
  SetExpr xx = x_ * x_;
  basis_ = orbits(*ctx_, xx, 0);
  const int d = dim();
  std::vector<InvariantMatrix> b;
  for (int i = 0; i < d; ++i) b.push_back(basis(i));
  c_.assign(d, std::vector<std::vector<Poly>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c_[i][j] = coords(matmul(b[i], b[j]));
  unit_ = coords(InvariantMatrix::identity(ctx_, x_));
  for (int i = 0; i < d; ++i) tr_.push_back(trace(b[i]));
  transpose_.assign(d, -1);
  for (int i = 0; i < d; ++i) {
    auto t = b[i].transpose();
    for (int j = 0; j < d; ++j)
      if (t.entries().terms().count(basis_[j])) transpose_[i] = j;
  }
}

InvariantMatrix EndAlgebra::basis(int i) const { return InvariantMatrix::orbit(ctx_, x_, x_, basis_.at(i)); }

std::vector<Poly> EndAlgebra::coords(const InvariantMatrix& m) const {
  if (m.level() != 0) throw std::invalid_argument("End algebra elements must be fully invariant (level 0)");
  std::vector<Poly> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = m.entries().value(basis_[i]);
  return c;
}

InvariantMatrix EndAlgebra::element(const std::vector<Poly>& c) const {
  SchwartzFunction f(ctx_, x_ * x_, 0);
  for (int i = 0; i < dim(); ++i) f.set(basis_[i], c.at(i));
  return InvariantMatrix(x_, x_, f);
}

Poly EndAlgebra::orbit_measure(int i) const { return olig::orbit_measure(*ctx_, x_ * x_, basis_.at(i)); }

// ---------------------------------------------------------------- trace pairing

Poly determinant(std::vector<std::vector<Poly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = Poly::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

TracePairing trace_pairing(const EndAlgebra& a) {
  TracePairing tp;
  const int d = a.dim();
  tp.gram.assign(d, std::vector<Poly>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Poly s;
      for (int k = 0; k < d; ++k) s += a.structure()[i][j][k] * a.basis_traces()[k];
      tp.gram[i][j] = s;
    }
  tp.discriminant = determinant(tp.gram);
  Poly pred(1);
  for (int i = 0; i < d; ++i) {
    pred *= a.orbit_measure(i);
    if (a.transpose_index(i) > i) ++tp.transpose_pairs;
  }
  tp.predicted = tp.transpose_pairs % 2 ? -pred : pred;
  return tp;
}

// ---------------------------------------------------------------- specialized algebra

SpecializedAlgebra::SpecializedAlgebra(const EndAlgebra& a, const Rational& t0) : d_(a.dim()), t0_(t0) {
  c_.assign(d_, std::vector<QVec>(d_, QVec(d_)));
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      for (int k = 0; k < d_; ++k) c_[i][j][k] = a.structure()[i][j][k].eval(t0);
  for (int i = 0; i < d_; ++i) {
    unit_.push_back(a.unit()[i].eval(t0));
    tr_.push_back(a.basis_traces()[i].eval(t0));
  }
}

QVec SpecializedAlgebra::mul(const QVec& x, const QVec& y) const {
  QVec r(d_);
  for (int i = 0; i < d_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d_; ++j) {
      if (y[j] == 0) continue;
      Rational s = x[i] * y[j];
      for (int k = 0; k < d_; ++k)
        if (c_[i][j][k] != 0) r[k] += s * c_[i][j][k];
    }
  }
  return r;
}

QVec SpecializedAlgebra::add(const QVec& x, const QVec& y) const {
  QVec r(d_);
  for (int i = 0; i < d_; ++i) r[i] = x[i] + y[i];
  return r;
}

QVec SpecializedAlgebra::scale(const QVec& x, const Rational& s) const {
  QVec r(d_);
  for (int i = 0; i < d_; ++i) r[i] = x[i] * s;
  return r;
}

QVec SpecializedAlgebra::basis(int i) const {
  QVec r(d_);
  r.at(i) = 1;
  return r;
}

Rational SpecializedAlgebra::trace(const QVec& x) const {
  Rational s = 0;
  for (int i = 0; i < d_; ++i) s += x[i] * tr_[i];
  return s;
}

bool SpecializedAlgebra::is_zero(const QVec& x) const {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q == 0; });
}

namespace {

// Incremental linear-dependence finder.  Feed vectors v_0, v_1, ...; add()
// returns the coefficients c with v_k = sum_{i<k} c_i v_i once v_k depends
// on the earlier ones.
class Dependence {
 public:
  explicit Dependence(int dim) : dim_(dim) {}
  std::optional<QVec> add(const QVec& v) {
    const int k = static_cast<int>(count_++);
    QVec r = v;
    QVec combo(k + 1);  // r = v_k - sum combo_i v_i, tracked as coefficients of v_0..v_k
    combo[k] = 1;
    for (size_t e = 0; e < rows_.size(); ++e) {
      const Rational f = r[pivots_[e]];
      if (f == 0) continue;
      for (int i = 0; i < dim_; ++i) r[i] -= f * rows_[e][i];
      for (size_t i = 0; i < combos_[e].size(); ++i) combo[i] -= f * combos_[e][i];
    }
    int piv = -1;
    for (int i = 0; i < dim_; ++i)
      if (r[i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // 0 = sum combo_i v_i with combo_k = 1
      QVec c(k);
      for (int i = 0; i < k; ++i) c[i] = -combo[i];
      return c;
    }
    Rational inv = 1 / r[piv];
    for (auto& q : r) q *= inv;
    for (auto& q : combo) q *= inv;
    // keep reduced form: clear the new pivot from older rows
    for (size_t e = 0; e < rows_.size(); ++e) {
      const Rational f = rows_[e][piv];
      if (f == 0) continue;
      for (int i = 0; i < dim_; ++i) rows_[e][i] -= f * r[i];
      combos_[e].resize(k + 1);
      for (int i = 0; i <= k; ++i) combos_[e][i] -= f * combo[i];
    }
    rows_.push_back(r);
    combos_.push_back(combo);
    pivots_.push_back(piv);
    return std::nullopt;
  }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  size_t count_ = 0;
  std::vector<QVec> rows_, combos_;
  std::vector<int> pivots_;
};

Poly min_poly_from(const SpecializedAlgebra& a, const QVec& x, const QVec& one) {
  Dependence dep(a.dim());
  QVec pw = one;
  for (int k = 0; k <= a.dim() + 1; ++k) {
    if (auto c = dep.add(pw)) {
      std::vector<Rational> coeffs(k + 1);
      for (int i = 0; i < k; ++i) coeffs[i] = -(*c)[i];
      coeffs[k] = 1;
      return Poly(coeffs);
    }
    pw = a.mul(x, pw);
  }
  throw std::logic_error("min_poly: no dependence found");
}

QVec eval_poly_with(const SpecializedAlgebra& a, const Poly& p, const QVec& x, const QVec& one) {
  QVec r(a.dim());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = a.add(a.mul(x, r), a.scale(one, *it));
  return r;
}

}  // namespace

QVec SpecializedAlgebra::eval_poly(const Poly& p, const QVec& x) const { return eval_poly_with(*this, p, x, unit_); }

Poly SpecializedAlgebra::min_poly(const QVec& x) const { return min_poly_from(*this, x, unit_); }

Poly SpecializedAlgebra::min_poly_in(const QVec& x, const QVec& e) const { return min_poly_from(*this, x, e); }

std::optional<QVec> SpecializedAlgebra::inverse(const QVec& x) const {
  Poly p = min_poly(x);
  Rational c0 = p.coeff(0);
  if (c0 == 0) return std::nullopt;
  // x * q(x) = -c0 where q = (p - c0)/z
  std::vector<Rational> q(p.coeffs().begin() + 1, p.coeffs().end());
  return scale(eval_poly(Poly(q), x), -1 / c0);
}

std::pair<QVec, QVec> SpecializedAlgebra::jordan_split(const QVec& x) const {
  Poly p = min_poly(x);
  Poly s = Poly::exact_div(p, Poly::gcd(p, p.derivative()));
  Poly ds = s.derivative();
  QVec y = x;
  for (int iter = 0; iter < 64; ++iter) {
    QVec sy = eval_poly(s, y);
    if (is_zero(sy)) {
      QVec n(d_);
      for (int i = 0; i < d_; ++i) n[i] = x[i] - y[i];
      return {y, n};
    }
    auto inv = inverse(eval_poly(ds, y));
    if (!inv) throw std::logic_error("jordan_split: derivative not invertible");
    QVec step = mul(sy, *inv);
    for (int i = 0; i < d_; ++i) y[i] -= step[i];
  }
  throw std::logic_error("jordan_split: Newton iteration did not converge");
}

int SpecializedAlgebra::corner_dim(const QVec& e) const {
  Dependence dep(d_);
  for (int i = 0; i < d_; ++i) dep.add(mul(e, mul(basis(i), e)));
  return dep.rank();
}

SemisimpleReport is_semisimple_end(const EndAlgebra& a, const Rational& t0, unsigned seed) {
  SemisimpleReport r;
  auto tp = trace_pairing(a);
  r.discriminant_value = tp.discriminant.eval(t0);
  r.semisimple = r.discriminant_value != 0;
  SpecializedAlgebra s(a, t0);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    QVec x(s.dim());
    for (auto& q : x) q = c(rng);
    auto [ss, nil] = s.jordan_split(x);
    if (s.trace(nil) != 0) {
      r.nilpotent_traces_zero = false;
      r.note = "nilpotent part with nonzero trace";
    }
  }
  if (!r.semisimple) r.note = "trace pairing degenerate at t = " + to_string(t0);
  return r;
}

// ---------------------------------------------------------------- idempotents

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> d;
  if (n == 0 || n > Integer("1000000000000")) return d;
  for (Integer i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}

std::vector<Rational> rational_roots(Poly p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<Rational> c(p.coeffs().begin() + low, p.coeffs().end());
  if (c.size() < 2) return roots;
  Integer l = 1;
  for (auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> z;
  for (auto& q : c) z.push_back(Integer(q * l));
  Poly ip(std::vector<Rational>(z.begin(), z.end()));
  for (const auto& num : divisors(z.front()))
    for (const auto& den : divisors(z.back()))
      for (int sg : {1, -1}) {
        Rational r(num * sg, den);
        r.canonicalize();
        if (ip.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  return roots;
}

// u a + v b = gcd
void ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v) {
  Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    Poly q, r;
    Poly::divmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  Rational lc = r0.leading();
  g = r0 / lc;
  u = s0 / lc;
  v = t0 / lc;
}

// try to split e with the element r of eAe; returns the nontrivial
// generalized-eigenspace idempotent if one exists
std::optional<QVec> split_with(const SpecializedAlgebra& a, const QVec& r, const QVec& e) {
  Poly m = a.min_poly_in(r, e);
  for (const Rational& lam : rational_roots(m)) {
    Poly lin(std::vector<Rational>{-lam, 1});
    Poly pk(1), rest = m;
    for (;;) {
      Poly q, rem;
      Poly::divmod(rest, lin, q, rem);
      if (!rem.is_zero()) break;
      rest = q;
      pk *= lin;
    }
    if (rest.degree() < 1) continue;  // single eigenvalue
    Poly g, u, v;
    ext_gcd(pk, rest, g, u, v);
    // v*rest is 1 on the lam-part and 0 elsewhere
    QVec f = eval_poly_with(a, v * rest, r, e);
    if (!a.is_zero(f) && f != e) return f;
  }
  return std::nullopt;
}

}  // namespace

IdempotentDecomposition idempotent_decompose(const SpecializedAlgebra& a, unsigned seed) {
  IdempotentDecomposition out;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<QVec> todo{a.unit()};
  out.complete = true;
  while (!todo.empty()) {
    QVec e = todo.back();
    todo.pop_back();
    if (a.corner_dim(e) <= 1) {
      out.idempotents.push_back(e);
      continue;
    }
    std::optional<QVec> f;
    for (int trial = 0; trial < a.dim() + 60 && !f; ++trial) {
      QVec x(a.dim());
      if (trial < a.dim())
        x = a.basis(trial);
      else
        for (auto& q : x) q = c(rng);
      QVec r = a.mul(e, a.mul(x, e));
      f = split_with(a, r, e);
    }
    if (!f) {
      out.complete = false;
      out.note = "could not split an idempotent with corner dimension " + std::to_string(a.corner_dim(e)) +
                 " using elements with rational eigenvalues";
      out.idempotents.push_back(e);
      continue;
    }
    QVec g(a.dim());
    for (int i = 0; i < a.dim(); ++i) g[i] = e[i] - (*f)[i];
    todo.push_back(g);
    todo.push_back(*f);
  }
  std::sort(out.idempotents.begin(), out.idempotents.end());
  for (const auto& e : out.idempotents) out.dims.push_back(a.trace(e));
  return out;
}

// ---------------------------------------------------------------- finite oracle

FiniteEndTable finite_sym_end(int n, int N) {
  if (n < 0 || N < 1) throw std::invalid_argument("finite_sym_end: bad size");
  long pts = 1;
  for (int i = 0; i < n; ++i) pts *= N;
  auto digits = [&](long x) {
    std::vector<int> d(n);
    for (int i = n - 1; i >= 0; --i, x /= N) d[i] = static_cast<int>(x % N);
    return d;
  };
  FiniteEndTable tab;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> cls(pts, std::vector<int>(pts));
  for (long y = 0; y < pts; ++y)
    for (long x = 0; x < pts; ++x) {
      auto v = digits(y), w = digits(x);
      v.insert(v.end(), w.begin(), w.end());
      std::map<int, int> relabel;
      for (int& q : v) q = relabel.emplace(q, static_cast<int>(relabel.size())).first->second;
      auto it = index.find(v);
      if (it == index.end()) {
        it = index.emplace(v, static_cast<int>(tab.patterns.size())).first;
        tab.patterns.push_back(v);
      }
      cls[y][x] = it->second;
    }
  const int d = static_cast<int>(tab.patterns.size());
  tab.c.assign(d, std::vector<std::vector<long>>(d, std::vector<long>(d, 0)));
  std::vector<std::vector<long>> prod(pts, std::vector<long>(pts));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      for (auto& row : prod) std::fill(row.begin(), row.end(), 0);
      for (long z = 0; z < pts; ++z)
        for (long y = 0; y < pts; ++y) {
          if (cls[z][y] != a) continue;
          for (long x = 0; x < pts; ++x)
            if (cls[y][x] == b) ++prod[z][x];
        }
      std::vector<long> val(d, -1);
      for (long z = 0; z < pts; ++z)
        for (long x = 0; x < pts; ++x) {
          long& slot = val[cls[z][x]];
          if (slot < 0)
            slot = prod[z][x];
          else if (slot != prod[z][x])
            throw std::logic_error("finite oracle: product not invariant");
        }
      for (int k = 0; k < d; ++k) tab.c[a][b][k] = val[k];
    }
  return tab;
}

}  // namespace olig
