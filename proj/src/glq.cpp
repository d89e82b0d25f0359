#include "oligocat/glq.hpp"

#include <set>
#include <stdexcept>

namespace olig {

QContext::QContext(long q) : q_(q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
}

Integer QContext::q_pow(long e) const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(q_).get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Integer QContext::q_int(long n) const {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  Integer s = 0, p = 1;
  for (long i = 0; i < n; ++i, p *= q_) s += p;
  return s;
}

Integer QContext::q_factorial(long n) const {
  Integer f = 1;
  for (long i = 1; i <= n; ++i) f *= q_int(i);
  return f;
}

Integer QContext::q_binom(long n, long d) const {
  if (d < 0 || n < 0 || d > n) throw std::invalid_argument("q_binom: need 0 <= d <= n");
  return q_factorial(n) / (q_factorial(d) * q_factorial(n - d));
}

Poly QContext::shift() const { return Poly(std::vector<Rational>{1, Rational(q_)}); }

Poly QContext::shift_inverse() const {
  return Poly(std::vector<Rational>{Rational(-1, q_), Rational(1, q_)});
}

Poly QContext::omega0(long d) const {
  if (d < 0) throw std::invalid_argument("omega: negative d");
  Poly p(1);
  for (long i = 0; i < d; ++i) p *= Poly::var() - Poly(Rational(q_int(i)));
  Rational denom(q_pow(d * (d - 1) / 2) * q_factorial(d));
  return p / denom;
}

Poly QContext::omega(long m, long d) const {
  if (m < 0) throw std::invalid_argument("omega: negative m");
  Poly inner = Poly::var();
  Poly si = shift_inverse();
  for (long k = 0; k < m; ++k) inner = si.compose(inner);
  return omega0(d).compose(inner);
}

std::map<long, Integer> QContext::grassmann_structure_constants(long i, long j) const {
  if (i < 0 || j < 0) throw std::invalid_argument("grassmann: negative index");
  std::map<long, Integer> out;
  for (long d = std::max(i, j); d <= i + j; ++d)
    out[d] = q_pow((d - i) * (d - j)) * q_factorial(d) /
             (q_factorial(d - i) * q_factorial(d - j) * q_factorial(i + j - d));
  return out;
}

namespace {

Poly hooked(const QContext& c, const OmegaHook& hook, long m, long d) {
  if (d < 0) return Poly();
  Poly w = c.omega(m, d);
  return hook ? hook(m, d, w) : w;
}

std::string md(long m, long d) { return "(m,d)=(" + std::to_string(m) + "," + std::to_string(d) + ")"; }

}  // namespace

Report check_q_pascal(const QContext& c, long bound, const OmegaHook& hook) {
  Report r;
  r.title = "q-Pascal, q=" + std::to_string(c.q());
  for (long m = 0; m <= bound; ++m)
    for (long d = 0; d <= bound; ++d) {
      Poly lhs = hooked(c, hook, m, d);
      Poly rhs = Rational(c.q_pow(d)) * hooked(c, hook, m + 1, d) + hooked(c, hook, m + 1, d - 1);
      r.add("omega_{m,d} = q^d omega_{m+1,d} + omega_{m+1,d-1} " + md(m, d), lhs == rhs,
            lhs == rhs ? "" : "difference " + (lhs - rhs).str('x'));
    }
  return r;
}

Report check_grassmann_products(const QContext& c, long bound, const OmegaHook& hook) {
  Report r;
  r.title = "Grassmannian products, q=" + std::to_string(c.q());
  for (long i = 0; i <= bound; ++i)
    for (long j = 0; j <= bound; ++j) {
      Poly lhs = hooked(c, hook, 0, i) * hooked(c, hook, 0, j);
      Poly rhs;
      for (const auto& [d, n] : c.grassmann_structure_constants(i, j)) rhs += Rational(n) * hooked(c, hook, 0, d);
      r.add("omega_i omega_j = sum n_d omega_d (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
            lhs == rhs, lhs == rhs ? "" : "difference " + (lhs - rhs).str('x'));
    }
  return r;
}

Report check_omega_values(const QContext& c, long bound, long max_n) {
  Report r;
  r.title = "omega values, q=" + std::to_string(c.q());
  for (long m = 0; m <= bound; ++m)
    for (long d = 0; d <= bound; ++d) {
      Poly w = c.omega(m, d);
      std::string bad;
      for (long n = m; n <= max_n && bad.empty(); ++n) {
        Rational v = w.eval(Rational(c.q_int(n)));
        Integer want = n - m >= d ? c.q_binom(n - m, d) : Integer(0);
        if (v.get_den() != 1 || v != Rational(want))
          bad = "n=" + std::to_string(n) + ": " + to_string(v) + " vs " + to_string(want);
      }
      r.add("omega_{m,d}([n]) = qbinom(n-m,d) " + md(m, d), bad.empty(), bad);
    }
  return r;
}

namespace {

// vectors of F_q^n as integers in base q
struct Space {
  long q;
  int n;
  int size;
  std::vector<int> digits(int v) const {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i, v /= q) d[i] = v % q;
    return d;
  }
  int pack(const std::vector<int>& d) const {
    int v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * static_cast<int>(q) + d[i];
    return v;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % q;
    return pack(x);
  }
  int scale(int a, int s) const {
    auto x = digits(a);
    for (auto& e : x) e = static_cast<int>((e * s) % q);
    return pack(x);
  }
  // closure of a set of vectors under + and scalars
  std::vector<char> span(std::vector<char> s) const {
    s[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < size; ++a)
        if (s[a])
          for (int b = 0; b < size; ++b)
            if (s[b] && !s[add(a, b)]) s[add(a, b)] = grew = 1;
      for (int a = 0; a < size; ++a)
        if (s[a])
          for (int k = 2; k < q; ++k)
            if (!s[scale(a, k)]) s[scale(a, k)] = grew = 1;
    }
    return s;
  }
  int dim(const std::vector<char>& s) const {
    int c = 0;
    for (char x : s) c += x;
    int d = 0;
    for (int p = 1; p < c; p *= static_cast<int>(q)) ++d;
    return d;
  }
};

Space make_space(long q, int n) {
  for (long k = 2; k * k <= q; ++k)
    if (q % k == 0) throw std::invalid_argument("brute force needs prime q");
  Space s{q, n, 1};
  for (int i = 0; i < n; ++i) s.size *= static_cast<int>(q);
  if (s.size > 4096) throw std::invalid_argument("brute force space too large");
  return s;
}

std::vector<std::vector<char>> all_subspaces(const Space& sp) {
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> todo;
  std::vector<char> zero(sp.size, 0);
  zero[0] = 1;
  seen.insert(zero);
  todo.push_back(zero);
  while (!todo.empty()) {
    auto s = todo.back();
    todo.pop_back();
    for (int v = 1; v < sp.size; ++v)
      if (!s[v]) {
        auto t = s;
        t[v] = 1;
        t = sp.span(t);
        if (seen.insert(t).second) todo.push_back(t);
      }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Integer> brute_subspace_counts(long q, int n) {
  Space sp = make_space(q, n);
  std::vector<Integer> out(n + 1, 0);
  for (const auto& s : all_subspaces(sp)) out[sp.dim(s)] += 1;
  return out;
}

std::map<long, Integer> brute_span_pairs(long q, int n, int i, int j) {
  Space sp = make_space(q, n);
  auto subs = all_subspaces(sp);
  std::vector<const std::vector<char>*> a, b;
  for (const auto& s : subs) {
    int d = sp.dim(s);
    if (d == i) a.push_back(&s);
    if (d == j) b.push_back(&s);
  }
  std::map<long, Integer> out;
  for (auto* u : a)
    for (auto* v : b) {
      std::vector<char> w(sp.size);
      for (int k = 0; k < sp.size; ++k) w[k] = (*u)[k] | (*v)[k];
      out[sp.dim(sp.span(w))] += 1;
    }
  return out;
}

Report check_subspace_counts(const QContext& c, int max_n) {
  Report r;
  r.title = "subspace counts, q=" + std::to_string(c.q());
  for (int n = 0; n <= max_n; ++n) {
    auto counts = brute_subspace_counts(c.q(), n);
    for (int d = 0; d <= n; ++d) {
      Rational v = c.omega0(d).eval(Rational(c.q_int(n)));
      r.add("omega_{0," + std::to_string(d) + "}([" + std::to_string(n) + "]) = #Gr", v == Rational(counts[d]),
            to_string(v) + " vs " + to_string(counts[d]));
    }
  }
  return r;
}

OmegaTable omega_table(const QContext& c, long max_m, long max_d, long max_n) {
  OmegaTable t;
  t.q = c.q();
  for (long n = 0; n <= max_n; ++n) t.ns.push_back(n);
  for (long m = 0; m <= max_m; ++m)
    for (long d = 0; d <= max_d; ++d) {
      t.rows.emplace_back(m, d);
      Poly w = c.omega(m, d);
      std::vector<Rational> row;
      for (long n : t.ns) row.push_back(w.eval(Rational(c.q_int(n))));
      t.values.push_back(row);
    }
  return t;
}

}  // namespace olig
