#include "oligocat/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "oligocat/category.hpp"
#include "oligocat/fraisse.hpp"
#include "oligocat/glq.hpp"
#include "oligocat/matrix.hpp"
#include "oligocat/order_context.hpp"
#include "oligocat/schwartz.hpp"
#include "oligocat/sym_context.hpp"

namespace olig {

namespace {

SetExpr S(const char* s) { return SetExpr::parse(s); }
const Poly t = Poly::var();

std::vector<ContextPtr> standard_contexts() {
  return {make_context("sym"), make_context("order:-1,-1"), make_context("order:0,-1"), make_context("order:0,0")};
}

bool is_order(const ContextPtr& ctx) { return ctx->name().rfind("order", 0) == 0; }

SchwartzFunction random_fn(const ContextPtr& ctx, const SetExpr& x, int level, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  return tabulate(ctx, x, level, [&](int, const Pattern&) { return Poly(c(rng)); });
}

// Bell numbers from the triangle, independent of any orbit code
std::vector<long> bell_numbers(int n) {
  std::vector<long> bell{1};
  std::vector<long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next{row.back()};
    for (long v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

long equality_patterns(int n) {
  std::set<std::vector<int>> seen;
  std::vector<int> f(n, 0);
  for (;;) {
    std::vector<int> relabel(n, -1), key;
    int next = 0;
    for (int x : f) {
      if (relabel[x] < 0) relabel[x] = next++;
      key.push_back(relabel[x]);
    }
    seen.insert(key);
    int i = n - 1;
    while (i >= 0 && f[i] == n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return static_cast<long>(seen.size());
}

// relative position types of pairs (S, T) of 2-subsets of a chain
long chain_pair_types() {
  std::set<std::pair<std::vector<int>, std::vector<int>>> types;
  std::vector<std::pair<int, int>> subs;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) subs.push_back({a, b});
  for (auto [a, b] : subs)
    for (auto [c, d] : subs) {
      std::set<int> u{a, b, c, d};
      std::vector<int> pts(u.begin(), u.end());
      auto rank = [&](int x) { return static_cast<int>(std::find(pts.begin(), pts.end(), x) - pts.begin()); };
      types.insert({{rank(a), rank(b)}, {rank(c), rank(d)}});
    }
  return static_cast<long>(types.size());
}

}  // namespace

// ------------------------------------------------------------------ sym

Report sym_measure_report(int max_n) {
  Report r;
  r.title = "symmetric measures";
  Tally pow{"mu(Omega^n) = t^n"}, inj{"mu(Inj(n)) = t(t-1)...(t-n+1)"}, sub{"mu(Sub(n)) = binom(t, n)"},
      add{"orbit measures sum to the set measure"};
  SymContext ctx;
  for (int n = 0; n <= max_n; ++n) {
    SetExpr p = power(S("Omega"), n), i = SetExpr::single(FactorKind::Inj, n), s = SetExpr::single(FactorKind::Sub, n);
    Poly mp = sym_measure(p), mi = sym_measure(i), ms = sym_measure(s);
    pow.record(mp == t.pow(n), "n=" + std::to_string(n) + ": " + mp.str());
    inj.record(mi == falling_factorial(0, n), "n=" + std::to_string(n) + ": " + mi.str());
    sub.record(ms == binomial_poly(n), "n=" + std::to_string(n) + ": " + ms.str());
    for (const SetExpr& x : {p, i, s}) {
      if (x.comps[0].slot_count() > 5) continue;
      Poly total;
      for (const auto& o : orbits(ctx, x, 1)) total += orbit_measure(ctx, x, o);
      add.record(total == sym_measure(x), x.str() + " at level 1");
    }
  }
  pow.note = inj.note = sub.note = "n <= " + std::to_string(max_n);
  for (auto* tl : {&pow, &inj, &sub, &add}) tl->into(r);
  return r;
}

Report fixed_point_report(int max_k, int max_n) {
  Report r;
  r.title = "fixed points against the measure";
  Tally fp{"#X^{S_n} = mu(X)(n)"};
  for (int k = 0; k <= max_k; ++k)
    for (auto kind : {FactorKind::Pow, FactorKind::Inj, FactorKind::Sub}) {
      SetExpr x = kind == FactorKind::Pow ? power(S("Omega"), k) : SetExpr::single(kind, k);
      Poly m = sym_measure(x);
      for (int n = 0; n <= max_n; ++n) {
        Integer f = sym_fixed_points(x, n);
        fp.record_lazy(Rational(f) == m.eval(n), [&] {
          return x.str() + " at n=" + std::to_string(n) + ": " + to_string(f) + " vs " + to_string(m.eval(n));
        });
      }
    }
  fp.note = "k <= " + std::to_string(max_k) + ", n <= " + std::to_string(max_n);
  fp.into(r);
  return r;
}

Report orbit_count_report(int max_bell, int max_nm) {
  Report r;
  r.title = "orbit counts";
  auto bell = bell_numbers(max_bell);
  Tally b{"#orbits on Omega^n = Bell(n)"}, brute{"Bell(n) = #equality patterns (brute force)"},
      nk{"N^k_{n,m} = binom(k,n) binom(n,n+m-k) binom(t,k)"}, cnt{"#orbits on Sub(n)*Sub(m) = min(n,m)+1"};
  for (int n = 0; n <= max_bell; ++n) {
    long o = static_cast<long>(sym_orbits(power(S("Omega"), n), 0).size());
    b.record(o == bell[n], "n=" + std::to_string(n) + ": " + std::to_string(o) + " vs " + std::to_string(bell[n]));
    long e = equality_patterns(n);
    brute.record(e == bell[n], "n=" + std::to_string(n) + ": " + std::to_string(e));
  }
  for (int n = 0; n <= max_nm; ++n)
    for (int m = 0; m <= max_nm; ++m) {
      SetExpr x = SetExpr::single(FactorKind::Sub, n) * SetExpr::single(FactorKind::Sub, m);
      auto orbs = sym_orbits(x, 0);
      cnt.record(static_cast<int>(orbs.size()) == std::min(n, m) + 1, x.str());
      for (const auto& o : orbs) {
        std::set<int> vals(o.p.v.begin(), o.p.v.end());
        int k = static_cast<int>(vals.size());
        Poly want = Poly(Rational(binomial(k, n) * binomial(n, n + m - k))) * binomial_poly(k);
        Poly got = sym_measure(x, o);
        nk.record_lazy(got == want, [&] { return x.str() + " k=" + std::to_string(k) + ": " + got.str(); });
      }
    }
  b.note = "n <= " + std::to_string(max_bell);
  for (auto* tl : {&b, &brute, &cnt, &nk}) tl->into(r);
  return r;
}

Report finite_oracle_report(const std::vector<std::pair<int, int>>& cases) {
  Report r;
  r.title = "finite-group oracle";
  auto sym = make_context("sym");
  for (auto [n, N] : cases) {
    Tally tl{"End(Omega^" + std::to_string(n) + ") at t=" + std::to_string(N) + " = End_{S_N}(Q[N]^" +
             std::to_string(n) + ")"};
    SetExpr x = power(S("Omega"), n);
    EndAlgebra e(sym, x);
    auto fin = finite_sym_end(n, N);
    if (static_cast<int>(fin.patterns.size()) != e.dim()) {
      r.add(tl.name, false, "dimensions " + std::to_string(fin.patterns.size()) + " vs " + std::to_string(e.dim()));
      continue;
    }
    std::vector<int> map(e.dim(), -1);
    bool mapped = true;
    for (int i = 0; i < e.dim(); ++i) {
      std::vector<int> v = e.basis_orbits()[i].p.v;
      std::map<int, int> rl;
      for (int& q : v) q = rl.emplace(q, static_cast<int>(rl.size())).first->second;
      auto it = std::find(fin.patterns.begin(), fin.patterns.end(), v);
      if (it == fin.patterns.end()) mapped = false;
      else map[i] = static_cast<int>(it - fin.patterns.begin());
    }
    if (!mapped) {
      r.add(tl.name, false, "orbit without a finite pattern");
      continue;
    }
    for (int a = 0; a < e.dim(); ++a)
      for (int b = 0; b < e.dim(); ++b)
        for (int k = 0; k < e.dim(); ++k) {
          Rational got = e.structure()[a][b][k].eval(N);
          long want = fin.c[map[a]][map[b]][map[k]];
          tl.record_lazy(got == want, [&] {
            return "c[" + std::to_string(a) + "][" + std::to_string(b) + "][" + std::to_string(k) + "] = " +
                   to_string(got) + " vs " + std::to_string(want);
          });
        }
    tl.note = "dim " + std::to_string(e.dim());
    tl.into(r);
  }
  return r;
}

// ------------------------------------------------------------------ integration

Report integration_laws_report(const ContextPtr& ctx, int rounds, unsigned seed) {
  Report r;
  r.title = "integration laws";
  std::vector<ContextPtr> ctxs = ctx ? std::vector<ContextPtr>{ctx} : standard_contexts();
  const char* sets[] = {"Omega", "Inj(2)", "Sub(2)", "Omega+Pt"};
  for (const auto& c : ctxs) {
    std::mt19937 rng(seed);
    std::string tag = " [" + c->name() + "]";
    Tally fub{"Fubini" + tag}, trans{"transitivity of pushforward" + tag}, proj{"projection formula" + tag},
        base{"base change" + tag}, lev{"level invariance" + tag}, ext{"external product" + tag};
    for (int round = 0; round < rounds; ++round) {
      SetExpr x = S(sets[rng() % 4]), y = S(sets[rng() % 4]), z = S(sets[rng() % 3]);
      int level = static_cast<int>(rng() % 2);
      std::string w = x.str() + ", " + y.str() + ", " + z.str() + " level " + std::to_string(level);
      auto phi = random_fn(c, x * y, level, rng);
      auto p1 = GSetMap::projection(x, y, true);
      auto p0 = GSetMap::to_point(x);
      Poly whole = integrate(phi);
      fub.record(integrate(pushforward(p1, phi)) == whole && integrate(pushforward(GSetMap::to_point(x * y), phi)) == whole, w);
      trans.record(pushforward(compose(p0, p1), phi) == pushforward(p0, pushforward(p1, phi)), w);
      auto psi = random_fn(c, x, level, rng);
      proj.record(pushforward(p1, pullback(p1, psi) * phi) == psi * pushforward(p1, phi), w);
      auto g = GSetMap::projection(x, z, true);
      auto gp = GSetMap::product(GSetMap::identity(x * y), GSetMap::to_point(z));
      auto fp = GSetMap::product(GSetMap::product(GSetMap::identity(x), GSetMap::to_point(y)), GSetMap::identity(z));
      base.record(pullback(g, pushforward(p1, phi)) == pushforward(fp, pullback(gp, phi)), w);
      lev.record(integrate(change_level(phi, level + 1)) == whole, w);
      auto a = random_fn(c, x, level, rng), b = random_fn(c, y, level, rng);
      ext.record(integrate(external_product(a, b)) == integrate(a) * integrate(b), w);
    }
    for (auto* tl : {&fub, &trans, &proj, &base, &lev, &ext}) tl->into(r);
  }
  return r;
}

// ------------------------------------------------------------------ matrices

Report matrix_laws_report(const ContextPtr& ctx, int instances, unsigned seed, int order) {
  Report r;
  r.title = "matrix laws";
  std::vector<ContextPtr> ctxs = ctx ? std::vector<ContextPtr>{ctx}
                                     : std::vector<ContextPtr>{make_context("sym"), make_context("order:-1,-1")};
  const char* sets[] = {"Omega", "Pt", "Omega+Pt", "Inj(2)", "Sub(2)"};
  for (const auto& c : ctxs) {
    std::mt19937 rng(seed);
    std::string tag = " [" + c->name() + "]";
    Tally assoc{"(CB)A = C(BA)" + tag}, tr{"tr(AB) = tr(BA)" + tag}, orth{"chi_{A+B} = chi_A chi_B when AB = 0" + tag},
        nil{"nilpotent => chi = 1" + tag};
    auto pick = [&] { return S(sets[rng() % 5]); };
    for (int i = 0; i < instances; ++i) {
      SetExpr x = pick(), y = pick(), z = pick(), w = pick();
      auto a = InvariantMatrix::random(c, x, y, 0, rng), b = InvariantMatrix::random(c, y, z, 0, rng),
           cc = InvariantMatrix::random(c, z, w, 0, rng);
      std::string shape = x.str() + " -> " + y.str() + " -> " + z.str() + " -> " + w.str();
      assoc.record((cc * b) * a == cc * (b * a), shape);
      auto bt = InvariantMatrix::random(c, y, x, 0, rng);
      Poly t1 = trace(a * bt), t2 = trace(bt * a);
      tr.record_lazy(t1 == t2, [&] { return x.str() + " <-> " + y.str() + ": " + t1.str() + " vs " + t2.str(); });
    }
    // P0 Q0 = Q0 P0 = 0 on X0, carried into X = X0 + Pt along the inclusion
    SetExpr x0 = S("Omega"), x = x0 + SetExpr::point();
    InvariantMatrix a0 = is_order(c) ? InvariantMatrix::orbit(c, x0, x0, parse_orbit(*c, S("R^2"), "r1<r2"))
                                     : InvariantMatrix::all_ones(c, x0, x0);
    auto i0 = InvariantMatrix::identity(c, x0);
    InvariantMatrix p0 = is_order(c) ? a0 + i0 : a0 - t * i0;
    auto jm = InvariantMatrix::graph(c, GSetMap::inclusion(x0, SetExpr::point(), true));
    auto p = jm * p0 * jm.transpose(), q = jm * a0 * jm.transpose();
    for (int i = 0; i < instances; ++i) {
      auto rm = InvariantMatrix::random(c, x, x, 0, rng), sm = InvariantMatrix::random(c, x, x, 0, rng);
      auto pp = rm * p, qq = q * sm;
      bool zero = (pp * qq).is_zero();
      auto lhs = char_series(pp + qq, order), rhs = series_mul(char_series(pp, order), char_series(qq, order));
      orth.record_lazy(zero && lhs == rhs, [&] {
        return zero ? "instance " + std::to_string(i) + ": " + lhs.str() + " vs " + rhs.str()
                    : "instance " + std::to_string(i) + ": AB != 0";
      });
      auto n = q * rm * p;
      bool sq = (n * n).is_zero();
      auto chi = char_series(n, order);
      nil.record_lazy(sq && chi == TruncatedSeries::one(order),
                      [&] { return "instance " + std::to_string(i) + ": " + (sq ? chi.str() : "N^2 != 0"); });
    }
    for (auto* tl : {&assoc, &tr, &orth, &nil}) tl->into(r);
  }
  return r;
}

Report deligne_series_report(int order) {
  Report r;
  r.title = "Deligne series on Omega";
  auto sym = make_context("sym");
  SetExpr om = S("Omega");
  auto I = InvariantMatrix::identity(sym, om);
  auto A = InvariantMatrix::all_ones(sym, om, om);
  r.add("A^2 = tA", A * A == t * A);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Tally tr{"tr(alpha on the diagonal, beta off it) = t alpha"},
      chi{"chi_{alpha+beta A} = (1+alpha u)^{t-1} (1+(alpha+t beta) u) to u^" + std::to_string(order - 1)};
  for (int i = 0; i < 12; ++i) {
    Poly al = Poly(Rational(num(rng), den(rng))), be = Poly(Rational(num(rng), den(rng)));
    if (i == 0) al = Poly(3), be = Poly(Rational(-2, 5));
    std::string w = "alpha=" + al.str() + ", beta=" + be.str();
    tr.record(trace(al * I + be * (A - I)) == t * al, w);
    auto lhs = char_series(al * I + be * A, order);
    auto rhs = series_mul(binomial_series(al, t - Poly(1), order),
                          TruncatedSeries::one(order) + (al + t * be) * TruncatedSeries::u(order));
    chi.record_lazy(lhs == rhs, [&] { return w + ": " + lhs.str() + " vs " + rhs.str(); });
  }
  tr.into(r);
  chi.into(r);
  Tally ht{"higher traces: permutation expansion = determinant integral"};
  for (int i = 0; i < 3; ++i) {
    Poly al = Poly(num(rng)), be = Poly(num(rng));
    auto m = al * I + be * A;
    for (int n = 0; n <= 3; ++n) ht.record(higher_trace(m, n) == higher_trace_direct(m, n), "n=" + std::to_string(n));
  }
  ht.into(r);
  return r;
}

Report discriminant_report() {
  Report r;
  r.title = "trace-pairing discriminants";
  auto sym = make_context("sym");
  auto ord = make_context("order:-1,-1");
  auto om = trace_pairing(EndAlgebra(sym, S("Omega")));
  r.add("disc End(Omega) = t^2 (t-1)", om.discriminant == t * t * (t - Poly(1)), om.discriminant.str());
  struct Case {
    const char* label;
    ContextPtr ctx;
    const char* x;
  };
  for (const auto& c : {Case{"Omega", sym, "Omega"}, Case{"Omega^2", sym, "Omega^2"}, Case{"R", ord, "R"},
                        Case{"R^(2)", ord, "Sub(2)"}}) {
    auto tp = trace_pairing(EndAlgebra(c.ctx, S(c.x)));
    r.add(std::string("disc = (-1)^r prod mu(Z_i) for ") + c.label, tp.matches(),
          tp.discriminant.str() + " vs " + tp.predicted.str() + ", r = " + std::to_string(tp.transpose_pairs));
  }
  return r;
}

// ------------------------------------------------------------------ category

Report category_laws_report(const ContextPtr& ctx) {
  Report r;
  r.title = "category laws";
  std::vector<ContextPtr> ctxs = ctx ? std::vector<ContextPtr>{ctx}
                                     : std::vector<ContextPtr>{make_context("sym"), make_context("order:-1,-1")};
  for (const auto& c : ctxs) {
    std::string tag = " [" + c->name() + "]";
    std::vector<const char*> objs = is_order(c) ? std::vector<const char*>{"R", "R+Pt"}
                                                : std::vector<const char*>{"Omega", "Sub(2)", "Omega+Pt"};
    for (const char* s : objs) {
      PermObject x{c, S(s)};
      r.merge(duality_report(x), std::string(s) + tag + ": ");
      r.merge(frobenius_report(frobenius(x)), std::string(s) + tag + ": ");
    }
    r.merge(graph_map_report(c, GSetMap::slots(S("Inj(2)"), S("Omega"), {0})), "Inj(2) -> Omega" + tag + ": ");
    r.merge(base_change_report(c, S("Omega"), S("Omega"), S("Sub(2)")), "base change" + tag + ": ");
    r.merge(additivity_report(c, S("Omega"), S("Pt")), "additivity" + tag + ": ");
    r.merge(balanced_axioms_report(c, structural_map_family()), "balanced" + tag + ": ");
    std::mt19937 rng(5);
    SetExpr x = S("Omega"), y = S("Sub(2)");
    auto a1 = InvariantMatrix::random(c, x, x, 0, rng), b1 = InvariantMatrix::random(c, x, x, 0, rng);
    auto a2 = InvariantMatrix::random(c, y, x, 0, rng), b2 = InvariantMatrix::random(c, y, y, 0, rng);
    r.add("tensor is functorial" + tag, tensor(a1, a2) * tensor(b1, b2) == tensor(a1 * b1, a2 * b2));
    auto s = braiding(PermObject{c, x}, PermObject{c, y});
    auto s2 = braiding(PermObject{c, y}, PermObject{c, x});
    r.add("braiding squares to the identity" + tag, s2 * s == identity(PermObject{c, x * y}));
  }
  return r;
}

// ------------------------------------------------------------------ order

Report order_facts_report() {
  Report r;
  r.title = "order facts";
  OrderMeasureSpec spec{-1, -1};
  Tally pw{"mu(R^n) = (-1)^n"}, inj{"mu(R^[n]) = (-1)^n n!"};
  for (int n = 0; n <= 6; ++n) {
    long sign = n % 2 ? -1 : 1;
    Poly a = ord_measure(power(S("R"), n), spec), b = ord_measure(SetExpr::single(FactorKind::Inj, n), spec);
    pw.record(a == Poly(sign), "n=" + std::to_string(n) + ": " + a.str());
    inj.record(b == Poly(Rational(sign * factorial(n))), "n=" + std::to_string(n) + ": " + b.str());
  }
  pw.note = inj.note = "n <= 6";
  pw.into(r);
  inj.into(r);

  auto ord = make_context("order:-1,-1");
  SetExpr x = S("R");
  auto A = InvariantMatrix::orbit(ord, x, x, parse_orbit(*ord, S("R^2"), "r1<r2"));
  auto B = A.transpose();
  auto I = InvariantMatrix::identity(ord, x);
  r.add("A^2 = -A", A * A == Poly(-1) * A);
  r.add("B^2 = -B", B * B == Poly(-1) * B);
  r.add("AB = -1 - A - B", A * B == Poly(-1) * (I + A + B));
  std::vector<InvariantMatrix> e{A + I, B + I, Poly(-1) * (I + A + B)};
  bool orth = true;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) orth = orth && e[i] * e[j] == (i == j ? e[i] : InvariantMatrix::zero(ord, x, x));
  r.add("A+1, B+1, -1-A-B are orthogonal idempotents", orth);
  r.add("they sum to 1", e[0] + e[1] + e[2] == I);
  Poly d0 = categorical_trace(e[0]), d1 = categorical_trace(e[1]), d2 = categorical_trace(e[2]);
  r.add("dims -1, -1, 1", d0 == Poly(-1) && d1 == Poly(-1) && d2 == Poly(1), d0.str() + ", " + d1.str() + ", " + d2.str());
  r.add("dims sum to mu(R) = -1", d0 + d1 + d2 == Poly(-1) && ord_measure(x, spec) == Poly(-1));

  long h1 = static_cast<long>(hom_basis(PermObject{ord, x}, PermObject{ord, x}).size());
  r.add("#Hom(R, R) basis = 3", h1 == 3, std::to_string(h1));
  long h2 = static_cast<long>(hom_basis(PermObject{ord, S("Sub(2)")}, PermObject{ord, S("Sub(2)")}).size());
  long brute = chain_pair_types();
  r.add("#End(R^(2)) basis = 13", h2 == 13 && brute == 13,
        std::to_string(h2) + " orbits, " + std::to_string(brute) +
            " by brute force over pairs of 2-subsets; a count of 9 misses four interleavings");
  long h4 = static_cast<long>(hom_basis(PermObject{ord, S("R^2")}, PermObject{ord, S("R^2")}).size());
  r.add("#End(R^2) basis = Fubini(4) = 75", h4 == 75 && fubini_number(4) == 75, std::to_string(h4));
  return r;
}

Report symbol_census_report(int max_length) {
  Report r;
  r.title = "single-color symbol census";
  auto census = single_color_symbol_census(max_length);
  r.add("4 tables pass the ruffle test", census.size() == 4, std::to_string(census.size()) + " of 81");
  const char a = 'a';
  std::set<std::pair<int, int>> seen;
  bool shape = true;
  std::string w;
  for (const auto& s : census) {
    int eps = s.table.at({Symbol::kMinusInf, a, a}), delta = s.table.at({a, Symbol::kPlusInf, a});
    int bounded = s.table.at({a, a, a}), line = s.table.at({Symbol::kMinusInf, Symbol::kPlusInf, a});
    seen.insert({eps, delta});
    bool in_range = (eps == -1 || eps == 0) && (delta == -1 || delta == 0);
    OrderContext ctx(OrderMeasureSpec{in_range ? eps : -1, in_range ? delta : -1});
    bool ok = in_range && bounded == -1 && line == ctx.interval_measure(false, false, 1);
    if (!ok && shape) w = "eps=" + std::to_string(eps) + " delta=" + std::to_string(delta) + " line=" + std::to_string(line);
    shape = shape && ok;
  }
  r.add("passing tables are (eps, delta) in {-1,0}^2 with the induced line value", shape && seen.size() == 4, w);
  return r;
}

// ------------------------------------------------------------------ GL_q

Report glq_report(const std::vector<long>& qs) {
  Report r;
  r.title = "GL_q identities";
  for (long q : qs) {
    QContext c(q);
    std::string tag = "q=" + std::to_string(q) + ": ";
    if (is_prime(q)) r.merge(check_subspace_counts(c, 4), tag);
    r.merge(check_q_pascal(c, 4), tag);
    r.merge(check_grassmann_products(c, 3), tag);
    r.merge(check_omega_values(c, 3, 6), tag);
    if (!is_prime(q)) continue;
    int n = q == 2 ? 4 : 3;
    for (auto [i, j] : {std::pair{1, 1}, std::pair{1, 2}}) {
      auto nd = c.grassmann_structure_constants(i, j);
      auto pairs = brute_span_pairs(q, n, i, j);
      bool ok = true;
      std::string w;
      for (const auto& [d, cnt] : pairs) {
        Integer want = (nd.count(d) ? nd.at(d) : Integer(0)) * c.q_binom(n, d);
        if (cnt != want) {
          ok = false;
          w = "d=" + std::to_string(d) + ": " + to_string(cnt) + " vs " + to_string(want);
        }
      }
      r.add(tag + "span pairs of dims (" + std::to_string(i) + "," + std::to_string(j) + ") in F_q^" +
                std::to_string(n) + " = n_d #Gr(d,n)",
            ok, w);
    }
  }
  return r;
}

// ------------------------------------------------------------------ Fraisse

Report boron_report(int bound) {
  Report r;
  r.title = "boron trees";
  auto boron = make_class("boron");
  const size_t labeled[] = {1, 1, 1, 1, 3, 15, 105}, classes[] = {1, 1, 1, 1, 1, 1, 2};
  bool counts = true;
  for (int n = 0; n <= 6; ++n)
    counts = counts && boron->labeled(n).size() == labeled[n] && boron->iso_classes(n).size() == classes[n];
  r.add("labeled trees 1,1,1,1,3,15,105 and classes 1,1,1,1,1,1,2", counts);
  auto t3 = boron->labeled(3).front();
  size_t am = enumerate_amalgamations(*boron, t3, t3, 2).size();
  r.add("amalgams of T3 <- T2 -> T3 = 4", am == 4, std::to_string(am));
  VerifyOptions opt{6, bound, 1};
  r.merge(verify_measure(*boron, boron_mu(), opt), "mu: ");
  r.merge(verify_measure(*boron, boron_nu(), opt), "nu: ");
  r.merge(boron_theta_witness(), "Theta: ");
  return r;
}

Report fraisse_report(int bound) {
  Report r;
  r.title = "Fraisse classes";
  auto sets = make_class("sets");
  auto orders = make_class("orders");
  r.merge(verify_measure(*sets, sets_nu_t(), {4}), "sets nu_t: ");
  r.merge(verify_measure(*orders, orders_sign(), {5, -1, 1}), "orders (-1)^#X: ");
  auto x = total_order(2);
  size_t oa = enumerate_amalgamations(*orders, x, x, 1).size();
  r.add("amalgams of {1<2} <- {1} -> {1<3} = 3", oa == 3, std::to_string(oa));
  Tally sa{"set amalgams of size l+m+n-s = binom(n,s) binom(m,s) s!"};
  for (int l = 0; l <= 2; ++l)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        std::map<int, long> by_size;
        for (const auto& a : enumerate_amalgamations(*sets, finite_set(l + m), finite_set(l + n), l)) ++by_size[a.x.n];
        for (int s = 0; s <= std::min(m, n); ++s)
          sa.record(by_size[l + n + m - s] == Integer(binomial(n, s) * binomial(m, s) * factorial(s)).get_si(),
                    "l,m,n,s = " + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(s));
      }
  sa.into(r);
  r.merge(s_regular_identity_report(*sets, finite_set(8), {finite_set(0), finite_set(1), finite_set(2), finite_set(3)}),
          "sets S-regular: ");
  r.merge(boron_report(bound));
  return r;
}

Report rado_demo_report() {
  Report r;
  r.title = "Rado graph demo";
  auto bad = rado_invariant_check(constant_graph_table(3, 1), 3);
  const Check* f = bad.first_failure();
  r.add("constant table on graphs is rejected", !bad.ok(), f ? f->name + ": " + f->detail : "no failure");
  auto table = constant_graph_table(3, 1);
  table.erase(table.begin());
  r.add("table with a missing entry is rejected", !rado_invariant_check(table, 3).ok());
  auto graphs = make_class("graphs");
  auto one = verify_measure(*graphs, constant_one(), {3});
  const Check* g = one.first_failure();
  r.add("nu = 1 on graphs fails amalgamation", g && g->name.find("(d)") != std::string::npos,
        g ? g->detail : "no failure");
  return r;
}

// ------------------------------------------------------------------ char p

Report char_p_report(int max_level) {
  Report r;
  r.title = "pushforward Inj(2) -> Sub(2) over F_2";
  auto sym = make_context("sym");
  SetExpr src = S("Inj(2)"), tgt = S("Sub(2)");
  auto f = GSetMap::parse("sym:2");
  const long p = 2;
  for (long t0 : {0L, 1L})
    for (int level = 0; level <= max_level; ++level) {
      auto tgt_orbs = orbits(*sym, tgt, level);
      std::map<Orbit, int> col;
      for (size_t i = 0; i < tgt_orbs.size(); ++i) col[tgt_orbs[i]] = static_cast<int>(i);
      int generic = -1;
      for (size_t i = 0; i < tgt_orbs.size(); ++i) {
        bool g = true;
        for (int v : tgt_orbs[i].p.v) g = g && !sym->is_pinned(v, level);
        if (g) generic = static_cast<int>(i);
      }
      std::vector<std::vector<long>> rows;
      bool in_sub = true;
      for (const auto& o : orbits(*sym, src, level)) {
        auto img = pushforward(f, SchwartzFunction::indicator(sym, src, o));
        std::vector<long> row(tgt_orbs.size(), 0);
        for (const auto& [to, c] : img.terms()) row[col.at(to)] = eval_mod(c, t0, p);
        if (generic >= 0 && row[generic] != 0) in_sub = false;
        rows.push_back(row);
      }
      // rank over F_2
      int rank = 0, ncol = static_cast<int>(tgt_orbs.size());
      for (int c = 0; c < ncol && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
          if (rows[i][c] % p) piv = i;
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
          if (i != rank && rows[i][c] % p)
            for (int k = 0; k < ncol; ++k) rows[i][k] = (rows[i][k] + rows[rank][k]) % p;
        ++rank;
      }
      int coker = ncol - rank;
      r.add("t0=" + std::to_string(t0) + " N=" + std::to_string(level) + ": image = {generic value 0}, coker dim 1",
            generic >= 0 && in_sub && coker == 1,
            std::to_string(ncol) + " orbits, rank " + std::to_string(rank) + ", coker " + std::to_string(coker));
    }
  return r;
}

// ------------------------------------------------------------------ negative controls

Report negative_controls_report() {
  Report r;
  r.title = "negative controls";
  // a control passes when the perturbed table fails with a witness
  auto control = [&r](const std::string& name, long total, long caught, const std::string& sample) {
    r.add(name, total > 0 && caught == total,
          std::to_string(caught) + " of " + std::to_string(total) + " perturbations caught; e.g. " + sample);
  };

  {  // symmetric measure table against fixed-point counts
    long total = 0, caught = 0;
    std::string sample;
    for (int n = 0; n <= 6; ++n)
      for (auto kind : {FactorKind::Pow, FactorKind::Inj, FactorKind::Sub}) {
        SetExpr x = kind == FactorKind::Pow ? power(S("Omega"), n) : SetExpr::single(kind, n);
        Poly bad = sym_measure(x) + Poly(1);
        ++total;
        for (int m = 0; m <= 8; ++m)
          if (Rational(sym_fixed_points(x, m)) != bad.eval(m)) {
            ++caught;
            if (sample.empty()) sample = "mu(" + x.str() + ")+1 at n=" + std::to_string(m);
            break;
          }
      }
    control("sym measure table", total, caught, sample);
  }
  {  // order measure symbols: change any entry of a passing table
    long total = 0, caught = 0;
    std::string sample;
    for (const auto& s : single_color_symbol_census(4))
      for (const auto& [key, v] : s.table)
        for (int d : {-1, 1}) {
          Symbol b = s;
          b.table[key] = v + d;
          ++total;
          auto chk = verify_symbol(b, 4);
          if (!chk.ok && !chk.witness.empty()) {
            ++caught;
            if (sample.empty()) sample = chk.witness;
          }
        }
    control("order measure symbols", total, caught, sample);
  }
  {  // all-plus symbol
    Symbol all_plus;
    all_plus.alphabet = "a";
    for (char s : {Symbol::kMinusInf, 'a'})
      for (char u : {Symbol::kPlusInf, 'a'}) all_plus.table[{s, u, 'a'}] = 1;
    auto chk = verify_symbol(all_plus);
    r.add("all-plus symbol is rejected", !chk.ok && !chk.witness.empty(), chk.witness);
  }
  struct FCase {
    const char* cls;
    CandidateMeasure m;
    int entries_size;
    VerifyOptions opt;
  };
  for (const auto& c : {FCase{"sets", sets_nu_t(), 3, {3}}, FCase{"orders", orders_sign(), 4, {4}},
                        FCase{"boron", boron_mu(), 5, {5, 6, 1}}, FCase{"boron", boron_nu(), 5, {5, 6, 1}}}) {
    auto cls = make_class(c.cls);
    long total = 0, caught = 0;
    std::string sample;
    for (const auto& e : table_entries(*cls, c.m, c.entries_size)) {
      ++total;
      auto rep = verify_measure(*cls, perturb(c.m, e), c.opt);
      const Check* f = rep.first_failure();
      if (f && !f->detail.empty()) {
        ++caught;
        if (sample.empty()) sample = e + " -> " + f->name;
      }
    }
    control(std::string(c.cls) + " " + c.m.name + " table", total, caught, sample);
  }
  for (long q : {2L, 3L}) {
    QContext c(q);
    long total = 0, caught = 0;
    std::string sample;
    for (long m = 0; m <= 3; ++m)
      for (long d = 0; d <= 3; ++d) {
        OmegaHook bump = [m, d](long mm, long dd, const Poly& w) { return (mm == m && dd == d) ? w + Poly(1) : w; };
        ++total;
        auto rep = check_q_pascal(c, 4, bump);
        if (!rep.ok()) {
          ++caught;
          if (sample.empty()) sample = "omega(" + std::to_string(m) + "," + std::to_string(d) + ")+1 -> " + rep.first_failure()->name;
        }
      }
    control("omega table q=" + std::to_string(q), total, caught, sample);
  }
  auto rado = rado_invariant_check(constant_graph_table(3, 1), 3);
  r.add("constant graph table", !rado.ok() && rado.first_failure(), rado.ok() ? "" : rado.first_failure()->name);
  return r;
}

// ------------------------------------------------------------------ suites

std::vector<std::string> suite_names() {
  return {"integration-laws", "matrix-laws", "category-laws", "sym-oracle", "order-counts", "glq-identities",
          "fraisse",          "boron",       "rado-demo",     "char-p",     "negative-controls"};
}

Report run_suite(const std::string& name, const ContextPtr& ctx) {
  Report r;
  r.title = name;
  if (name == "integration-laws") {
    r.merge(integration_laws_report(ctx));
  } else if (name == "matrix-laws") {
    r.merge(matrix_laws_report(ctx));
    r.merge(deligne_series_report());
    r.merge(discriminant_report());
  } else if (name == "category-laws") {
    r.merge(category_laws_report(ctx));
  } else if (name == "sym-oracle") {
    r.merge(sym_measure_report());
    r.merge(fixed_point_report());
    r.merge(orbit_count_report());
    r.merge(finite_oracle_report());
  } else if (name == "order-counts") {
    r.merge(order_facts_report());
    r.merge(symbol_census_report());
  } else if (name == "glq-identities") {
    r.merge(glq_report());
  } else if (name == "fraisse") {
    r.merge(fraisse_report());
  } else if (name == "boron") {
    r.merge(boron_report());
  } else if (name == "rado-demo") {
    r.merge(rado_demo_report());
  } else if (name == "char-p") {
    r.merge(char_p_report());
  } else if (name == "negative-controls") {
    r.merge(negative_controls_report());
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return r;
}

Report run_suites(const std::vector<std::string>& names, const ContextPtr& ctx, int threads) {
  std::vector<std::string> list;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : suite_names())
        if (s != "boron") list.push_back(s);  // contained in fraisse
    } else {
      list.push_back(n);
    }
  }
  for (const auto& n : list) {
    auto all = suite_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) throw std::invalid_argument("unknown suite: " + n);
  }
  std::vector<Report> out(list.size());
  if (threads <= 1) {
    for (size_t i = 0; i < list.size(); ++i) out[i] = run_suite(list[i], ctx);
  } else {
    // bounded pool; results land in suite order
    size_t next = 0;
    std::vector<std::pair<size_t, std::future<Report>>> running;
    while (next < list.size() || !running.empty()) {
      while (next < list.size() && static_cast<int>(running.size()) < threads) {
        running.emplace_back(next, std::async(std::launch::async, run_suite, list[next], ctx));
        ++next;
      }
      out[running.front().first] = running.front().second.get();
      running.erase(running.begin());
    }
  }
  Report r;
  r.title = "verify";
  for (size_t i = 0; i < list.size(); ++i) r.merge(out[i], list[i] + ": ");
  return r;
}

}  // namespace olig
