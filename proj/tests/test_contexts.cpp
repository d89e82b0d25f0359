#include <catch_amalgamated.hpp>

#include <set>

#include "oligocat/order_context.hpp"
#include "oligocat/sym_context.hpp"

using namespace olig;

namespace {
SetExpr S(const char* s) { return SetExpr::parse(s); }
const long kBell[] = {1, 1, 2, 5, 15, 52, 203};

// brute-force count of equality patterns of maps [n] -> [n]
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
}  // namespace

TEST_CASE("set expression parsing") {
  CHECK(S("Omega^2").str() == "Pow(2)");
  CHECK(S("R^2") == S("Pow(2)"));
  CHECK(S("Sub(2)+Inj(2)").size() == 2);
  CHECK(S("Empty").is_empty());
  CHECK(S("Pt").size() == 1);
  CHECK_THROWS(S("Foo(2)"));
}

TEST_CASE("symmetric measures") {
  Poly t = Poly::var();
  CHECK(sym_measure(S("Omega")) == t);
  for (int n = 0; n <= 6; ++n) {
    CHECK(sym_measure(power(S("Omega"), n)) == t.pow(n));
    CHECK(sym_measure(SetExpr::single(FactorKind::Inj, n)) == falling_factorial(0, n));
    CHECK(sym_measure(SetExpr::single(FactorKind::Sub, n)) == binomial_poly(n));
  }
  CHECK(sym_measure(S("Empty")) == Poly());
  CHECK(sym_measure(S("Sub(2)*Omega")) == binomial_poly(2) * t);
}

TEST_CASE("Bell numbers and orbit oracles") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(static_cast<long>(sym_orbits(power(S("Omega"), n), 0).size()) == kBell[n]);
    if (n <= 5) CHECK(equality_patterns(n) == kBell[n]);
  }
  CHECK(sym_orbits(S("Sub(2)*Sub(2)"), 0).size() == 3);
}

TEST_CASE("N^k_{n,m} structure constants") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      SetExpr x = SetExpr::single(FactorKind::Sub, n) * SetExpr::single(FactorKind::Sub, m);
      auto orbs = sym_orbits(x, 0);
      CHECK(static_cast<int>(orbs.size()) == std::min(n, m) + 1);
      for (const auto& o : orbs) {
        std::set<int> vals(o.p.v.begin(), o.p.v.end());
        int k = static_cast<int>(vals.size());
        Integer nk = binomial(k, n) * binomial(n, n + m - k);
        CHECK(sym_measure(x, o) == Poly(Rational(nk)) * binomial_poly(k));
      }
    }
}

TEST_CASE("fixed points interpolate the measure") {
  for (int k = 0; k <= 4; ++k)
    for (auto kind : {FactorKind::Pow, FactorKind::Inj, FactorKind::Sub}) {
      SetExpr x = kind == FactorKind::Pow ? power(S("Omega"), k) : SetExpr::single(kind, k);
      for (int n = 0; n <= 8; ++n) CHECK(Rational(sym_fixed_points(x, n)) == sym_measure(x).eval(n));
    }
  CHECK(sym_fixed_points(S("Sub(2)"), 4) == 6);
  CHECK(sym_fixed_points(S("Inj(2)"), 1) == 0);
}

TEST_CASE("level refinement is additive (sym)") {
  SymContext ctx;
  for (const char* e : {"Omega^2", "Inj(2)*Omega", "Sub(2)*Omega", "Sub(3)"}) {
    SetExpr x = S(e);
    for (int level = 0; level <= 2; ++level) {
      Poly total;
      for (const auto& o : orbits(ctx, x, level + 1)) total += orbit_measure(ctx, x, o);
      CHECK(total == sym_measure(x));
    }
  }
  // fiber over a pinned point
  SetExpr w = S("Omega");
  auto o = parse_orbit(ctx, w, "[{1}]@N=1");
  CHECK(orbit_measure(ctx, w, o) == Poly::var() - Poly(1));
}

TEST_CASE("sym orbit strings round trip") {
  SymContext ctx;
  SetExpr x = S("Omega^3");
  auto o = parse_orbit(ctx, x, "[{1|pin=1},{2,3}]@N=1");
  CHECK(format_orbit(ctx, x, o) == "[{1|pin=1},{2,3}]@N=1");
  for (const char* e : {"Omega^3", "Sub(2)*Omega", "Sub(2)*Sub(2)", "Inj(2)+Omega"}) {
    SetExpr y = S(e);
    for (int level = 0; level <= 2; ++level)
      for (const auto& ob : orbits(ctx, y, level)) CHECK(parse_orbit(ctx, y, format_orbit(ctx, y, ob)) == ob);
  }
  CHECK_THROWS(parse_orbit(ctx, S("Inj(2)"), "[{1,2}]@N=0"));
}

TEST_CASE("order measures") {
  OrderMeasureSpec std_spec{-1, -1};
  for (int n = 0; n <= 6; ++n) {
    long sign = n % 2 ? -1 : 1;
    CHECK(ord_measure(power(S("R"), n), std_spec) == Poly(sign));
    CHECK(ord_measure(SetExpr::single(FactorKind::Inj, n), std_spec) == Poly(Rational(sign * factorial(n))));
    CHECK(ord_measure(SetExpr::single(FactorKind::Sub, n), std_spec) == Poly(sign));
  }
  CHECK(ord_measure(S("R"), {0, 0}) == Poly(1));
  CHECK(ord_measure(S("R"), {-1, 0}) == Poly(0));
}

TEST_CASE("order orbit counts") {
  CHECK(ord_orbits(S("R^2"), 0).size() == 3);
  // 6 interleavings, 6 with one coincidence, 1 with both
  CHECK(ord_orbits(S("Sub(2)*Sub(2)"), 0).size() == 13);
  const long fub[] = {1, 1, 3, 13, 75, 541};
  for (int n = 0; n <= 5; ++n) CHECK(fubini_number(n) == fub[n]);
  for (int n = 1; n <= 3; ++n) CHECK(Integer(static_cast<long>(ord_orbits(power(S("R"), 2 * n), 0).size())) == fubini_number(2 * n));
}

TEST_CASE("order refinement additivity and measure multiplicativity") {
  for (auto spec : {OrderMeasureSpec{-1, -1}, OrderMeasureSpec{-1, 0}, OrderMeasureSpec{0, -1}, OrderMeasureSpec{0, 0}}) {
    OrderContext ctx(spec);
    for (const char* e : {"R^2", "Inj(2)*R", "Sub(2)*R", "Sub(3)", "Sub(2)*Sub(2)"}) {
      SetExpr x = S(e);
      for (int level = 0; level <= 2; ++level) {
        Poly total;
        for (const auto& o : orbits(ctx, x, level + 1)) total += orbit_measure(ctx, x, o);
        CHECK(total == ord_measure(x, spec));
      }
      CHECK(ord_measure(x * S("R"), spec) == ord_measure(x, spec) * ord_measure(S("R"), spec));
    }
  }
}

TEST_CASE("order orbit strings round trip") {
  OrderContext ctx;
  for (const char* e : {"R^2", "Sub(2)*Sub(2)", "Inj(2)*R", "R+Sub(2)"}) {
    SetExpr y = S(e);
    for (int level = 0; level <= 2; ++level)
      for (const auto& ob : orbits(ctx, y, level)) CHECK(parse_orbit(ctx, y, format_orbit(ctx, y, ob)) == ob);
  }
}

TEST_CASE("ruffles") {
  CHECK(format_ruffle_sum(ruffle_product("ab", "a")) == "ab + 2aab + aba");
  CHECK(format_ruffle_sum(ruffle_product("a", "a")) == "a + 2aa");
  CHECK(ruffle_product("ab", "") == RuffleSum{{"ab", 1}});
}

TEST_CASE("single-color symbol census") {
  auto census = single_color_symbol_census(4);
  CHECK(census.size() == 4);
  Symbol all_plus;
  all_plus.alphabet = "a";
  for (char s : {Symbol::kMinusInf, 'a'})
    for (char t : {Symbol::kPlusInf, 'a'}) all_plus.table[{s, t, 'a'}] = 1;
  auto r = verify_symbol(all_plus);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());
}
