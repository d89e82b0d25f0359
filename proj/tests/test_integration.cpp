#include <catch_amalgamated.hpp>

#include <random>

#include "oligocat/order_context.hpp"
#include "oligocat/schwartz.hpp"
#include "oligocat/sym_context.hpp"

using namespace olig;

namespace {
SetExpr S(const char* s) { return SetExpr::parse(s); }
const Poly t = Poly::var();

SchwartzFunction random_fn(const ContextPtr& ctx, const SetExpr& x, int level, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  return tabulate(ctx, x, level, [&](int, const Pattern&) { return Poly(c(rng)); });
}

std::vector<ContextPtr> contexts() {
  return {make_context("sym"), make_context("order:-1,-1"), make_context("order:0,-1"), make_context("order:0,0")};
}
}  // namespace

TEST_CASE("integration examples") {
  auto sym = make_context("sym");
  CHECK(integrate(SchwartzFunction::constant(sym, S("Omega"), 1)) == t);
  CHECK(integrate(SchwartzFunction::zero(sym, S("Omega"))).is_zero());
  // c on Omega minus {1,2}, values 5 and 7 on the pins
  auto phi = SchwartzFunction::zero(sym, S("Omega"), 2);
  phi.set(parse_orbit(*sym, S("Omega"), "[{1}]@N=2"), 4);
  phi.set(parse_orbit(*sym, S("Omega"), "[{1|pin=1}]@N=2"), 5);
  phi.set(parse_orbit(*sym, S("Omega"), "[{1|pin=2}]@N=2"), 7);
  CHECK(integrate(phi) == Poly(4) * (t - Poly(2)) + Poly(12));
}

TEST_CASE("pushforward examples") {
  auto sym = make_context("sym");
  auto f = GSetMap::slots(S("Inj(2)"), S("Omega"), {0});
  auto pushed = pushforward(f, SchwartzFunction::constant(sym, S("Inj(2)"), 1));
  CHECK(pushed == SchwartzFunction::constant(sym, S("Omega"), t - Poly(1)));
  std::mt19937 rng(3);
  auto one = random_fn(sym, S("Omega^2"), 1, rng);
  CHECK(pushforward(GSetMap::identity(S("Omega^2")), one) == one);
  auto s = GSetMap::parse("sym:2");
  auto sym_push = pushforward(s, SchwartzFunction::constant(sym, S("Inj(2)"), 1));
  CHECK(sym_push == SchwartzFunction::constant(sym, S("Sub(2)"), 2));
  for (long t0 : {0L, 1L})
    for (const auto& [o, c] : sym_push.terms()) CHECK(eval(c, EvalPoint::modular(t0, 2)).residue == 0);
}

TEST_CASE("pullback examples") {
  auto sym = make_context("sym");
  auto pr = GSetMap::projection(S("Omega"), S("Omega"), true);
  auto delta = SchwartzFunction::indicator(sym, S("Omega"), parse_orbit(*sym, S("Omega"), "[{1|pin=1}]@N=1"));
  auto back = pullback(pr, delta);
  Poly total;
  for (const auto& [o, c] : back.terms()) {
    CHECK(o.p.v[0] == 1);
    total += c * orbit_measure(*sym, S("Omega^2"), o);
  }
  CHECK(total == t);
  CHECK(pullback(GSetMap::identity(S("Omega")), delta) == delta);
}

TEST_CASE("change level") {
  auto sym = make_context("sym");
  auto one = SchwartzFunction::constant(sym, S("Omega"), 1);
  auto fine = change_level(one, 1);
  CHECK(fine.terms().size() == 2);
  CHECK(integrate(fine) == t);
  CHECK(change_level(one, 0) == one);
  CHECK_THROWS(change_level(fine, 0));
}

TEST_CASE("map validation") {
  CHECK_THROWS(GSetMap::slots(S("Omega^2"), S("Inj(2)"), {0, 1}));  // not forced distinct
  CHECK_THROWS(GSetMap::slots(S("Sub(2)"), S("Omega"), {0}));      // not Sub invariant
  CHECK_THROWS(GSetMap::slots(S("Sub(2)"), S("Omega^2"), {0, 1}));  // order of a subset is not defined
  CHECK_NOTHROW(GSetMap::slots(S("Sub(2)"), S("Sub(2)"), {1, 0}));
}

TEST_CASE("calculus laws on random inputs") {
  std::mt19937 rng(2024);
  const char* sets[] = {"Omega", "Inj(2)", "Sub(2)", "Omega+Pt"};
  for (const auto& ctx : contexts()) {
    for (int round = 0; round < 6; ++round) {
      SetExpr x = S(sets[rng() % 4]), y = S(sets[rng() % 4]), z = S(sets[rng() % 3]);
      int level = static_cast<int>(rng() % 2);
      // Fubini
      auto phi = random_fn(ctx, x * y, level, rng);
      auto inner = pushforward(GSetMap::projection(x, y, true), phi);
      CHECK(integrate(inner) == integrate(phi));
      CHECK(integrate(pushforward(GSetMap::to_point(x * y), phi)) == integrate(phi));
      // transitivity
      auto p1 = GSetMap::projection(x, y, true);
      auto p0 = GSetMap::to_point(x);
      CHECK(pushforward(compose(p0, p1), phi) == pushforward(p0, pushforward(p1, phi)));
      // projection formula
      auto psi = random_fn(ctx, x, level, rng);
      CHECK(pushforward(p1, pullback(p1, psi) * phi) == psi * pushforward(p1, phi));
      // base change for f: X*Y -> X and g: X*Z -> X
      auto f = GSetMap::projection(x, y, true);
      auto g = GSetMap::projection(x, z, true);
      auto gp = GSetMap::product(GSetMap::identity(x * y), GSetMap::to_point(z));
      auto fp = GSetMap::product(GSetMap::product(GSetMap::identity(x), GSetMap::to_point(y)), GSetMap::identity(z));
      CHECK(pullback(g, pushforward(f, phi)) == pushforward(fp, pullback(gp, phi)));
      // level invariance
      CHECK(integrate(change_level(phi, level + 1)) == integrate(phi));
      // external product is Fubini for products
      auto a = random_fn(ctx, x, level, rng), b = random_fn(ctx, y, level, rng);
      CHECK(integrate(external_product(a, b)) == integrate(a) * integrate(b));
    }
  }
}

TEST_CASE("relabeling pinned constants preserves integrals (sym)") {
  auto sym = make_context("sym");
  SetExpr x = S("Omega^2");
  for (const auto& o : orbits(*sym, x, 2)) {
    Pattern q = o.p;
    for (int& v : q.v)
      if (v == 1) v = 2;
      else if (v == 2) v = 1;
    Orbit o2{o.comp, canonical(*sym, x.comps[0], sym->normalize(q))};
    CHECK(orbit_measure(*sym, x, o) == orbit_measure(*sym, x, o2));
  }
}
