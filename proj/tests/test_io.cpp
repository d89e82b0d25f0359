#include <catch_amalgamated.hpp>

#include <random>

#include "oligocat/io.hpp"
#include "oligocat/verify.hpp"

using namespace olig;

namespace {
SetExpr S(const char* s) { return SetExpr::parse(s); }
}  // namespace

TEST_CASE("matrix and function JSON round trip") {
  std::mt19937 rng(9);
  for (const char* c : {"sym", "order:-1,-1", "order:0,-1"}) {
    auto ctx = make_context(c);
    for (const char* x : {"Omega", "Sub(2)", "Omega+Pt", "Inj(2)*Omega"})
      for (int level = 0; level <= 1; ++level) {
        auto m = InvariantMatrix::random(ctx, S(x), S("Omega"), level, rng);
        m *= Poly::parse("(t^2 - t)/2");
        auto j = to_json(m);
        CHECK(matrix_from_json(ctx, Json::parse(j.dump())) == m);
        auto f = m.entries();
        CHECK(schwartz_from_json(ctx, to_json(f)) == f);
      }
  }
  auto sym = make_context("sym");
  CHECK_THROWS(matrix_from_json(sym, Json::parse(R"({"domain":"Omega","codomain":"Omega","level":0,
      "terms":[{"orbit":"[{1|pin=1}]@N=1","coeff":"1"}]})")));
}

TEST_CASE("series and report JSON round trip") {
  auto sym = make_context("sym");
  auto a = InvariantMatrix::all_ones(sym, S("Omega"), S("Omega")) + Poly(Rational(1, 3)) * InvariantMatrix::identity(sym, S("Omega"));
  auto s = char_series(a, 5);
  CHECK(series_from_json(to_json(s)) == s);
  CHECK(TruncatedSeries::parse(s.str()) == s);
  Report r;
  r.title = "x";
  r.add("one", true, "3 instances");
  r.add("two", false, "witness");
  auto back = report_from_json(to_json(r));
  CHECK(back.str() == r.str());
  CHECK(to_json(r)["failures"] == 1);
}

TEST_CASE("rational tables from JSON") {
  auto t = rational_table_from_json(Json::parse(R"({"0:": 1, "1:": "-1/2"})"));
  CHECK(t.at("1:") == Rational(-1, 2));
  CHECK_THROWS(rational_table_from_json(Json::parse("[1,2]")));
}

TEST_CASE("verify suites") {
  for (const char* s : {"sym-oracle", "order-counts", "glq-identities", "rado-demo", "char-p"}) {
    auto r = run_suite(s, nullptr);
    INFO(r.str());
    CHECK(r.ok());
  }
  auto ord = make_context("order:0,0");
  auto i = integration_laws_report(ord, 4);
  INFO(i.str());
  CHECK(i.ok());
  CHECK_THROWS(run_suite("nope", nullptr));
  // threaded and inline runs agree line for line
  std::vector<std::string> names{"sym-oracle", "order-counts", "char-p"};
  CHECK(run_suites(names, nullptr, 3).str() == run_suites(names, nullptr, 1).str());
}

TEST_CASE("matrix laws catch a wrong orthogonal pair") {
  auto r = matrix_laws_report(make_context("sym"), 5);
  INFO(r.str());
  CHECK(r.ok());
  // sanity of the Tally bookkeeping: a failure keeps the first witness
  Tally t("law");
  t.record(true);
  t.record(false, "first");
  t.record(false, "second");
  Report rep;
  t.into(rep);
  CHECK_FALSE(rep.ok());
  CHECK(rep.checks[0].detail.find("first") != std::string::npos);
  CHECK(rep.checks[0].detail.find("2 of 3") != std::string::npos);
}
