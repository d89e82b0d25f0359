#include <catch_amalgamated.hpp>

#include "oligocat/fraisse.hpp"

using namespace olig;

TEST_CASE("amalgamation counts", "[fraisse]") {
  auto orders = make_class("orders");
  // Y = {1}, X = {1 < 2}, Y' = {1 < 3}
  auto x = total_order(2);
  CHECK(enumerate_amalgamations(*orders, x, x, 1).size() == 3);

  auto sets = make_class("sets");
  for (int l = 0; l <= 2; ++l)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        std::map<int, long> by_size;
        for (const auto& a : enumerate_amalgamations(*sets, finite_set(l + m), finite_set(l + n), l)) ++by_size[a.x.n];
        for (int s = 0; s <= std::min(m, n); ++s)
          CHECK(by_size[l + n + m - s] == binomial(n, s).get_si() * binomial(m, s).get_si() * factorial(s).get_si());
      }

  auto boron = make_class("boron");
  auto t3 = boron->labeled(3).front();
  CHECK(enumerate_amalgamations(*boron, t3, t3, 2).size() == 4);
}

TEST_CASE("boron trees", "[fraisse]") {
  auto boron = make_class("boron");
  std::vector<size_t> labeled{1, 1, 1, 1, 3, 15, 105};
  std::vector<size_t> classes{1, 1, 1, 1, 1, 1, 2};
  for (int n = 0; n <= 6; ++n) {
    CHECK(boron->labeled(n).size() == labeled[n]);
    CHECK(boron->iso_classes(n).size() == classes[n]);
  }
  auto t = parse_boron("((0,1),2,(3,4))");
  CHECK(boron->str(t) == "((0,1),2,(3,4))");
  CHECK(boron_paired_leaves(t) == std::vector<int>{0, 1, 3, 4});
  CHECK(parse_boron(boron->str(t)) == t);
  CHECK_THROWS(parse_boron("(0,1,2,3)"));
  CHECK_THROWS(parse_boron("((0,1),1,2)"));
  // induced subtrees: R recomputed from the tree equals the restricted relation
  for (const auto& x : boron->labeled(6))
    for (std::vector<int> pts : {std::vector<int>{5, 0, 3}, {1, 2, 4, 5}, {0, 2, 3, 4, 5}}) {
      auto sub = boron->restrict(x, pts);
      CHECK(boron->is_embedding(sub, x, pts));
      CHECK(boron->canonical(boron->relabel(x, {5, 4, 3, 2, 1, 0})) == boron->canonical(x));
    }
}

TEST_CASE("measure verification", "[fraisse]") {
  auto sets = make_class("sets");
  auto orders = make_class("orders");
  auto boron = make_class("boron");
  auto graphs = make_class("graphs");
  CHECK(verify_measure(*sets, sets_nu_t(), {4}).ok());
  CHECK(verify_measure(*orders, orders_sign(), {5, -1, 1}).ok());
  VerifyOptions b{6, 7, 1};
  auto mu = verify_measure(*boron, boron_mu(), b);
  INFO(mu.str());
  CHECK(mu.ok());
  auto nu = verify_measure(*boron, boron_nu(), b);
  INFO(nu.str());
  CHECK(nu.ok());
  auto one = verify_measure(*graphs, constant_one(), {3});
  CHECK_FALSE(one.ok());
  REQUIRE(one.first_failure());
  CHECK(one.first_failure()->name.find("(d)") != std::string::npos);
  CHECK_FALSE(verify_measure(*orders, constant_one(), {3}).ok());
}

TEST_CASE("perturbed tables fail", "[fraisse]") {
  auto boron = make_class("boron");
  auto sets = make_class("sets");
  for (const auto& e : table_entries(*sets, sets_nu_t(), 3)) {
    auto rep = verify_measure(*sets, perturb(sets_nu_t(), e), {3});
    CHECK_FALSE(rep.ok());
  }
  for (const auto& e : table_entries(*boron, boron_nu(), 5)) {
    INFO(e);
    CHECK_FALSE(verify_measure(*boron, perturb(boron_nu(), e), {5, 6, 1}).ok());
  }
}

TEST_CASE("embedding counts and S-regularity", "[fraisse]") {
  auto sets = make_class("sets");
  auto graphs = make_class("graphs");
  for (int n = 0; n <= 6; ++n) CHECK(count_embeddings(*sets, finite_set(2), finite_set(n)) == n * (n - 1));
  auto k2 = graph_from_edges(2, {{0, 1}}), k3 = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(count_embeddings(*graphs, k2, k3) == 6);
  CHECK(check_S_regular(*sets, finite_set(6), {finite_set(1), finite_set(2), finite_set(3)}));
  auto p3 = parse_graph("0 1\n1 2\n");
  std::string w;
  CHECK_FALSE(check_S_regular(*graphs, p3, {graph_from_edges(1, {}), k2}, &w));
  CHECK_FALSE(w.empty());
  CHECK(check_S_regular(*graphs, p3, {}));
  auto rep = s_regular_identity_report(*sets, finite_set(8), {finite_set(0), finite_set(1), finite_set(2), finite_set(3)});
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("boron Theta witness and Rado identity", "[fraisse]") {
  auto rep = boron_theta_witness();
  INFO(rep.str());
  CHECK(rep.ok());
  auto bad = rado_invariant_check(constant_graph_table(3, 1), 3);
  CHECK_FALSE(bad.ok());
  auto table = constant_graph_table(3, 1);
  table.erase(table.begin());
  CHECK_FALSE(rado_invariant_check(table, 3).ok());
}
