// Verification reports grouped by topic, and the named suites built on them.
#pragma once

#include <string>
#include <vector>

#include "oligocat/context.hpp"
#include "oligocat/report.hpp"

namespace olig {

// counts instances of one law and keeps the first counterexample
struct Tally {
  Tally(std::string n) : name(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  std::string name;
  long instances = 0;
  long failures = 0;
  std::string witness;
  std::string note;
  void record(bool ok, const std::string& w = "") {
    ++instances;
    if (!ok && failures++ == 0) witness = w;
  }
  template <class F>
  void record_lazy(bool ok, F&& w) {
    ++instances;
    if (!ok && failures++ == 0) witness = w();
  }
  void into(Report& r) const {
    std::string d = failures ? witness + " (" + std::to_string(failures) + " of " + std::to_string(instances) + " failed)"
                             : std::to_string(instances) + " instances";
    if (!note.empty()) d += ", " + note;
    r.add(name, failures == 0 && instances > 0, d);
  }
};

// mu(Omega^n), mu(Inj(n)), mu(Sub(n)) for n <= max_n
Report sym_measure_report(int max_n = 6);
// fixed-point counts against the measure at t = n
Report fixed_point_report(int max_k = 4, int max_n = 8);
// Bell numbers, brute-force equality patterns, N^k_{n,m}
Report orbit_count_report(int max_bell = 6, int max_nm = 3);
Report finite_oracle_report(const std::vector<std::pair<int, int>>& cases = {{1, 4}, {2, 6}, {2, 8}});

Report integration_laws_report(const ContextPtr& ctx, int rounds = 12, unsigned seed = 2024);
Report matrix_laws_report(const ContextPtr& ctx, int instances = 100, unsigned seed = 7, int order = 4);
Report deligne_series_report(int order = 6);
Report discriminant_report();
Report category_laws_report(const ContextPtr& ctx);

Report order_facts_report();
Report symbol_census_report(int max_length = 4);
Report glq_report(const std::vector<long>& qs = {2, 3});
Report fraisse_report(int boron_amalgam_bound = 8);
Report boron_report(int boron_amalgam_bound = 8);
Report rado_demo_report();
Report char_p_report(int max_level = 4);
Report negative_controls_report();

std::vector<std::string> suite_names();
// ctx may be null for suites that fix their own contexts; threads <= 1 runs inline
Report run_suite(const std::string& name, const ContextPtr& ctx);
Report run_suites(const std::vector<std::string>& names, const ContextPtr& ctx, int threads = 1);

}  // namespace olig
