#include <doctest.h>

#include "xconn/verifier.hpp"

using namespace xconn;

TEST_CASE("minimum vertex cuts are I-sets or L-sets") {
  const auto p3p3 = strong_product(make_path(3), make_path(3));
  const auto report = cut_shape_report(p3p3);
  CHECK(report.cuts == 6);
  CHECK(report.i_sets == 2);
  CHECK(report.l_sets == 4);
  CHECK(report.holds());

  CHECK(check_cut_shapes(strong_product(make_path(3), make_path(4))));
  CHECK(check_cut_shapes(strong_product(make_cycle(4), make_path(3))));
  CHECK(check_cut_shapes(strong_product(make_cycle(4), make_cycle(4)), 2));
  // No cuts at all: nothing to certify.
  CHECK_FALSE(check_cut_shapes(strong_product(make_path(2), make_path(2))));
}

TEST_CASE("cartesian connectivity formula") {
  auto c = cartesian_formula_report(make_path(3), make_path(3));
  CHECK(c.formula == 2);
  CHECK(c.oracle == 2);
  c = cartesian_formula_report(make_cycle(4), make_cycle(4));
  CHECK(c.formula == 4);
  CHECK(c.oracle == 4);
  c = cartesian_formula_report(make_path(2), make_path(5));
  CHECK(c.formula == 2);
  CHECK(c.holds());
  c = cartesian_formula_report(make_cycle(5), make_path(4));
  CHECK(c.formula == 3);
  CHECK(c.holds());
  CHECK(check_cartesian_formula(make_complete(3), make_path(2)));
}

TEST_CASE("single cells") {
  SolverConfig config;
  auto row = evaluate_cell({Family::path_path, 3, 3, 0}, config);
  CHECK(row.in_guard);
  CHECK(row.formula == 3);
  CHECK(row.oracle_status == OracleStatus::finite);
  CHECK(row.oracle == 3);
  CHECK(row.agree == Check::pass);
  CHECK(row.witnesses == Check::pass);
  CHECK(row.layer_bounds == Check::pass);
  CHECK(row.cut_shapes == Check::pass);
  CHECK(row.min_cuts_checked == 6);
  CHECK_FALSE(row.failed());

  row = evaluate_cell({Family::cycle_path, 4, 3, 3}, config);
  CHECK_FALSE(row.in_guard);
  CHECK_FALSE(row.formula);
  CHECK(row.agree == Check::skip);
  CHECK(row.witnesses == Check::skip);
  CHECK(row.cut_shapes == Check::skip);

  row = evaluate_cell({Family::path_path, 4, 4, 6}, config);
  CHECK(row.oracle_status == OracleStatus::infinity);

  config.max_sweep_vertices = 8;
  row = evaluate_cell({Family::path_path, 3, 3, 0}, config);
  CHECK(row.oracle_status == OracleStatus::inconclusive);
  CHECK(row.agree == Check::skip);
  CHECK(row.witnesses == Check::pass);
}

TEST_CASE("sweep is ordered and deterministic") {
  SweepConfig config;
  config.families = {Family::cycle_path, Family::path_path};
  config.m_min = 3;
  config.m_max = 4;
  config.n_min = 3;
  config.n_max = 4;
  config.solver.threads = 3;
  const auto a = sweep(config);
  config.solver.threads = 1;
  const auto b = sweep(config);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json() == b.to_json());
  CHECK(a.failures() == 0);
  REQUIRE_FALSE(a.rows.empty());
  CHECK(a.rows.front().family == Family::path_path);
  CHECK(a.rows.back().family == Family::cycle_path);
  for (const auto& r : a.rows) CHECK(r.agree == Check::pass);

  const auto csv = a.to_csv();
  CHECK(csv.rfind("family,m,n,g,guard,formula,oracle,", 0) == 0);
  CHECK(csv.find("pxp,3,3,0,yes,3,3,") != std::string::npos);
  CHECK(a.to_csv(true).find("runtime_ms") != std::string::npos);
  CHECK(a.to_json()["rows"].size() == a.rows.size());
}

TEST_CASE("explicit g lists include out-of-guard cells") {
  SweepConfig config;
  config.families = {Family::path_path};
  config.m_min = config.m_max = 3;
  config.n_min = config.n_max = 3;
  config.policy = GPolicy::explicit_list;
  config.g_list = {0, 2, 3};
  config.solver.threads = 1;
  const auto report = sweep(config);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[1].in_guard);
  CHECK(report.rows[1].oracle == 3);
  CHECK_FALSE(report.rows[2].in_guard);
  CHECK(report.rows[2].oracle_status == OracleStatus::infinity);
  CHECK(report.rows[2].agree == Check::skip);
  CHECK(report.failures() == 0);
}
