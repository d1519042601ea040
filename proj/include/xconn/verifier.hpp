#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "xconn/closed_form.hpp"
#include "xconn/extra_conn.hpp"
#include "xconn/products.hpp"
#include "xconn/witnesses.hpp"

namespace xconn {

struct SolverConfig {
  /// Cells evaluated concurrently; 0 selects the hardware concurrency.
  std::size_t threads = 0;
  /// Cells with more product vertices are reported inconclusive.
  std::size_t max_sweep_vertices = 36;
  /// Above this order only the solver's own witness gets layer and
  /// classification checks, not every minimum cut.
  std::size_t max_enumeration_vertices = 25;
  /// Seed the fragment solver with the smallest valid witness.
  bool seed_with_witnesses = true;
};

enum class GPolicy { all_in_guard, explicit_list };

struct SweepConfig {
  std::vector<Family> families;
  std::int64_t m_min = 3, m_max = 3;
  std::int64_t n_min = 3, n_max = 3;
  GPolicy policy = GPolicy::all_in_guard;
  std::vector<std::int64_t> g_list;
  SolverConfig solver;
};

enum class Check { pass, fail, skip };

std::string to_string(Check c);

enum class OracleStatus { finite, infinity, inconclusive };

struct SweepRow {
  Family family = Family::path_path;
  std::int64_t m = 0, n = 0, g = 0;
  bool in_guard = false;
  std::optional<std::int64_t> formula;
  OracleStatus oracle_status = OracleStatus::inconclusive;
  std::int64_t oracle = 0;
  std::vector<std::pair<WitnessKind, std::size_t>> witness_sizes;
  /// Every constructible witness is a g-extra cut of its predicted size and
  /// one of them attains the formula value.
  Check witnesses = Check::skip;
  /// formula == oracle; skip outside the guard or when inconclusive.
  Check agree = Check::skip;
  Check layer_bounds = Check::skip;
  /// g = 0 only: every minimum cut is an I-set or an L-set.
  Check cut_shapes = Check::skip;
  std::size_t min_cuts_checked = 0;
  double runtime_ms = 0.0;

  [[nodiscard]] bool failed() const {
    return witnesses == Check::fail || agree == Check::fail || layer_bounds == Check::fail ||
           cut_shapes == Check::fail;
  }
};

struct SweepReport {
  std::vector<SweepRow> rows;

  [[nodiscard]] std::size_t failures() const;
  /// Fixed header; runtime column only when requested.
  [[nodiscard]] std::string to_csv(bool with_timing = false) const;
  [[nodiscard]] nlohmann::json to_json(bool with_timing = false) const;
};

/// Evaluates one grid cell.
SweepRow evaluate_cell(const FamilyParams& p, const SolverConfig& config);

/// Rows are ordered by (family, m, n, g) regardless of scheduling.
SweepReport sweep(const SweepConfig& config);

struct CutShapeReport {
  std::size_t cuts = 0;
  std::size_t i_sets = 0;
  std::size_t l_sets = 0;
  std::size_t neither = 0;
  [[nodiscard]] bool holds() const { return neither == 0 && cuts > 0; }
};

/// Classifies every minimum vertex cut of pg.
CutShapeReport cut_shape_report(const ProductGraph& pg, std::size_t threads = 1);
bool check_cut_shapes(const ProductGraph& pg, std::size_t threads = 1);

struct CartesianCheck {
  std::size_t formula = 0;
  std::size_t oracle = 0;
  [[nodiscard]] bool holds() const { return formula == oracle; }
};

/// min{kappa(G1)|V2|, kappa(G2)|V1|, delta(G1 □ G2)} against the exact
/// connectivity of G1 □ G2.
CartesianCheck cartesian_formula_report(const Graph& g1, const Graph& g2);
bool check_cartesian_formula(const Graph& g1, const Graph& g2);

}  // namespace xconn
