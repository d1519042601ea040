#include "xconn/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <tuple>

#include "xconn/errors.hpp"
#include "xconn/parallel.hpp"

namespace xconn {

std::string to_string(Check c) {
  switch (c) {
    case Check::pass: return "pass";
    case Check::fail: return "fail";
    case Check::skip: break;
  }
  return "skip";
}

namespace {

Check all_of(bool ok) { return ok ? Check::pass : Check::fail; }

std::string oracle_text(const SweepRow& r) {
  switch (r.oracle_status) {
    case OracleStatus::finite: return std::to_string(r.oracle);
    case OracleStatus::infinity: return "infinity";
    case OracleStatus::inconclusive: break;
  }
  return "inconclusive";
}

std::string witness_text(const SweepRow& r) {
  std::string out;
  for (const auto& [kind, size] : r.witness_sizes) {
    if (!out.empty()) out += ';';
    out += to_string(kind) + "=" + std::to_string(size);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

SweepRow evaluate_cell(const FamilyParams& p, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.family = p.family;
  row.m = p.m;
  row.n = p.n;
  row.g = p.g;
  row.in_guard = orders_supported(p) && guard(p);
  if (row.in_guard) row.formula = kappa_formula(p).value;

  const ProductGraph pg = family_product(p);
  const auto extra = static_cast<std::size_t>(p.g);

  std::optional<CutSet> seed;
  if (row.in_guard) {
    bool all_exact = true;
    bool attains_formula = false;
    for (auto kind : {WitnessKind::s1, WitnessKind::s2, WitnessKind::s3}) {
      if (!witness_constructible(p, kind)) continue;
      const auto spec = make_witness_spec(p, kind);
      const CutSet cut = build_witness(spec);
      const auto check = validate_witness(pg, cut, extra);
      row.witness_sizes.emplace_back(kind, cut.size());
      const bool exact = check.verdict.is_g_extra &&
                         static_cast<std::int64_t>(cut.size()) == spec.predicted_size;
      all_exact = all_exact && exact;
      if (exact && static_cast<std::int64_t>(cut.size()) == *row.formula) attains_formula = true;
      if (check.verdict.is_g_extra && (!seed || cut.size() < seed->size())) seed = cut;
    }
    row.witnesses = all_of(all_exact && attains_formula);
  }

  if (pg.graph.vertex_count() <= config.max_sweep_vertices) {
    FragmentOptions options;
    options.threads = 1;
    if (config.seed_with_witnesses) options.seed_cut = seed;
    const auto result = kappa_extra_fragment(pg.graph, extra, options);
    if (result.value) {
      row.oracle_status = OracleStatus::finite;
      row.oracle = static_cast<std::int64_t>(*result.value);

      std::vector<CutSet> cuts;
      if (pg.graph.vertex_count() <= config.max_enumeration_vertices)
        cuts = enumerate_min_cuts(pg.graph, extra, options);
      else
        cuts.push_back(*result.witness);
      row.min_cuts_checked = cuts.size();
      row.layer_bounds = all_of(std::all_of(cuts.begin(), cuts.end(), [&](const CutSet& c) {
        return check_layer_bounds(pg, c);
      }));
      if (p.g == 0)
        row.cut_shapes = all_of(std::all_of(cuts.begin(), cuts.end(), [&](const CutSet& c) {
          return classify_cut(pg, c).verdict != CutShape::neither;
        }));
    } else {
      row.oracle_status = OracleStatus::infinity;
    }
    if (row.in_guard) row.agree = all_of(row.oracle_status == OracleStatus::finite &&
                                         row.oracle == *row.formula);
  }
  row.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

SweepReport sweep(const SweepConfig& config) {
  std::vector<FamilyParams> cells;
  for (Family f : config.families) {
    for (std::int64_t m = config.m_min; m <= config.m_max; ++m) {
      for (std::int64_t n = config.n_min; n <= config.n_max; ++n) {
        FamilyParams base{f, m, n, 0};
        if (!orders_supported(base)) continue;
        if (config.policy == GPolicy::all_in_guard) {
          for (std::int64_t g = 0; g <= guard_bound(base); ++g) cells.push_back({f, m, n, g});
        } else {
          for (std::int64_t g : config.g_list)
            if (g >= 0) cells.push_back({f, m, n, g});
        }
      }
    }
  }
  SweepReport report;
  report.rows.resize(cells.size());
  parallel_for(cells.size(), config.solver.threads, [&](std::size_t i, std::size_t) {
    report.rows[i] = evaluate_cell(cells[i], config.solver);
  });
  std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.family, a.m, a.n, a.g) < std::tie(b.family, b.m, b.n, b.g);
  });
  return report;
}

std::size_t SweepReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.failed(); }));
}

std::string SweepReport::to_csv(bool with_timing) const {
  std::ostringstream out;
  out << "family,m,n,g,guard,formula,oracle,witness_sizes,witnesses,agree,layer_bounds,"
         "cut_shapes,min_cuts";
  if (with_timing) out << ",runtime_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << to_string(r.family) << ',' << r.m << ',' << r.n << ',' << r.g << ','
        << (r.in_guard ? "yes" : "no") << ','
        << (r.formula ? std::to_string(*r.formula) : std::string("domain")) << ','
        << oracle_text(r) << ',' << witness_text(r) << ',' << to_string(r.witnesses) << ','
        << to_string(r.agree) << ',' << to_string(r.layer_bounds) << ','
        << to_string(r.cut_shapes) << ',' << r.min_cuts_checked;
    if (with_timing) out << ',' << r.runtime_ms;
    out << '\n';
  }
  return out.str();
}

nlohmann::json SweepReport::to_json(bool with_timing) const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"family", to_string(r.family)},
                          {"m", r.m},
                          {"n", r.n},
                          {"g", r.g},
                          {"guard", r.in_guard},
                          {"witnesses", to_string(r.witnesses)},
                          {"agree", to_string(r.agree)},
                          {"layer_bounds", to_string(r.layer_bounds)},
                          {"cut_shapes", to_string(r.cut_shapes)},
                          {"min_cuts", r.min_cuts_checked}};
    row["formula"] = r.formula ? nlohmann::json(*r.formula) : nlohmann::json("domain");
    row["oracle"] = r.oracle_status == OracleStatus::finite ? nlohmann::json(r.oracle)
                                                            : nlohmann::json(oracle_text(r));
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [kind, size] : r.witness_sizes) sizes[to_string(kind)] = size;
    row["witness_sizes"] = std::move(sizes);
    if (with_timing) row["runtime_ms"] = r.runtime_ms;
    rows_json.push_back(std::move(row));
  }
  return {{"rows", std::move(rows_json)}, {"failures", failures()}};
}

CutShapeReport cut_shape_report(const ProductGraph& pg, std::size_t threads) {
  FragmentOptions options;
  options.threads = threads;
  CutShapeReport out;
  for (const auto& cut : enumerate_min_cuts(pg.graph, 0, options)) {
    ++out.cuts;
    switch (classify_cut(pg, cut).verdict) {
      case CutShape::i_set: ++out.i_sets; break;
      case CutShape::l_set: ++out.l_sets; break;
      case CutShape::neither: ++out.neither; break;
    }
  }
  return out;
}

bool check_cut_shapes(const ProductGraph& pg, std::size_t threads) {
  return cut_shape_report(pg, threads).holds();
}

CartesianCheck cartesian_formula_report(const Graph& g1, const Graph& g2) {
  const ProductGraph pg = cartesian_product(g1, g2);
  CartesianCheck out;
  out.formula = std::min({vertex_connectivity(g1) * g2.vertex_count(),
                          vertex_connectivity(g2) * g1.vertex_count(), min_degree(pg.graph)});
  if (is_complete(pg.graph)) {
    out.oracle = pg.graph.vertex_count() - 1;
  } else {
    const auto r = kappa_extra_fragment(pg.graph, 0);
    out.oracle = *r.value;
  }
  return out;
}

bool check_cartesian_formula(const Graph& g1, const Graph& g2) {
  return cartesian_formula_report(g1, g2).holds();
}

}  // namespace xconn
