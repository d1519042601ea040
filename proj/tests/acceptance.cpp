// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "xconn/closed_form.hpp"
#include "xconn/extra_conn.hpp"
#include "xconn/verifier.hpp"
#include "xconn/witnesses.hpp"

using namespace xconn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const Verdict& v) {
  std::printf("criterion %2d: %s  %s (%s)\n", number, v.pass ? "PASS" : "FAIL", title.c_str(),
              v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

std::string cell(const SweepRow& r) {
  std::ostringstream s;
  s << to_string(r.family) << "(" << r.m << "," << r.n << ",g=" << r.g << ")";
  return s.str();
}

SweepConfig grid(Family family, std::int64_t m_lo, std::int64_t m_hi, std::int64_t n_lo,
                 std::int64_t n_hi) {
  SweepConfig config;
  config.families = {family};
  config.m_min = m_lo;
  config.m_max = m_hi;
  config.n_min = n_lo;
  config.n_max = n_hi;
  config.solver.threads = 0;
  return config;
}

const SweepConfig kGrids[3] = {grid(Family::path_path, 3, 6, 3, 6),
                               grid(Family::cycle_path, 4, 6, 3, 5),
                               grid(Family::cycle_cycle, 4, 5, 4, 5)};

Verdict grid_agreement(const SweepReport& report, double seconds, double limit) {
  Verdict v;
  std::size_t agreed = 0;
  for (const auto& r : report.rows) {
    if (r.agree == Check::pass) {
      ++agreed;
      continue;
    }
    if (v.pass) v.detail = "first mismatch " + cell(r) + ": formula " +
                           (r.formula ? std::to_string(*r.formula) : "-") + ", oracle " +
                           (r.oracle_status == OracleStatus::finite ? std::to_string(r.oracle)
                                                                    : "not finite");
    v.pass = false;
  }
  std::ostringstream s;
  s << agreed << "/" << report.rows.size() << " cells agree, " << seconds << " s";
  if (seconds > limit) {
    v.pass = false;
    s << " exceeds " << limit << " s";
  }
  v.detail = v.detail.empty() ? s.str() : s.str() + "; " + v.detail;
  return v;
}

Verdict small_cases() {
  Verdict v;
  std::size_t checked = 0;
  for (auto which : {SmallCase::p1_pn, SmallCase::p2_pn, SmallCase::c3_pn, SmallCase::c3_cn}) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      if (which == SmallCase::c3_cn && n < 3) continue;
      if (n * (which == SmallCase::p1_pn ? 1 : which == SmallCase::p2_pn ? 2 : 3) < 2) continue;
      const auto pg = small_case_product(which, n);
      for (std::int64_t g = 0; g <= small_case_bound(which, n); ++g) {
        const auto expected = kappa_small_case(which, n, g);
        const auto r = kappa_extra_fragment(pg.graph, static_cast<std::size_t>(g));
        ++checked;
        if (!r.value || static_cast<std::int64_t>(*r.value) != expected) {
          if (v.pass)
            v.detail = "first mismatch " + to_string(which) + " n=" + std::to_string(n) +
                       " g=" + std::to_string(g);
          v.pass = false;
        }
      }
    }
  }
  v.detail = std::to_string(checked) + " cases" + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict witnesses(const std::vector<SweepReport>& reports) {
  Verdict v;
  std::size_t rows = 0, cuts = 0;
  for (const auto& report : reports) {
    for (const auto& r : report.rows) {
      ++rows;
      cuts += r.witness_sizes.size();
      if (r.witnesses != Check::pass) {
        if (v.pass) {
          std::string sizes;
          for (const auto& [kind, size] : r.witness_sizes)
            sizes += " " + to_string(kind) + "=" + std::to_string(size);
          v.detail = "first failure " + cell(r) + " formula " + std::to_string(*r.formula) +
                     ", witnesses" + sizes;
        }
        v.pass = false;
      }
    }
  }
  v.detail = std::to_string(cuts) + " witnesses over " + std::to_string(rows) + " cells" +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

bool solvers_agree(const Graph& g, std::size_t extra) {
  const auto a = kappa_extra_subset(g, extra);
  const auto b = kappa_extra_fragment(g, extra);
  if (a.value != b.value) return false;
  for (const auto* r : {&a, &b}) {
    if (r->value.has_value() != r->witness.has_value()) return false;
    if (r->witness && (r->witness->size() != *r->value ||
                       !check_g_extra_cut(g, *r->witness, extra).is_g_extra))
      return false;
  }
  return true;
}

Verdict oracle_cross_validation() {
  Verdict v;
  std::mt19937_64 rng(20240611);
  std::size_t comparisons = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 6 + rng() % 7;
    const double density = 0.1 + 0.05 * static_cast<double>(rng() % 8);
    const Graph g = oracle::random_connected(rng, n, density);
    for (std::size_t extra = 0; extra <= 2; ++extra) {
      ++comparisons;
      if (!solvers_agree(g, extra)) {
        if (v.pass) v.detail = "random graph " + std::to_string(trial) + " extra " +
                               std::to_string(extra);
        v.pass = false;
      }
    }
  }
  std::vector<std::pair<std::string, ProductGraph>> family;
  for (std::size_t m = 1; m <= 16; ++m)
    for (std::size_t n = 1; m * n <= 16; ++n) {
      if (m * n >= 2) family.emplace_back("P" + std::to_string(m) + "xP" + std::to_string(n),
                                          strong_product(make_path(m), make_path(n)));
      if (m >= 3)
        family.emplace_back("C" + std::to_string(m) + "xP" + std::to_string(n),
                            strong_product(make_cycle(m), make_path(n)));
      if (m >= 3 && n >= 3)
        family.emplace_back("C" + std::to_string(m) + "xC" + std::to_string(n),
                            strong_product(make_cycle(m), make_cycle(n)));
    }
  for (const auto& [name, pg] : family) {
    const std::size_t order = pg.graph.vertex_count();
    for (std::size_t extra = 0; 2 * (extra + 1) < order; ++extra) {
      ++comparisons;
      if (!solvers_agree(pg.graph, extra)) {
        if (v.pass) v.detail = name + " extra " + std::to_string(extra);
        v.pass = false;
      }
    }
  }
  v.detail = std::to_string(comparisons) + " comparisons (" + std::to_string(family.size()) +
             " family instances)" + (v.detail.empty() ? "" : "; first disagreement " + v.detail);
  return v;
}

Verdict ceiling_identities() {
  Verdict v;
  const auto start = Clock::now();
  std::string notes;
  for (auto kind : {CeilingKind::path_path, CeilingKind::cycle_path, CeilingKind::cycle_cycle}) {
    std::size_t broken = 0;
    std::uint64_t first = 0;
    for (std::uint64_t g = 0; g <= 1'000'000; ++g) {
      if (!ceiling_identity(kind, g)) {
        if (broken++ == 0) first = g;
      }
    }
    notes += (notes.empty() ? "" : ", ") + to_string(kind) + ": ";
    if (broken == 0) {
      notes += "holds";
    } else {
      const auto sides = ceiling_sides(kind, first);
      notes += std::to_string(broken) + " failures, first g=" + std::to_string(first) + " (" +
               std::to_string(sides.lhs) + " vs " + std::to_string(sides.rhs) + ")";
      v.pass = false;
    }
  }
  const double seconds = seconds_since(start);
  std::ostringstream s;
  s << notes << "; " << seconds << " s";
  if (seconds > 1.0) {
    v.pass = false;
    s << " exceeds 1 s";
  }
  v.detail = s.str();
  return v;
}

Verdict cut_shapes() {
  Verdict v;
  const std::pair<const char*, ProductGraph> products[] = {
      {"P3xP3", strong_product(make_path(3), make_path(3))},
      {"P3xP4", strong_product(make_path(3), make_path(4))},
      {"P4xP4", strong_product(make_path(4), make_path(4))},
      {"C4xP3", strong_product(make_cycle(4), make_path(3))},
      {"C4xC4", strong_product(make_cycle(4), make_cycle(4))}};
  std::size_t total = 0, classified = 0;
  for (const auto& [name, pg] : products) {
    const auto r = cut_shape_report(pg, 0);
    total += r.cuts;
    classified += r.i_sets + r.l_sets;
    if (!r.holds()) {
      v.pass = false;
      v.detail += std::string(v.detail.empty() ? "" : ", ") + name;
    }
  }
  v.detail = std::to_string(classified) + "/" + std::to_string(total) + " cuts classified" +
             (v.detail.empty() ? "" : "; failing " + v.detail);
  return v;
}

Verdict layer_bounds(const std::vector<SweepReport>& reports) {
  Verdict v;
  std::size_t cells = 0, cuts = 0;
  for (const auto& report : reports) {
    for (const auto& r : report.rows) {
      if (r.m * r.n > 25) continue;
      ++cells;
      cuts += r.min_cuts_checked;
      if (r.layer_bounds != Check::pass) {
        if (v.pass) v.detail = "first failure " + cell(r);
        v.pass = false;
      }
    }
  }
  v.detail = std::to_string(cuts) + " minimum cuts over " + std::to_string(cells) + " cells" +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict cartesian() {
  Verdict v;
  const std::tuple<const char*, Graph, Graph> pairs[] = {
      {"P3xP3", make_path(3), make_path(3)},
      {"C4xC4", make_cycle(4), make_cycle(4)},
      {"P2xP5", make_path(2), make_path(5)},
      {"C5xP4", make_cycle(5), make_path(4)}};
  for (const auto& [name, a, b] : pairs) {
    const auto c = cartesian_formula_report(a, b);
    v.detail += std::string(v.detail.empty() ? "" : ", ") + name + " " +
                std::to_string(c.formula) + "/" + std::to_string(c.oracle);
    v.pass = v.pass && c.holds();
  }
  return v;
}

Verdict monotonicity(const std::vector<SweepReport>& reports) {
  Verdict v;
  std::size_t pairs = 0;
  for (const auto& report : reports) {
    const SweepRow* prev = nullptr;
    for (const auto& r : report.rows) {
      const bool usable = r.in_guard && r.oracle_status == OracleStatus::finite;
      if (prev && usable && prev->family == r.family && prev->m == r.m && prev->n == r.n &&
          prev->g + 1 == r.g) {
        ++pairs;
        if (prev->oracle > r.oracle) {
          if (v.pass) v.detail = "violation at " + cell(r);
          v.pass = false;
        }
      }
      prev = usable ? &r : nullptr;
    }
  }
  v.detail = std::to_string(pairs) + " consecutive pairs" +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

}  // namespace

int main() {
  const char* titles[3] = {"P_m x P_n grid matches min{m, n, ceil(2 sqrt(g+1)) + 1}",
                           "C_m x P_n grid matches min{m, 2n, ceil(2 sqrt(2(g+1))) + 2}",
                           "C_m x C_n grid matches min{2m, 2n, ceil(4 sqrt(g+1)) + 4}"};
  const double limits[3] = {120.0, 180.0, 300.0};

  std::vector<SweepReport> reports;
  std::string first_csv;
  for (int i = 0; i < 3; ++i) {
    const auto start = Clock::now();
    reports.push_back(sweep(kGrids[i]));
    report(i + 1, titles[i], grid_agreement(reports.back(), seconds_since(start), limits[i]));
    first_csv += reports.back().to_csv();
  }

  report(4, "small cases P1 x Pn, P2 x Pn, C3 x Pn, C3 x Cn for n <= 8", small_cases());
  report(5, "witnesses are g-extra cuts of predicted size and attain the formula",
         witnesses(reports));
  report(6, "subset and fragment solvers agree", oracle_cross_validation());
  report(7, "ceiling identities for g in [0, 10^6]", ceiling_identities());
  report(8, "minimum vertex cuts are I-sets or L-sets", cut_shapes());
  report(9, "layer lower bounds on minimum cuts (<= 25 vertices)", layer_bounds(reports));
  report(10, "Cartesian connectivity formula", cartesian());
  report(11, "kappa_g is monotone in g", monotonicity(reports));

  Verdict det;
  std::string second_csv;
  for (const auto& config : kGrids) second_csv += sweep(config).to_csv();
  det.pass = first_csv == second_csv;
  det.detail = std::to_string(first_csv.size()) + " bytes" + (det.pass ? ", identical" : ", differ");
  report(12, "two full sweeps give byte-identical CSV", det);

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
