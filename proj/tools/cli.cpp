#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "xconn/closed_form.hpp"
#include "xconn/errors.hpp"
#include "xconn/extra_conn.hpp"
#include "xconn/io.hpp"
#include "xconn/products.hpp"
#include "xconn/verifier.hpp"
#include "xconn/witnesses.hpp"

namespace xconn::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string family;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t g = 0;
  std::string file;
  std::string out;
  std::string format = "text";
  std::size_t threads = 0;
  std::uint64_t budget = kDefaultSubsetBudget;

  // subcommand specific
  std::string kind = "path";
  std::string product_kind = "strong";
  std::string left, right;
  std::string solver = "fragment";
  bool stats = false;
  bool all_cuts = false;
  std::string small;
  std::string which = "S1";
  std::string cut;
  std::string cut_file;
  std::string families = "pxp,cxp,cxc";
  std::string m_range = "3:6";
  std::string n_range = "3:6";
  std::string g_list;
  bool timing = false;
  std::size_t max_vertices = 36;
  std::size_t max_enum_vertices = 25;
};

/// Input that cannot be acted on; maps to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A check ran and failed; maps to exit code 4.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_family_options(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "pxp, cxp or cxc");
  sub->add_option("--m", o.m, "order of the first factor");
  sub->add_option("--n", o.n, "order of the second factor");
}

void add_output_options(CLI::App* sub, Options& o, const std::vector<std::string>& formats) {
  sub->add_option("--out", o.out, "write results to this file");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
}

Family require_family(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  auto f = parse_family(o.family);
  if (!f) throw UsageError("unknown family '" + o.family + "' (expected pxp, cxp or cxc)");
  if (o.m < 1 || o.n < 1) throw UsageError("--m and --n must be positive");
  return *f;
}

FamilyParams family_params(const Options& o) {
  return {require_family(o), o.m, o.n, o.g};
}

struct Source {
  Graph graph;
  std::optional<ProductGraph> product;
};

Source load_source(const Options& o) {
  if (!o.file.empty()) {
    if (!o.family.empty()) throw UsageError("--file and --family are mutually exclusive");
    auto loaded = graph_from_json(json::parse(read_text_file(o.file)));
    return {std::move(loaded.graph), std::nullopt};
  }
  auto pg = family_product(family_params(o));
  Graph g = pg.graph;
  return {std::move(g), std::move(pg)};
}

ProductGraph require_product(const Options& o) {
  if (!o.file.empty()) throw UsageError("this subcommand needs --family, not --file");
  return family_product(family_params(o));
}

CutSet parse_cut(const Options& o) {
  if (!o.cut_file.empty()) return cut_from_json(json::parse(read_text_file(o.cut_file)));
  if (o.cut.empty()) throw UsageError("--cut or --cut-file is required");
  std::vector<Vertex> ids;
  std::stringstream ss(o.cut);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      ids.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw UsageError("bad vertex id '" + item + "' in --cut");
    }
  }
  return CutSet(std::move(ids));
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError(std::string("bad range '") + text + "' for " + flag + " (expected lo:hi)");
  }
}

std::string join_ids(const CutSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

std::string join_labels(const Graph& g, const CutSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

Graph make_named_graph(const std::string& kind, std::int64_t n) {
  if (n < 0) throw UsageError("--n must be non-negative");
  const auto order = static_cast<std::size_t>(n);
  if (kind == "path") return make_path(order);
  if (kind == "cycle") return make_cycle(order);
  if (kind == "complete") return make_complete(order);
  throw UsageError("unknown graph kind '" + kind + "' (expected path, cycle or complete)");
}

// "path:3", "cycle:5", "complete:4" or a Graph JSON file.
Graph factor_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string order = spec.substr(colon + 1);
    if ((kind == "path" || kind == "cycle" || kind == "complete") && !order.empty() &&
        order.find_first_not_of("0123456789") == std::string::npos)
      return make_named_graph(kind, std::stoll(order));
  }
  return graph_from_json(json::parse(read_text_file(spec))).graph;
}

std::string cmd_gen(const Options& o) {
  if (!o.family.empty()) {
    const auto pg = family_product(family_params(o));
    return o.format == "dot" ? to_dot(pg.graph) : product_to_json(pg).dump(2) + "\n";
  }
  const Graph g = make_named_graph(o.kind, o.n);
  return o.format == "dot" ? to_dot(g) : graph_to_json(g).dump(2) + "\n";
}

std::string cmd_product(const Options& o) {
  ProductGraph pg;
  if (!o.family.empty()) {
    pg = family_product(family_params(o));
    if (o.product_kind == "cartesian") pg = cartesian_product(pg.factor1, pg.factor2);
  } else {
    if (o.left.empty() || o.right.empty())
      throw UsageError("product needs --family or both --left and --right");
    const Graph a = factor_from_spec(o.left), b = factor_from_spec(o.right);
    pg = o.product_kind == "cartesian" ? cartesian_product(a, b) : strong_product(a, b);
  }
  if (o.format == "dot") return to_dot(pg.graph);
  if (o.format == "text") {
    std::ostringstream s;
    s << to_string(pg.kind) << " product: " << pg.graph.vertex_count() << " vertices, "
      << pg.graph.edge_count() << " edges, min degree " << min_degree(pg.graph) << "\n";
    return s.str();
  }
  return product_to_json(pg).dump(2) + "\n";
}

std::string cmd_exact(const Options& o) {
  if (o.g < 0) throw UsageError("--g must be non-negative");
  const Source src = load_source(o);
  const auto extra = static_cast<std::size_t>(o.g);
  FragmentOptions fopts;
  fopts.threads = o.threads;

  if (o.all_cuts) {
    const auto cuts = enumerate_min_cuts(src.graph, extra, fopts);
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& c : cuts) arr.push_back(cut_to_json(src.graph, c, false));
      return json{{"g", o.g}, {"cuts", arr}}.dump(2) + "\n";
    }
    std::ostringstream s;
    s << cuts.size() << " minimum cuts\n";
    for (const auto& c : cuts) s << join_ids(c) << "\n";
    return s.str();
  }

  ExtraConnResult result;
  if (o.solver == "subset") {
    result = kappa_extra_subset(src.graph, extra, o.budget);
  } else {
    result = kappa_extra_fragment(src.graph, extra, fopts);
    if (o.solver == "both") {
      const auto check = kappa_extra_subset(src.graph, extra, o.budget);
      if (check.value != result.value || check.witness != result.witness)
        throw VerificationFailure("subset and fragment solvers disagree");
    }
  }
  if (o.format == "json") return result_to_json(src.graph, result, o.stats).dump(2) + "\n";
  std::ostringstream s;
  s << (result.value ? std::to_string(*result.value) : std::string("infinity")) << "\n";
  if (result.witness) {
    s << "witness: " << join_ids(*result.witness) << "\n";
    if (!src.graph.labels().empty())
      s << "labels: " << join_labels(src.graph, *result.witness) << "\n";
  }
  if (o.stats)
    s << "nodes: " << result.stats.nodes << "\nelapsed_ms: " << result.stats.elapsed_ms << "\n";
  return s.str();
}

std::string term_name(FormulaTerm t) {
  switch (t) {
    case FormulaTerm::first: return "first";
    case FormulaTerm::second: return "second";
    case FormulaTerm::third: break;
  }
  return "third";
}

std::string cmd_formula(const Options& o) {
  if (!o.small.empty()) {
    auto which = parse_small_case(o.small);
    if (!which) throw UsageError("unknown small case '" + o.small + "'");
    const auto value = kappa_small_case(*which, o.n, o.g);
    if (o.format == "json")
      return json{{"case", o.small}, {"n", o.n}, {"g", o.g}, {"value", value}}.dump(2) + "\n";
    return std::to_string(value) + "\n";
  }
  const FamilyParams p = family_params(o);
  if (!orders_supported(p))
    throw DomainError("orders (" + std::to_string(p.m) + "," + std::to_string(p.n) +
                      ") are not covered by " + to_string(p.family));
  const auto r = kappa_formula(p);
  if (o.format == "json") {
    json active = json::array();
    for (auto t : r.active_terms) active.push_back(term_name(t));
    return json{{"family", o.family}, {"m", o.m}, {"n", o.n}, {"g", o.g},
                {"value", r.value}, {"terms", {r.terms[0], r.terms[1], r.terms[2]}},
                {"active_terms", active}, {"guard_bound", guard_bound(p)}}
               .dump(2) + "\n";
  }
  return std::to_string(r.value) + "\n";
}

WitnessKind parse_which(const std::string& text) {
  if (text == "S1" || text == "s1") return WitnessKind::s1;
  if (text == "S2" || text == "s2") return WitnessKind::s2;
  if (text == "S3" || text == "s3") return WitnessKind::s3;
  throw UsageError("unknown witness '" + text + "' (expected S1, S2 or S3)");
}

std::string cmd_witness(const Options& o) {
  const FamilyParams p = family_params(o);
  if (p.g < 0) throw UsageError("--g must be non-negative");
  const auto spec = make_witness_spec(p, parse_which(o.which));
  const CutSet cut = build_witness(spec);
  const ProductGraph pg = family_product(p);
  const auto check = validate_witness(pg, cut, static_cast<std::size_t>(p.g));
  const bool ok = check.verdict.is_g_extra &&
                  static_cast<std::int64_t>(cut.size()) == spec.predicted_size;
  std::string text;
  if (o.format == "dot") {
    text = to_dot(pg.graph, cut);
  } else if (o.format == "json") {
    text = json{{"family", o.family}, {"m", o.m}, {"n", o.n}, {"g", o.g},
                {"which", to_string(spec.which)}, {"predicted_size", spec.predicted_size},
                {"size", cut.size()}, {"cut", cut_to_json(pg.graph, cut, true)},
                {"is_g_extra", check.verdict.is_g_extra},
                {"component_sizes", check.verdict.component_sizes}}
               .dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << to_string(spec.which) << " size " << cut.size() << " (predicted " << spec.predicted_size
      << ")\ncut: " << join_ids(cut) << "\nlabels: " << join_labels(pg.graph, cut)
      << "\ng-extra: " << (check.verdict.is_g_extra ? "yes" : "no") << ", sides "
      << check.small_side << " / " << check.large_side << "\n";
    text = s.str();
  }
  if (!ok) throw VerificationFailure(text + "witness failed validation");
  return text;
}

std::string cmd_classify(const Options& o) {
  const ProductGraph pg = require_product(o);
  const CutSet cut = parse_cut(o);
  const auto c = classify_cut(pg, cut);
  if (o.format == "json") {
    json doc{{"verdict", to_string(c.verdict)}};
    if (c.verdict == CutShape::i_set)
      doc["axis"] = *c.axis == Axis::factor1 ? "factor1" : "factor2";
    if (c.verdict != CutShape::neither) {
      doc["s1"] = c.s1.vec();
      doc["a1"] = c.a1.vec();
      doc["s2"] = c.s2.vec();
      doc["a2"] = c.a2.vec();
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream s;
  s << to_string(c.verdict) << "\n";
  if (c.verdict == CutShape::i_set) {
    if (*c.axis == Axis::factor1)
      s << "S1 = " << join_labels(pg.factor1, c.s1) << " (times all of factor 2)\n";
    else
      s << "S2 = " << join_labels(pg.factor2, c.s2) << " (all of factor 1 times)\n";
  } else if (c.verdict == CutShape::l_set) {
    s << "S1 = " << join_labels(pg.factor1, c.s1) << "; A1 = " << join_labels(pg.factor1, c.a1)
      << "\nS2 = " << join_labels(pg.factor2, c.s2) << "; A2 = " << join_labels(pg.factor2, c.a2)
      << "\n";
  }
  return s.str();
}

std::string cmd_check_layers(const Options& o) {
  const ProductGraph pg = require_product(o);
  std::vector<CutSet> cuts;
  if (!o.cut.empty() || !o.cut_file.empty()) {
    cuts.push_back(parse_cut(o));
  } else {
    if (o.g < 0) throw UsageError("--g must be non-negative");
    FragmentOptions fopts;
    fopts.threads = o.threads;
    cuts = enumerate_min_cuts(pg.graph, static_cast<std::size_t>(o.g), fopts);
  }
  std::size_t passed = 0;
  for (const auto& c : cuts) passed += check_layer_bounds(pg, c) ? 1 : 0;
  std::ostringstream s;
  if (o.format == "json")
    s << json{{"cuts", cuts.size()}, {"passed", passed}}.dump(2) << "\n";
  else
    s << passed << "/" << cuts.size() << " cuts meet the layer bounds\n";
  if (passed != cuts.size()) throw VerificationFailure(s.str());
  return s.str();
}

std::string cmd_sweep(const Options& o) {
  SweepConfig cfg;
  std::stringstream ss(o.families);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto f = parse_family(item);
    if (!f) throw UsageError("unknown family '" + item + "'");
    cfg.families.push_back(*f);
  }
  std::tie(cfg.m_min, cfg.m_max) = parse_range(o.m_range, "--m-range");
  std::tie(cfg.n_min, cfg.n_max) = parse_range(o.n_range, "--n-range");
  if (!o.g_list.empty()) {
    cfg.policy = GPolicy::explicit_list;
    std::stringstream gs(o.g_list);
    while (std::getline(gs, item, ',')) {
      try {
        cfg.g_list.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw UsageError("bad g value '" + item + "'");
      }
    }
  }
  cfg.solver.threads = o.threads;
  cfg.solver.max_sweep_vertices = o.max_vertices;
  cfg.solver.max_enumeration_vertices = o.max_enum_vertices;
  const SweepReport report = sweep(cfg);
  std::string text = o.format == "json" ? report.to_json(o.timing).dump(2) + "\n"
                                        : report.to_csv(o.timing);
  if (report.failures() > 0) throw VerificationFailure(text);
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact g-extra connectivity of strong products of paths and cycles", "xconn"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a path, cycle, complete graph or family product");
  gen->add_option("--kind", o.kind, "path, cycle or complete");
  add_family_options(gen, o);
  add_output_options(gen, o, {"json", "dot", "text"});

  auto* product = app.add_subcommand("product", "build a strong or Cartesian product");
  add_family_options(product, o);
  product->add_option("--kind", o.product_kind, "strong or cartesian")
      ->check(CLI::IsMember({"strong", "cartesian"}));
  product->add_option("--left", o.left, "first factor: path:N, cycle:N, complete:N or a JSON file");
  product->add_option("--right", o.right, "second factor");
  add_output_options(product, o, {"json", "dot", "text"});

  auto* exact = app.add_subcommand("exact", "compute kappa_g exactly");
  add_family_options(exact, o);
  exact->add_option("--file", o.file, "Graph JSON input");
  exact->add_option("--g", o.g, "extra parameter g");
  exact->add_option("--solver", o.solver, "fragment, subset or both")
      ->check(CLI::IsMember({"fragment", "subset", "both"}));
  exact->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  exact->add_option("--budget", o.budget, "subset solver check budget");
  exact->add_flag("--stats", o.stats, "report search statistics");
  exact->add_flag("--all-cuts", o.all_cuts, "list every minimum cut");
  add_output_options(exact, o, {"text", "json"});

  auto* formula = app.add_subcommand("formula", "evaluate the closed form");
  add_family_options(formula, o);
  formula->add_option("--g", o.g, "extra parameter g");
  formula->add_option("--small", o.small, "p1pn, p2pn, c3pn or c3cn (uses --n, --g)");
  add_output_options(formula, o, {"text", "json"});

  auto* witness = app.add_subcommand("witness", "build and validate an explicit cut");
  add_family_options(witness, o);
  witness->add_option("--g", o.g, "extra parameter g");
  witness->add_option("--which", o.which, "S1, S2 or S3");
  add_output_options(witness, o, {"text", "json", "dot"});

  auto* classify = app.add_subcommand("classify-cut", "classify a cut as I-set, L-set or neither");
  add_family_options(classify, o);
  classify->add_option("--file", o.file, "unsupported; products need --family");
  classify->add_option("--cut", o.cut, "comma-separated vertex ids");
  classify->add_option("--cut-file", o.cut_file, "cut as JSON list");
  add_output_options(classify, o, {"text", "json"});

  auto* layers = app.add_subcommand("check-layers", "check layer lower bounds on minimum cuts");
  add_family_options(layers, o);
  layers->add_option("--g", o.g, "extra parameter g");
  layers->add_option("--cut", o.cut, "check this cut instead of every minimum cut");
  layers->add_option("--cut-file", o.cut_file, "cut as JSON list");
  layers->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  add_output_options(layers, o, {"text", "json"});

  auto* sweep_cmd = app.add_subcommand("sweep", "reconcile formula, oracle and witnesses on a grid");
  sweep_cmd->add_option("--families", o.families, "comma-separated families");
  sweep_cmd->add_option("--m-range", o.m_range, "lo:hi");
  sweep_cmd->add_option("--n-range", o.n_range, "lo:hi");
  sweep_cmd->add_option("--g-list", o.g_list, "explicit g values (default: every in-guard g)");
  sweep_cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  sweep_cmd->add_option("--max-vertices", o.max_vertices, "largest product solved");
  sweep_cmd->add_option("--max-enum-vertices", o.max_enum_vertices,
                        "largest product whose minimum cuts are all checked");
  sweep_cmd->add_flag("--timing", o.timing, "append per-cell runtime");
  add_output_options(sweep_cmd, o, {"csv", "json"});

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (app.got_subcommand(sweep_cmd) && o.format == "text") o.format = "csv";

  auto emit = [&](const std::string& text) {
    if (o.out.empty())
      out << text;
    else
      write_text_file(o.out, text);
  };

  try {
    std::string text;
    if (app.got_subcommand(gen)) text = cmd_gen(o);
    else if (app.got_subcommand(product)) text = cmd_product(o);
    else if (app.got_subcommand(exact)) text = cmd_exact(o);
    else if (app.got_subcommand(formula)) text = cmd_formula(o);
    else if (app.got_subcommand(witness)) text = cmd_witness(o);
    else if (app.got_subcommand(classify)) text = cmd_classify(o);
    else if (app.got_subcommand(layers)) text = cmd_check_layers(o);
    else text = cmd_sweep(o);
    emit(text);
    return kOk;
  } catch (const VerificationFailure& e) {
    emit(e.what());
    err << "verification failed\n";
    return kVerificationFailed;
  } catch (const DomainError& e) {
    err << "out of domain: " << e.what() << "\n";
    return kOutOfDomain;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace xconn::cli
