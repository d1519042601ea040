#include "xconn/extra_conn.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "bitgraph.hpp"
#include "xconn/errors.hpp"
#include "xconn/parallel.hpp"

namespace xconn {

using detail::BitGraph;
using detail::Mask;

std::string to_string(SolverKind kind) {
  return kind == SolverKind::subset ? "subset" : "fragment";
}

CutVerdict check_g_extra_cut(const Graph& g, const VertexSet& s, std::size_t extra) {
  g.validate(s);
  if (s.size() == g.vertex_count())
    throw std::invalid_argument("cut equals the whole vertex set; nothing left to judge");
  CutVerdict out;
  const auto comps = components(g, s);
  out.min_component_size = std::numeric_limits<std::size_t>::max();
  for (const auto& c : comps) {
    out.component_sizes.push_back(c.size());
    out.min_component_size = std::min(out.min_component_size, c.size());
  }
  out.is_cut = comps.size() >= 2;
  out.is_g_extra = out.is_cut && out.min_component_size >= extra + 1;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_solvable(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("extra connectivity needs at least two vertices");
  if (g.vertex_count() > kMaxSolverOrder)
    throw std::invalid_argument("graph order " + std::to_string(g.vertex_count()) +
                                " exceeds solver limit " + std::to_string(kMaxSolverOrder));
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
}

bool is_extra_cut(const BitGraph& bg, Mask cut, std::size_t extra) {
  const Mask rest = bg.all & ~cut;
  if (!rest) return false;
  Mask first = bg.component(rest, detail::lowest(rest));
  if (first == rest) return false;
  for (Mask left = rest; left;) {
    Mask c = left == rest ? first : bg.component(left, detail::lowest(left));
    if (detail::count(c) < extra + 1) return false;
    left &= ~c;
  }
  return true;
}

// Depth-first enumeration of connected fragments containing a fixed root
// (the fragment's smallest id). Each step picks the lowest undecided boundary
// vertex and either adds it to the fragment or excludes it for the rest of the
// branch, so every connected set is visited once. Excluded boundary vertices
// are guaranteed cut members, which gives the pruning bound.
class FragmentSearch {
 public:
  FragmentSearch(const BitGraph& bg, std::size_t extra, std::atomic<std::size_t>& shared_best,
                 std::size_t initial_best, bool collect)
      : bg_(bg), extra_(extra), shared_best_(shared_best), best_(initial_best), collect_(collect) {}

  void run_root(unsigned root) {
    const Mask below = detail::bit(root) - 1;
    const Mask h = detail::bit(root);
    descend(h, 1, below, bg_.adj[root]);
  }

  [[nodiscard]] std::size_t best() const { return best_; }
  [[nodiscard]] Mask witness() const { return witness_; }
  [[nodiscard]] bool found() const { return found_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] std::vector<Mask>& cuts() { return cuts_; }

 private:
  std::size_t bound() const {
    return std::min(best_, shared_best_.load(std::memory_order_relaxed));
  }

  void descend(Mask h, std::size_t h_size, Mask excluded, Mask boundary) {
    ++nodes_;
    const std::size_t forced = detail::count(boundary & excluded);
    // Ties are kept so every minimum cut (and the lexicographic minimum) is seen.
    if (forced > bound()) return;
    const std::size_t max_size = (bg_.n - forced) / 2;
    if (h_size > max_size) return;
    const Mask open = boundary & ~excluded;
    if (!open || h_size == max_size) {
      evaluate(h, h_size, boundary);
      return;
    }
    const unsigned v = detail::lowest(open);
    const Mask vb = detail::bit(v);
    descend(h | vb, h_size + 1, excluded, (boundary | bg_.adj[v]) & ~(h | vb));
    descend(h, h_size, excluded | vb, boundary);
  }

  void evaluate(Mask h, std::size_t h_size, Mask boundary) {
    if (h_size < extra_ + 1) return;
    const Mask rest = bg_.all & ~h & ~boundary;
    if (!rest) return;
    // Leftover components too small to survive are folded into the cut; the
    // result is the smallest extra-cut having h as a component.
    Mask cut = boundary;
    bool has_large = false;
    for (Mask left = rest; left;) {
      const Mask c = bg_.component(left, detail::lowest(left));
      if (detail::count(c) >= extra_ + 1)
        has_large = true;
      else
        cut |= c;
      left &= ~c;
    }
    if (has_large) record(cut);
  }

  void record(Mask cut) {
    const std::size_t size = detail::count(cut);
    if (size > bound()) return;
    if (!found_ || size < best_) {
      best_ = size;
      witness_ = cut;
      found_ = true;
      std::size_t shared = shared_best_.load(std::memory_order_relaxed);
      while (size < shared &&
             !shared_best_.compare_exchange_weak(shared, size, std::memory_order_relaxed)) {
      }
      if (collect_)
        std::erase_if(cuts_, [size](Mask c) { return detail::count(c) > size; });
    } else if (size == best_ && detail::lex_less_same_size(cut, witness_)) {
      witness_ = cut;
    }
    if (collect_) cuts_.push_back(cut);
  }

  const BitGraph& bg_;
  std::size_t extra_;
  std::atomic<std::size_t>& shared_best_;
  std::size_t best_;
  Mask witness_ = 0;
  bool found_ = false;
  bool collect_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> cuts_;
};

struct FragmentOutcome {
  std::size_t best = 0;
  bool found = false;
  Mask witness = 0;
  std::uint64_t nodes = 0;
  std::vector<Mask> cuts;
};

FragmentOutcome run_fragment_search(const Graph& g, std::size_t extra,
                                    const FragmentOptions& options, bool collect) {
  require_solvable(g);
  const BitGraph bg(g);
  std::size_t initial = bg.n;  // no cut has n vertices
  if (options.seed_cut) {
    if (!check_g_extra_cut(g, *options.seed_cut, extra).is_g_extra)
      throw std::invalid_argument("seed cut is not a valid extra-cut");
    initial = options.seed_cut->size();
  }
  std::atomic<std::size_t> shared_best{initial};
  const std::size_t workers = std::min(resolve_threads(options.threads), bg.n);
  std::vector<FragmentSearch> searches;
  searches.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    searches.emplace_back(bg, extra, shared_best, initial, collect);
  parallel_for(bg.n, workers, [&](std::size_t root, std::size_t w) {
    searches[w].run_root(static_cast<unsigned>(root));
  });

  FragmentOutcome out;
  for (auto& s : searches) {
    out.nodes += s.nodes();
    if (!s.found()) continue;
    if (!out.found || s.best() < out.best ||
        (s.best() == out.best && detail::lex_less_same_size(s.witness(), out.witness))) {
      out.best = s.best();
      out.witness = s.witness();
      out.found = true;
    }
  }
  if (options.seed_cut && !out.found)
    throw std::logic_error("fragment search missed a cut no larger than the seed");
  if (collect && out.found) {
    for (auto& s : searches)
      for (Mask c : s.cuts())
        if (detail::count(c) == out.best) out.cuts.push_back(c);
    std::sort(out.cuts.begin(), out.cuts.end(), [](Mask a, Mask b) {
      return detail::lex_less_same_size(a, b);
    });
    out.cuts.erase(std::unique(out.cuts.begin(), out.cuts.end()), out.cuts.end());
  }
  return out;
}

}  // namespace

ExtraConnResult kappa_extra_subset(const Graph& g, std::size_t extra, std::uint64_t budget) {
  const auto start = Clock::now();
  require_solvable(g);
  const BitGraph bg(g);
  ExtraConnResult out;
  out.g = extra;
  out.solver = SolverKind::subset;

  // Two components of at least extra+1 vertices must survive.
  const std::size_t survivors = 2 * (extra + 1);
  const std::size_t max_k = bg.n >= survivors ? bg.n - survivors : 0;
  std::uint64_t checks = 0;
  for (std::size_t k = 1; k <= max_k; ++k) {
    // Combinations in lexicographic order; the first hit is the lexicographic
    // minimum among cuts of size k.
    std::vector<unsigned> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<unsigned>(i);
    while (true) {
      if (++checks > budget)
        throw InconclusiveError("subset budget of " + std::to_string(budget) +
                                " checks exhausted at cut size " + std::to_string(k));
      Mask cut = 0;
      for (unsigned v : idx) cut |= detail::bit(v);
      if (is_extra_cut(bg, cut, extra)) {
        out.value = k;
        out.witness = detail::from_mask(cut);
        out.stats = {checks, ms_since(start)};
        return out;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == bg.n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.stats = {checks, ms_since(start)};
  return out;
}

ExtraConnResult kappa_extra_fragment(const Graph& g, std::size_t extra,
                                     const FragmentOptions& options) {
  const auto start = Clock::now();
  auto outcome = run_fragment_search(g, extra, options, false);
  ExtraConnResult out;
  out.g = extra;
  out.solver = SolverKind::fragment;
  if (outcome.found) {
    out.value = outcome.best;
    out.witness = detail::from_mask(outcome.witness);
  }
  out.stats = {outcome.nodes, ms_since(start)};
  return out;
}

std::vector<CutSet> enumerate_min_cuts(const Graph& g, std::size_t extra,
                                       const FragmentOptions& options, std::size_t max_cuts) {
  auto outcome = run_fragment_search(g, extra, options, true);
  if (outcome.cuts.size() > max_cuts)
    throw InconclusiveError(std::to_string(outcome.cuts.size()) +
                            " minimum cuts exceed the enumeration limit");
  std::vector<CutSet> out;
  out.reserve(outcome.cuts.size());
  for (Mask c : outcome.cuts) out.push_back(detail::from_mask(c));
  return out;
}

namespace {

// Unit vertex capacities via the usual in/out split: v_in = 2v, v_out = 2v+1.
std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  const std::size_t nodes = 2 * n;
  constexpr int kInf = 1 << 20;
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(nodes);
  auto add = [&](std::size_t a, std::size_t b, int cap) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, cap});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0});
  };
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, kInf);
    add(2 * v + 1, 2 * u, kInf);
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  while (true) {
    std::vector<std::size_t> via(nodes, std::numeric_limits<std::size_t>::max());
    std::vector<char> seen(nodes, 0);
    std::queue<std::size_t> q;
    q.push(source);
    seen[source] = 1;
    while (!q.empty() && !seen[sink]) {
      const std::size_t a = q.front();
      q.pop();
      for (std::size_t e : out[a])
        if (arcs[e].cap > 0 && !seen[arcs[e].to]) {
          seen[arcs[e].to] = 1;
          via[arcs[e].to] = e;
          q.push(arcs[e].to);
        }
    }
    if (!seen[sink]) return flow;
    for (std::size_t v = sink; v != source; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= 1;
      arcs[via[v] ^ 1].cap += 1;
    }
    ++flow;
  }
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("connectivity of empty graph");
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  std::size_t best = n - 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) best = std::min(best, local_connectivity(g, u, v));
  return best;
}

bool check_layer_bounds(const ProductGraph& pg, const CutSet& s) {
  const std::size_t kappa1 = vertex_connectivity(pg.factor1);
  const std::size_t kappa2 = vertex_connectivity(pg.factor2);
  for (Vertex x = 0; x < pg.m(); ++x) {
    const auto slice = slice_of_set(pg, s, Axis::factor2, x);
    if (!slice.empty() && slice.size() < kappa2) return false;
  }
  for (Vertex y = 0; y < pg.n(); ++y) {
    const auto slice = slice_of_set(pg, s, Axis::factor1, y);
    if (!slice.empty() && slice.size() < kappa1) return false;
  }
  return true;
}

}  // namespace xconn
