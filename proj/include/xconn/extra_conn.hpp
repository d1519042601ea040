#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xconn/graph.hpp"
#include "xconn/products.hpp"

namespace xconn {

/// Largest order the exact solvers accept; vertex sets are held as 64-bit masks.
inline constexpr std::size_t kMaxSolverOrder = 64;

/// Default cap on subset validity checks for the enumeration oracle.
inline constexpr std::uint64_t kDefaultSubsetBudget = 100'000'000;

struct CutVerdict {
  bool is_cut = false;
  /// 0 when s leaves nothing behind.
  std::size_t min_component_size = 0;
  bool is_g_extra = false;
  /// Sizes of the components of G - s, ordered by smallest member.
  std::vector<std::size_t> component_sizes;
};

/// Judges s as an `extra`-extra cut. Rejects s = V(G).
CutVerdict check_g_extra_cut(const Graph& g, const VertexSet& s, std::size_t extra);

enum class SolverKind { subset, fragment };

std::string to_string(SolverKind kind);

struct SolverStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct ExtraConnResult {
  std::size_t g = 0;
  /// std::nullopt encodes kappa_g = infinity (no g-extra cut exists).
  std::optional<std::size_t> value;
  /// Lexicographically smallest minimum cut; present iff value is finite.
  std::optional<CutSet> witness;
  SolverKind solver = SolverKind::fragment;
  SolverStats stats;

  [[nodiscard]] bool is_infinite() const { return !value.has_value(); }
};

struct FragmentOptions {
  /// Worker threads; 0 selects the hardware concurrency.
  std::size_t threads = 1;
  /// A known extra-cut used to seed the pruning bound. It is validated first;
  /// the result never depends on it beyond search effort.
  std::optional<CutSet> seed_cut;
};

/// Exact kappa_g by testing all vertex subsets in order of increasing size.
/// Throws InconclusiveError when more than `budget` subsets would be checked.
ExtraConnResult kappa_extra_subset(const Graph& g, std::size_t extra,
                                   std::uint64_t budget = kDefaultSubsetBudget);

/// Exact kappa_g by enumerating connected fragments H (the small side of a
/// cut) and taking N(H) plus any undersized leftover components as the cut.
ExtraConnResult kappa_extra_fragment(const Graph& g, std::size_t extra,
                                     const FragmentOptions& options = {});

/// All minimum `extra`-extra cuts, sorted. Empty when kappa_g is infinite.
/// Throws InconclusiveError when more than `max_cuts` minimum cuts exist.
std::vector<CutSet> enumerate_min_cuts(const Graph& g, std::size_t extra,
                                       const FragmentOptions& options = {},
                                       std::size_t max_cuts = 1'000'000);

/// Classical vertex connectivity via unit-capacity max flow (Menger);
/// |V| - 1 for complete graphs.
std::size_t vertex_connectivity(const Graph& g);

/// True iff every nonempty layer slice of s has at least kappa(factor)
/// vertices, on both axes.
bool check_layer_bounds(const ProductGraph& pg, const CutSet& s);

}  // namespace xconn
