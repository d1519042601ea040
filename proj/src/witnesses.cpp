#include "xconn/witnesses.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "xconn/errors.hpp"

namespace xconn {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::s1: return "S1";
    case WitnessKind::s2: return "S2";
    case WitnessKind::s3: return "S3";
  }
  return "?";
}

WitnessSpec make_witness_spec(const FamilyParams& p, WitnessKind which) {
  std::int64_t terms[3];
  formula_terms(p, terms);
  return {p, which, terms[static_cast<int>(which)]};
}

ProductGraph family_product(const FamilyParams& p) {
  if (p.m < 1 || p.n < 1) throw std::invalid_argument("family orders must be positive");
  const auto m = static_cast<std::size_t>(p.m), n = static_cast<std::size_t>(p.n);
  switch (p.family) {
    case Family::path_path: return strong_product(make_path(m), make_path(n));
    case Family::cycle_path: return strong_product(make_cycle(m), make_path(n));
    case Family::cycle_cycle: return strong_product(make_cycle(m), make_cycle(n));
  }
  throw std::invalid_argument("unknown family");
}

ProductGraph small_case_product(SmallCase which, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  const auto order = static_cast<std::size_t>(n);
  switch (which) {
    case SmallCase::p1_pn: return strong_product(make_path(1), make_path(order));
    case SmallCase::p2_pn: return strong_product(make_path(2), make_path(order));
    case SmallCase::c3_pn: return strong_product(make_cycle(3), make_path(order));
    case SmallCase::c3_cn: return strong_product(make_cycle(3), make_cycle(order));
  }
  throw std::invalid_argument("unknown small case");
}

bool witness_constructible(const FamilyParams& p, WitnessKind which) {
  if (!orders_supported(p) || !guard(p)) return false;
  if (which != WitnessKind::s3) return true;
  std::int64_t terms[3];
  formula_terms(p, terms);
  return terms[2] < std::min(terms[0], terms[1]);
}

namespace {

// The only place where the textbook vertex names are turned into ids:
// path vertices are named 1..n, cycle vertices 0..n-1 with index n == 0.
class IndexMap {
 public:
  IndexMap(std::int64_t order, bool cyclic) : order_(order), cyclic_(cyclic) {}

  [[nodiscard]] Vertex operator()(std::int64_t name) const {
    if (cyclic_) return static_cast<Vertex>(((name % order_) + order_) % order_);
    if (name < 1 || name > order_)
      throw std::logic_error("path vertex name " + std::to_string(name) + " out of range");
    return static_cast<Vertex>(name - 1);
  }

  /// Named vertices first..last inclusive.
  [[nodiscard]] VertexSet run(std::int64_t first, std::int64_t last) const {
    std::vector<Vertex> out;
    for (std::int64_t k = first; k <= last; ++k) out.push_back((*this)(k));
    return VertexSet(std::move(out));
  }

  [[nodiscard]] VertexSet all() const { return VertexSet::range(static_cast<Vertex>(order_)); }

 private:
  std::int64_t order_;
  bool cyclic_;
};

CutSet cross(const ProductGraph& pg, const VertexSet& xs, const VertexSet& ys) {
  std::vector<Vertex> out;
  for (Vertex i : xs)
    for (Vertex j : ys) out.push_back(pg.id(i, j));
  return CutSet(std::move(out));
}

CutSet unite(std::initializer_list<CutSet> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return CutSet(std::move(out));
}

// (J1 x K2) u (J1 x J2) u (K1 x J2): the boundary of the block K1 x K2.
CutSet corner_boundary(const ProductGraph& pg, const VertexSet& j1, const VertexSet& k1,
                       const VertexSet& j2, const VertexSet& k2) {
  return unite({cross(pg, j1, k2), cross(pg, j1, j2), cross(pg, k1, j2)});
}

struct BlockShape {
  std::int64_t width;  // along factor 1
  std::int64_t depth;  // along factor 2
};

// Block dimensions for the square-root constructions: width ceil(sqrt(N)),
// depth ceil(N / width).
BlockShape balanced_block(std::int64_t size) {
  const auto width = static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(size)));
  const auto depth = static_cast<std::int64_t>(
      ceil_div(static_cast<std::uint64_t>(size), static_cast<std::uint64_t>(width)));
  return {width, depth};
}

// On C_m x P_n a corner block costs width + 2*depth + 2 boundary vertices
// (two cycle-side columns, one path-side row). Minimise that cost over all
// depths; the smallest depth wins ties.
BlockShape cycle_path_block(std::int64_t size) {
  BlockShape best{size, 1};
  for (std::int64_t depth = 1; depth <= size; ++depth) {
    const std::int64_t width = (size + depth - 1) / depth;
    if (width + 2 * depth < best.width + 2 * best.depth) best = {width, depth};
  }
  return best;
}

}  // namespace

CutSet build_witness(const WitnessSpec& spec) {
  const FamilyParams& p = spec.family;
  if (!witness_constructible(p, spec.which))
    throw DomainError(to_string(spec.which) + " is not constructible for " +
                      to_string(p.family) + " (m=" + std::to_string(p.m) +
                      ", n=" + std::to_string(p.n) + ", g=" + std::to_string(p.g) + ")");
  const ProductGraph pg = family_product(p);
  const bool cyclic1 = p.family != Family::path_path;
  const bool cyclic2 = p.family == Family::cycle_cycle;
  const IndexMap x(p.m, cyclic1);
  const IndexMap y(p.n, cyclic2);
  const std::int64_t m = p.m, n = p.n, size = p.g + 1;

  switch (spec.which) {
    case WitnessKind::s1:
      if (p.family == Family::cycle_cycle)
        return cross(pg, x.all(), VertexSet{y(0), y((n - 2) / 2 + 1)});
      return cross(pg, x.all(), VertexSet{y((n - 1) / 2 + 1)});

    case WitnessKind::s2:
      if (p.family == Family::path_path) return cross(pg, VertexSet{x((m - 1) / 2 + 1)}, y.all());
      return cross(pg, VertexSet{x(0), x((m - 2) / 2 + 1)}, y.all());

    case WitnessKind::s3:
      switch (p.family) {
        case Family::path_path: {
          const auto [a, b] = balanced_block(size);
          return corner_boundary(pg, VertexSet{x(a + 1)}, x.run(1, a), VertexSet{y(b + 1)},
                                 y.run(1, b));
        }
        case Family::cycle_path: {
          const auto [a, b] = cycle_path_block(size);
          return corner_boundary(pg, VertexSet{x(0), x(a + 1)}, x.run(1, a),
                                 VertexSet{y(b + 1)}, y.run(1, b));
        }
        case Family::cycle_cycle: {
          const auto [a, b] = balanced_block(size);
          return corner_boundary(pg, VertexSet{x(0), x(a + 1)}, x.run(1, a),
                                 VertexSet{y(0), y(b + 1)}, y.run(1, b));
        }
      }
  }
  throw std::logic_error("unhandled witness");
}

WitnessCheck validate_witness(const ProductGraph& pg, const CutSet& cut, std::size_t g) {
  WitnessCheck out;
  out.verdict = check_g_extra_cut(pg.graph, cut, g);
  out.size = cut.size();
  const auto& sizes = out.verdict.component_sizes;
  if (!sizes.empty()) {
    out.small_side = *std::min_element(sizes.begin(), sizes.end());
    out.large_side = *std::max_element(sizes.begin(), sizes.end());
  }
  return out;
}

}  // namespace xconn
