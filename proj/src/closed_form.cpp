#include "xconn/closed_form.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "xconn/errors.hpp"

namespace xconn {

std::string to_string(Family family) {
  switch (family) {
    case Family::path_path: return "pxp";
    case Family::cycle_path: return "cxp";
    case Family::cycle_cycle: return "cxc";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& text) {
  if (text == "pxp") return Family::path_path;
  if (text == "cxp") return Family::cycle_path;
  if (text == "cxc") return Family::cycle_cycle;
  return std::nullopt;
}

bool orders_supported(const FamilyParams& p) {
  switch (p.family) {
    case Family::path_path: return p.m >= 3 && p.n >= 3;
    case Family::cycle_path: return p.m >= 4 && p.n >= 3;
    case Family::cycle_cycle: return p.m >= 4 && p.n >= 4;
  }
  return false;
}

std::int64_t guard_bound(const FamilyParams& p) {
  if (!orders_supported(p))
    throw std::invalid_argument("orders (" + std::to_string(p.m) + "," + std::to_string(p.n) +
                                ") not covered by family " + to_string(p.family));
  const std::int64_t m = p.m, n = p.n;
  switch (p.family) {
    case Family::path_path: return std::min(n * ((m - 1) / 2) - 1, m * ((n - 1) / 2) - 1);
    case Family::cycle_path: return std::min(n * ((m - 2) / 2) - 1, m * ((n - 1) / 2) - 1);
    case Family::cycle_cycle: return std::min(n * ((m - 2) / 2) - 1, m * ((n - 2) / 2) - 1);
  }
  return -1;
}

bool guard(const FamilyParams& p) { return p.g >= 0 && p.g <= guard_bound(p); }

void formula_terms(const FamilyParams& p, std::int64_t out[3]) {
  if (p.g < 0) throw std::invalid_argument("g must be non-negative");
  const auto size = static_cast<std::uint64_t>(p.g) + 1;
  switch (p.family) {
    case Family::path_path:
      out[0] = p.m;
      out[1] = p.n;
      out[2] = static_cast<std::int64_t>(ceil_two_sqrt(size)) + 1;
      return;
    case Family::cycle_path:
      out[0] = p.m;
      out[1] = 2 * p.n;
      out[2] = static_cast<std::int64_t>(ceil_two_sqrt(2 * size)) + 2;
      return;
    case Family::cycle_cycle:
      out[0] = 2 * p.m;
      out[1] = 2 * p.n;
      out[2] = static_cast<std::int64_t>(ceil_four_sqrt(size)) + 4;
      return;
  }
}

FormulaResult kappa_formula(const FamilyParams& p) {
  if (!orders_supported(p) || !guard(p))
    throw DomainError(to_string(p.family) + " (m=" + std::to_string(p.m) +
                      ", n=" + std::to_string(p.n) + ", g=" + std::to_string(p.g) +
                      ") lies outside the closed form's domain");
  FormulaResult out;
  formula_terms(p, out.terms);
  out.value = std::min({out.terms[0], out.terms[1], out.terms[2]});
  constexpr FormulaTerm names[3] = {FormulaTerm::first, FormulaTerm::second, FormulaTerm::third};
  for (int i = 0; i < 3; ++i)
    if (out.terms[i] == out.value) out.active_terms.push_back(names[i]);
  return out;
}

std::string to_string(SmallCase which) {
  switch (which) {
    case SmallCase::p1_pn: return "p1pn";
    case SmallCase::p2_pn: return "p2pn";
    case SmallCase::c3_pn: return "c3pn";
    case SmallCase::c3_cn: return "c3cn";
  }
  return "?";
}

std::optional<SmallCase> parse_small_case(const std::string& text) {
  for (auto c : {SmallCase::p1_pn, SmallCase::p2_pn, SmallCase::c3_pn, SmallCase::c3_cn})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::int64_t small_case_bound(SmallCase which, std::int64_t n) {
  switch (which) {
    case SmallCase::p1_pn: return (n - 1) / 2 - 1;
    case SmallCase::p2_pn: return 2 * ((n - 1) / 2) - 1;
    case SmallCase::c3_pn: return 3 * ((n - 1) / 2) - 1;
    case SmallCase::c3_cn: return 3 * ((n - 2) / 2) - 1;
  }
  return -1;
}

std::int64_t kappa_small_case(SmallCase which, std::int64_t n, std::int64_t g) {
  const std::int64_t min_n = which == SmallCase::p1_pn || which == SmallCase::p2_pn ? 1 : 3;
  if (n < min_n || g < 0 || g > small_case_bound(which, n))
    throw DomainError(to_string(which) + " (n=" + std::to_string(n) + ", g=" +
                      std::to_string(g) + ") lies outside the asserted range");
  switch (which) {
    case SmallCase::p1_pn: return 1;
    case SmallCase::p2_pn: return 2;
    case SmallCase::c3_pn: return 3;
    case SmallCase::c3_cn: return 6;
  }
  return 0;
}

std::uint64_t ceil_sqrt(std::uint64_t x) {
  // Least k with k*k >= x.
  std::uint64_t lo = 0, hi = std::uint64_t{1} << 32;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<unsigned __int128>(mid) * mid >= x)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::uint64_t ceil_two_sqrt(std::uint64_t x) {
  if (x > std::numeric_limits<std::uint64_t>::max() / 4)
    throw std::overflow_error("ceil_two_sqrt argument too large");
  return ceil_sqrt(4 * x);
}

std::uint64_t ceil_four_sqrt(std::uint64_t x) {
  if (x > std::numeric_limits<std::uint64_t>::max() / 16)
    throw std::overflow_error("ceil_four_sqrt argument too large");
  return ceil_sqrt(16 * x);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

std::string to_string(CeilingKind kind) {
  switch (kind) {
    case CeilingKind::path_path: return "pxp";
    case CeilingKind::cycle_path: return "cxp";
    case CeilingKind::cycle_cycle: return "cxc";
  }
  return "?";
}

CeilingSides ceiling_sides(CeilingKind kind, std::uint64_t g) {
  const std::uint64_t size = kind == CeilingKind::cycle_path ? 2 * (g + 1) : g + 1;
  const std::uint64_t width = ceil_sqrt(size);
  const std::uint64_t depth = ceil_div(size, width);
  if (kind == CeilingKind::cycle_cycle) return {2 * width + 2 * depth, ceil_four_sqrt(size)};
  return {width + depth, ceil_two_sqrt(size)};
}

bool ceiling_identity(CeilingKind kind, std::uint64_t g) {
  const auto sides = ceiling_sides(kind, g);
  return sides.lhs == sides.rhs;
}

}  // namespace xconn
