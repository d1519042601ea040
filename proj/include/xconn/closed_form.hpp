#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xconn {

/// The three strong-product families with closed forms:
/// P_m x P_n, C_m x P_n and C_m x C_n (cycle always in the first factor).
enum class Family { path_path, cycle_path, cycle_cycle };

std::string to_string(Family family);
/// Accepts the CLI shorthands pxp, cxp, cxc.
std::optional<Family> parse_family(const std::string& text);

struct FamilyParams {
  Family family = Family::path_path;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t g = 0;
};

/// Smallest orders the family's closed form covers: (3,3), (4,3), (4,4).
bool orders_supported(const FamilyParams& p);

/// Largest g covered by the family's closed form for orders (m, n). Negative
/// when no g is covered. Throws std::invalid_argument for unsupported orders.
std::int64_t guard_bound(const FamilyParams& p);

/// True iff 0 <= g <= guard_bound.
bool guard(const FamilyParams& p);

enum class FormulaTerm { first, second, third };

struct FormulaResult {
  std::int64_t value = 0;
  /// All terms attaining the minimum.
  std::vector<FormulaTerm> active_terms;
  bool in_domain = true;
  /// The three min-terms, in order.
  std::int64_t terms[3] = {0, 0, 0};
};

/// The three min-terms for the family, without the domain check.
void formula_terms(const FamilyParams& p, std::int64_t out[3]);

/// Closed-form kappa_g. Throws DomainError outside the guard.
FormulaResult kappa_formula(const FamilyParams& p);

/// Degenerate factors handled separately: P_1 x P_n, P_2 x P_n,
/// C_3 x P_n, C_3 x C_n.
enum class SmallCase { p1_pn, p2_pn, c3_pn, c3_cn };

std::string to_string(SmallCase which);
std::optional<SmallCase> parse_small_case(const std::string& text);

/// Largest g for which the small-case value is asserted at order n.
std::int64_t small_case_bound(SmallCase which, std::int64_t n);

/// 1, 2, 3 or 6. Throws DomainError when g exceeds small_case_bound.
std::int64_t kappa_small_case(SmallCase which, std::int64_t n, std::int64_t g);

/// ceil(sqrt(x)) for x >= 0, exact.
std::uint64_t ceil_sqrt(std::uint64_t x);
/// ceil(2 * sqrt(x)): the least k with k^2 >= 4x.
std::uint64_t ceil_two_sqrt(std::uint64_t x);
/// ceil(4 * sqrt(x)): the least k with k^2 >= 16x.
std::uint64_t ceil_four_sqrt(std::uint64_t x);
/// ceil(a / b) for b > 0.
std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b);

enum class CeilingKind { path_path, cycle_path, cycle_cycle };

std::string to_string(CeilingKind kind);

/// Evaluates both sides of the witness-size identity used for each family:
///   pxp: ceil(sqrt(N)) + ceil(N / ceil(sqrt(N)))          = ceil(2 sqrt(N)),  N = g+1
///   cxp: the same with N = 2(g+1)
///   cxc: 2 ceil(sqrt(N)) + 2 ceil(N / ceil(sqrt(N)))      = ceil(4 sqrt(N)),  N = g+1
struct CeilingSides {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};
CeilingSides ceiling_sides(CeilingKind kind, std::uint64_t g);
bool ceiling_identity(CeilingKind kind, std::uint64_t g);

}  // namespace xconn
