#pragma once

#include <cstdint>
#include <string>

#include "xconn/closed_form.hpp"
#include "xconn/extra_conn.hpp"
#include "xconn/products.hpp"

namespace xconn {

/// The explicit upper-bound cuts for each family.
///   S1: a full G1-layer band (one or two rows), |S1| = first term
///   S2: a full G2-layer band (one or two columns), |S2| = second term
///   S3: the boundary of a corner block, |S3| = third term
enum class WitnessKind { s1, s2, s3 };

std::string to_string(WitnessKind kind);

struct WitnessSpec {
  FamilyParams family;
  WitnessKind which = WitnessKind::s1;
  std::int64_t predicted_size = 0;
};

/// predicted_size is the family's min-term matching `which`.
WitnessSpec make_witness_spec(const FamilyParams& p, WitnessKind which);

/// The strong product for a family: P_m x P_n, C_m x P_n or C_m x C_n.
ProductGraph family_product(const FamilyParams& p);
/// P_1 x P_n, P_2 x P_n, C_3 x P_n or C_3 x C_n.
ProductGraph small_case_product(SmallCase which, std::int64_t n);

/// In-guard, and for S3 the third term strictly below the other two.
bool witness_constructible(const FamilyParams& p, WitnessKind which);

/// Builds the witness on family_product(spec.family). Throws DomainError
/// when witness_constructible is false. The size is not forced to match
/// predicted_size; compare with validate_witness.
CutSet build_witness(const WitnessSpec& spec);

struct WitnessCheck {
  CutVerdict verdict;
  std::size_t size = 0;
  /// Smallest and largest component of G - cut.
  std::size_t small_side = 0;
  std::size_t large_side = 0;
};

WitnessCheck validate_witness(const ProductGraph& pg, const CutSet& cut, std::size_t g);

}  // namespace xconn
