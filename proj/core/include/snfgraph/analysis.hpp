#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "snfgraph/families.hpp"
#include "snfgraph/graph.hpp"
#include "snfgraph/smith.hpp"

namespace snfgraph {

/// Raised when two independent computations of the same quantity disagree.
/// Indicates a bug, never a property of the input.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct InvariantProfile {
  std::uint32_t n = 0;
  std::vector<BigInt> factors;
  std::optional<std::vector<BigInt>> deltas;
  BigInt tree_count;
  std::uint32_t diameter = 0;
  std::optional<BigInt> s2;
  std::optional<BigInt> s3;
};

enum class S3Class {
  EqN,
  EqNMinus1,
  EqNMinus2,
  EqNMinus3,
  Other,
  CompleteGraph,
  NotApplicable,
};

std::string_view s3_class_name(S3Class c);
std::optional<S3Class> s3_class_from_name(std::string_view name);

/// True for the four classes the characterization theorem describes.
bool is_characterized(S3Class c);

struct ClassificationReport {
  InvariantProfile profile;
  S3Class s3_class = S3Class::NotApplicable;
  std::optional<Family> matched_family;
  bool structural_check_passed = false;
};

struct ProfileOptions {
  /// Fill deltas by minor enumeration (only honoured for n <= 9).
  bool with_divisors = false;
  SnfOptions snf;
};

/// Throws std::invalid_argument for disconnected input.
InvariantProfile invariant_profile(const Graph& g, const ProfileOptions& options = {});

/// Product of the first n-1 invariant factors, checked against the
/// determinant of the Laplacian with row and column 0 removed.
BigInt spanning_tree_count(const Graph& g);

/// s2 != 1. Requires a connected graph with n >= 3.
bool s2_is_nontrivial(const Graph& g);

/// The families the theorem prescribes for a class at order n. Empty for
/// Other / CompleteGraph / NotApplicable and for orders the class excludes.
std::vector<Family> prescribed_families(S3Class c, std::uint32_t n);

/// Value class of s3 relative to n for a connected graph g.
S3Class s3_value_class(const Graph& g, const BigInt& s3);

ClassificationReport classify_s3(const Graph& g, const ProfileOptions& options = {});

/// Closed-form diagonal for Complete, CompleteMinusEdge, PendantComplete and
/// Case7 at n >= 5. Throws std::invalid_argument for any other family.
std::vector<BigInt> expected_snf_for_family(Family f, std::uint32_t n);

}  // namespace snfgraph
