#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "snfgraph/int_matrix.hpp"

namespace snfgraph {

struct UnimodularPair {
  IntMatrix left;   // U
  IntMatrix right;  // V
};

/// Smith normal form: factors s_1 | s_2 | ... (every integer divides 0),
/// all nonnegative. When transforms are present, left * A * right equals
/// the diagonal matrix of factors.
struct SnfResult {
  std::vector<BigInt> factors;
  std::optional<UnimodularPair> transforms;
};

/// Delta_0 .. Delta_n; Delta_0 = 1 and Delta_i is the gcd of all i x i
/// minors (0 when they all vanish).
struct DeterminantalDivisors {
  std::vector<BigInt> deltas;

  /// s_i = Delta_i / Delta_{i-1}, or 0 once Delta_i vanishes.
  std::vector<BigInt> invariant_factors() const;
};

struct SnfOptions {
  bool want_transforms = false;
  /// The gcd/lcm pass over the diagonal. Only turned off to exercise the
  /// divisibility checks of the verifier.
  bool enforce_divisibility_chain = true;
};

/// Works on any rectangular matrix; factors has min(rows, cols) entries.
SnfResult smith_normal_form(const IntMatrix& m, const SnfOptions& options = {});

inline SnfResult smith_normal_form(const IntMatrix& m, bool want_transforms) {
  return smith_normal_form(m, SnfOptions{.want_transforms = want_transforms});
}

std::vector<BigInt> invariant_factors(const IntMatrix& m);

inline constexpr std::size_t kMaxDivisorOrder = 9;

/// Brute-force gcd over every square minor. Square input only, at most
/// kMaxDivisorOrder rows; std::invalid_argument otherwise.
DeterminantalDivisors determinantal_divisors(const IntMatrix& m);

/// Every factor divides its successor and none is negative.
bool satisfies_divisibility_chain(const std::vector<BigInt>& factors);

}  // namespace snfgraph
