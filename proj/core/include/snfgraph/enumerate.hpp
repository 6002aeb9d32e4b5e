#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "snfgraph/analysis.hpp"
#include "snfgraph/canonical.hpp"
#include "snfgraph/graph.hpp"

namespace snfgraph {

struct EnumerationOptions {
  /// Worker threads; 0 means default_job_count().
  unsigned jobs = 0;
  /// Order 9 (261080 classes) is slow and must be requested explicitly.
  bool allow_order_nine = false;
};

/// SNFGRAPH_JOBS if set to a positive integer, else the hardware thread count.
unsigned default_job_count();

/// One canonical form per isomorphism class of connected graphs on n
/// vertices, in ascending order. Grows every connected class on n-1
/// vertices by one vertex with a nonempty neighbourhood.
std::vector<CanonicalForm> enumerate_connected_forms(std::uint32_t n,
                                                     const EnumerationOptions& options = {});

std::vector<Graph> enumerate_connected(std::uint32_t n, const EnumerationOptions& options = {});

/// Independent route: every labeled edge mask, filtered and deduplicated.
/// Only for n <= 7.
std::vector<CanonicalForm> enumerate_connected_brute_force(std::uint32_t n);

enum class Claim {
  S3Bound,
  EqNSet,
  EqN1Set,
  EqN2Set,
  EqN3Set,
  LemmaS2,
  DiameterS3,
  Chain,
  MatrixTree,
};

std::string_view claim_name(Claim c);

struct ViolationRecord {
  CanonicalForm form;
  Claim claim = Claim::S3Bound;
  std::string details;

  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

struct EnumerationSummary {
  std::uint32_t n = 0;
  std::uint64_t total_connected = 0;
  /// s3 value -> number of classes (K_n excluded).
  std::map<std::uint64_t, std::uint64_t> s3_histogram;
  std::map<S3Class, std::vector<CanonicalForm>> witnesses;
  std::vector<ViolationRecord> violations;

  std::size_t witness_count(S3Class c) const;

  friend bool operator==(const EnumerationSummary&, const EnumerationSummary&) = default;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  /// Passed to every SNF computation.
  SnfOptions snf;
};

/// Checks s3 <= n and the four set characterizations at order n (5..8, or
/// 9 with allow_order_nine). Violations are recorded, never thrown.
EnumerationSummary verify_theorem(std::uint32_t n, const VerifyOptions& options = {});

/// Lemma on s2, diameter > 2 => s3 = 1, divisibility chain and matrix-tree
/// equality over every connected class at order n (3..8, or 9 on opt-in).
std::vector<ViolationRecord> verify_side_claims(std::uint32_t n,
                                                const VerifyOptions& options = {});

}  // namespace snfgraph
