#include "snfgraph/analysis.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "snfgraph/canonical.hpp"

namespace snfgraph {

namespace {

constexpr std::array<std::pair<S3Class, std::string_view>, 7> kClassNames{{
    {S3Class::EqN, "EQ_N"},
    {S3Class::EqNMinus1, "EQ_N_MINUS_1"},
    {S3Class::EqNMinus2, "EQ_N_MINUS_2"},
    {S3Class::EqNMinus3, "EQ_N_MINUS_3"},
    {S3Class::Other, "OTHER"},
    {S3Class::CompleteGraph, "COMPLETE_GRAPH"},
    {S3Class::NotApplicable, "NOT_APPLICABLE"},
}};

constexpr std::array kCharacterized{S3Class::EqN, S3Class::EqNMinus1, S3Class::EqNMinus2,
                                    S3Class::EqNMinus3};

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw std::invalid_argument(std::string(what) + " requires a connected graph");
  }
}

BigInt reduced_laplacian_determinant(const Graph& g) {
  const IntMatrix l = laplacian(g);
  std::vector<std::size_t> keep;
  for (std::size_t i = 1; i < l.rows(); ++i) keep.push_back(i);
  return determinant(submatrix(l, keep, keep));
}

BigInt checked_tree_count(const Graph& g, const std::vector<BigInt>& factors) {
  BigInt product = 1;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) product *= factors[i];
  const BigInt cofactor = reduced_laplacian_determinant(g);
  if (product != cofactor) {
    throw InternalInvariantError("spanning tree count mismatch: invariant factors give " +
                                 product.get_str() + ", reduced Laplacian determinant gives " +
                                 cofactor.get_str());
  }
  return product;
}

}  // namespace

std::string_view s3_class_name(S3Class c) {
  for (const auto& [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "UNKNOWN";
}

std::optional<S3Class> s3_class_from_name(std::string_view name) {
  for (const auto& [cls, n] : kClassNames) {
    if (n == name) return cls;
  }
  return std::nullopt;
}

bool is_characterized(S3Class c) {
  return c == S3Class::EqN || c == S3Class::EqNMinus1 || c == S3Class::EqNMinus2 ||
         c == S3Class::EqNMinus3;
}

InvariantProfile invariant_profile(const Graph& g, const ProfileOptions& options) {
  require_connected(g, "invariant_profile");
  InvariantProfile p;
  p.n = g.order();
  const IntMatrix l = laplacian(g);
  p.factors = smith_normal_form(l, options.snf).factors;
  if (options.with_divisors && p.n <= kMaxDivisorOrder) {
    p.deltas = determinantal_divisors(l).deltas;
  }
  p.tree_count = checked_tree_count(g, p.factors);
  p.diameter = diameter(g);
  if (p.n >= 2) p.s2 = p.factors[1];
  if (p.n >= 3) p.s3 = p.factors[2];
  return p;
}

BigInt spanning_tree_count(const Graph& g) {
  require_connected(g, "spanning_tree_count");
  return checked_tree_count(g, invariant_factors(laplacian(g)));
}

bool s2_is_nontrivial(const Graph& g) {
  require_connected(g, "s2_is_nontrivial");
  if (g.order() < 3) throw std::invalid_argument("s2_is_nontrivial requires n >= 3");
  return invariant_factors(laplacian(g))[1] != 1;
}

std::vector<Family> prescribed_families(S3Class c, std::uint32_t n) {
  if (n < 5) return {};
  switch (c) {
    case S3Class::EqN:
      return {Family::CompleteMinusEdge};
    case S3Class::EqNMinus1:
      return {Family::PendantComplete};
    case S3Class::EqNMinus2:
      if (n == 5) return {Family::CompleteMinus2e, Family::CompleteMinusC4};
      return {};
    case S3Class::EqNMinus3:
      if (n == 5) return {Family::CompleteBipartite23, Family::CompleteMinusTriangle};
      if (n == 6) return {Family::CompleteMinusTriangle, Family::CompleteBipartite33};
      if (n == 7) return {Family::CompleteMinus2Triangles, Family::CompleteMinusK33};
      return {};
    default:
      return {};
  }
}

S3Class s3_value_class(const Graph& g, const BigInt& s3) {
  const std::uint32_t n = g.order();
  if (n < 5 || !is_connected(g)) return S3Class::NotApplicable;
  if (is_complete(g)) return S3Class::CompleteGraph;
  if (s3 == n) return S3Class::EqN;
  if (s3 == n - 1) return S3Class::EqNMinus1;
  if (s3 == n - 2) return S3Class::EqNMinus2;
  if (s3 == n - 3) return S3Class::EqNMinus3;
  return S3Class::Other;
}

ClassificationReport classify_s3(const Graph& g, const ProfileOptions& options) {
  ClassificationReport report;
  report.profile = invariant_profile(g, options);
  const std::uint32_t n = g.order();
  if (n < 5) {
    report.s3_class = S3Class::NotApplicable;
    report.structural_check_passed = true;
    return report;
  }
  report.s3_class = s3_value_class(g, *report.profile.s3);
  if (report.s3_class == S3Class::CompleteGraph) {
    report.structural_check_passed = true;
    return report;
  }

  // Identify the graph by isomorphism alone, without looking at s3.
  S3Class structural = S3Class::Other;
  for (S3Class c : kCharacterized) {
    for (Family f : prescribed_families(c, n)) {
      if (are_isomorphic(g, family(f, n))) {
        structural = c;
        report.matched_family = f;
        break;
      }
    }
    if (report.matched_family) break;
  }
  report.structural_check_passed = structural == report.s3_class;
  return report;
}

std::vector<BigInt> expected_snf_for_family(Family f, std::uint32_t n) {
  auto repeat = [](std::vector<BigInt>& v, std::uint32_t count, const BigInt& value) {
    v.insert(v.end(), count, value);
  };
  std::vector<BigInt> out;
  switch (f) {
    case Family::Complete:
      if (n < 2) throw std::invalid_argument("complete closed form needs n >= 2");
      out.emplace_back(1);
      repeat(out, n - 2, BigInt(n));
      break;
    case Family::CompleteMinusEdge:
      if (n < 5) throw std::invalid_argument("complete_minus_edge closed form needs n >= 5");
      out = {1, 1};
      repeat(out, n - 4, BigInt(n));
      out.emplace_back(BigInt(n) * (n - 2));
      break;
    case Family::PendantComplete:
      if (n < 5) throw std::invalid_argument("pendant_complete closed form needs n >= 5");
      out = {1, 1};
      repeat(out, n - 3, BigInt(n - 1));
      break;
    case Family::Case7:
      if (n < 5) throw std::invalid_argument("case7_family closed form needs n >= 5");
      out = {1, 1, 1};
      repeat(out, n - 5, BigInt(n - 1));
      out.emplace_back(BigInt(2) * (n - 1) * (n - 2));
      break;
    default:
      throw std::invalid_argument("no closed-form Smith normal form for family " +
                                  std::string(family_name(f)));
  }
  out.emplace_back(0);
  return out;
}

}  // namespace snfgraph
