#include "snfgraph/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "parallel.hpp"

namespace snfgraph {

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

constexpr std::array kCharacterized{S3Class::EqN, S3Class::EqNMinus1, S3Class::EqNMinus2,
                                    S3Class::EqNMinus3};

unsigned resolve_jobs(unsigned jobs) { return jobs ? jobs : default_job_count(); }

void check_range(std::uint32_t n, std::uint32_t lo, const EnumerationOptions& options,
                 const char* what) {
  const std::uint32_t hi = options.allow_order_nine ? 9 : 8;
  if (n < lo || n > hi) {
    std::string msg = std::string(what) + " supports " + std::to_string(lo) + " <= n <= " +
                      std::to_string(hi) + ", got " + std::to_string(n);
    if (n == 9) msg += " (order 9 must be enabled explicitly)";
    throw std::invalid_argument(msg);
  }
}

Claim set_claim(S3Class c) {
  switch (c) {
    case S3Class::EqN:
      return Claim::EqNSet;
    case S3Class::EqNMinus1:
      return Claim::EqN1Set;
    case S3Class::EqNMinus2:
      return Claim::EqN2Set;
    default:
      return Claim::EqN3Set;
  }
}

// Adds one vertex adjacent to every nonempty subset of the parent's vertices.
void augment(const CanonicalForm& parent, FormSet& out) {
  const Graph base = parent.to_graph();
  const std::uint32_t k = base.order();
  std::vector<std::uint64_t> rows = base.rows();
  rows.push_back(0);
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    std::vector<std::uint64_t> child = rows;
    child[k] = subset;
    for (std::uint64_t s = subset; s; s &= s - 1) {
      child[static_cast<std::size_t>(std::countr_zero(s))] |= std::uint64_t{1} << k;
    }
    out.insert(canonical_form(Graph::from_rows(std::move(child))));
  }
}

std::vector<CanonicalForm> sorted(const FormSet& set) {
  std::vector<CanonicalForm> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

void sort_violations(std::vector<ViolationRecord>& v) {
  std::sort(v.begin(), v.end(), [](const ViolationRecord& a, const ViolationRecord& b) {
    return std::tie(a.form, a.claim, a.details) < std::tie(b.form, b.claim, b.details);
  });
}

std::string factors_text(const std::vector<BigInt>& factors) {
  std::string out = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    out += factors[i].get_str();
  }
  return out + ")";
}

struct ShardResult {
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::map<S3Class, std::vector<CanonicalForm>> witnesses;
  std::vector<ViolationRecord> violations;
};

template <typename Fn>
std::vector<ShardResult> run_shards(const std::vector<CanonicalForm>& forms, unsigned jobs,
                                    Fn&& per_form) {
  const auto ranges = detail::shard_ranges(forms.size(), std::size_t{jobs} * 8);
  std::vector<ShardResult> results(ranges.size());
  detail::parallel_for(ranges.size(), jobs, [&](std::size_t s) {
    for (std::size_t i = ranges[s].first; i < ranges[s].second; ++i) {
      per_form(forms[i], results[s]);
    }
  });
  return results;
}

}  // namespace

unsigned default_job_count() {
  if (const char* env = std::getenv("SNFGRAPH_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<CanonicalForm> enumerate_connected_forms(std::uint32_t n,
                                                     const EnumerationOptions& options) {
  check_range(n, 1, options, "enumerate_connected");
  const unsigned jobs = resolve_jobs(options.jobs);
  // Deleting a non-cut vertex (a leaf of any spanning tree) from a connected
  // graph leaves it connected, so every class on k vertices has a parent on
  // k - 1 vertices.
  std::vector<CanonicalForm> level{CanonicalForm{1, 0}};
  for (std::uint32_t k = 2; k <= n; ++k) {
    const auto ranges = detail::shard_ranges(level.size(), std::size_t{jobs} * 8);
    std::vector<FormSet> partial(ranges.size());
    detail::parallel_for(ranges.size(), jobs, [&](std::size_t s) {
      for (std::size_t i = ranges[s].first; i < ranges[s].second; ++i) {
        augment(level[i], partial[s]);
      }
    });
    FormSet merged;
    for (auto& p : partial) merged.merge(p);
    level = sorted(merged);
  }
  return level;
}

std::vector<Graph> enumerate_connected(std::uint32_t n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  for (const auto& form : enumerate_connected_forms(n, options)) out.push_back(form.to_graph());
  return out;
}

std::vector<CanonicalForm> enumerate_connected_brute_force(std::uint32_t n) {
  if (n < 1 || n > 7) throw std::invalid_argument("brute-force enumeration supports 1 <= n <= 7");
  const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;
  FormSet seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = CanonicalForm{n, mask}.to_graph();
    if (is_connected(g)) seen.insert(canonical_form(g));
  }
  return sorted(seen);
}

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::S3Bound:
      return "S3_BOUND";
    case Claim::EqNSet:
      return "EQ_N_SET";
    case Claim::EqN1Set:
      return "EQ_N1_SET";
    case Claim::EqN2Set:
      return "EQ_N2_SET";
    case Claim::EqN3Set:
      return "EQ_N3_SET";
    case Claim::LemmaS2:
      return "LEMMA_S2";
    case Claim::DiameterS3:
      return "DIAMETER_S3";
    case Claim::Chain:
      return "CHAIN";
    case Claim::MatrixTree:
      return "MATRIX_TREE";
  }
  return "UNKNOWN";
}

std::size_t EnumerationSummary::witness_count(S3Class c) const {
  auto it = witnesses.find(c);
  return it == witnesses.end() ? 0 : it->second.size();
}

EnumerationSummary verify_theorem(std::uint32_t n, const VerifyOptions& options) {
  check_range(n, 5, options.enumeration, "verify_theorem");
  const unsigned jobs = resolve_jobs(options.enumeration.jobs);
  const auto forms = enumerate_connected_forms(n, options.enumeration);

  const ProfileOptions profile_options{.with_divisors = false, .snf = options.snf};
  auto results = run_shards(forms, jobs, [&](const CanonicalForm& form, ShardResult& out) {
    const Graph g = form.to_graph();
    if (is_complete(g)) return;
    InvariantProfile profile;
    try {
      profile = invariant_profile(g, profile_options);
    } catch (const InternalInvariantError& e) {
      out.violations.push_back({form, Claim::MatrixTree, e.what()});
      return;
    }
    const BigInt& s3 = *profile.s3;
    if (s3 > n) {
      out.violations.push_back(
          {form, Claim::S3Bound, "s3 = " + s3.get_str() + " exceeds n; factors " +
                                     factors_text(profile.factors)});
    }
    out.histogram[s3.fits_ulong_p() ? s3.get_ui() : ~std::uint64_t{0}]++;
    const S3Class cls = s3_value_class(g, s3);
    if (is_characterized(cls)) out.witnesses[cls].push_back(form);
  });

  EnumerationSummary summary;
  summary.n = n;
  summary.total_connected = forms.size();
  for (S3Class c : kCharacterized) summary.witnesses[c];
  for (auto& r : results) {
    for (const auto& [value, count] : r.histogram) summary.s3_histogram[value] += count;
    for (auto& [cls, list] : r.witnesses) {
      auto& dst = summary.witnesses[cls];
      dst.insert(dst.end(), list.begin(), list.end());
    }
    summary.violations.insert(summary.violations.end(), r.violations.begin(),
                              r.violations.end());
  }

  for (S3Class c : kCharacterized) {
    auto& found = summary.witnesses[c];
    std::sort(found.begin(), found.end());
    std::set<CanonicalForm> prescribed;
    std::map<CanonicalForm, Family> names;
    for (Family f : prescribed_families(c, n)) {
      const auto form = canonical_form(family(f, n));
      prescribed.insert(form);
      names.emplace(form, f);
    }
    const std::set<CanonicalForm> actual(found.begin(), found.end());
    for (const auto& form : actual) {
      if (!prescribed.count(form)) {
        summary.violations.push_back({form, set_claim(c),
                                      std::string("graph has s3 class ") +
                                          std::string(s3_class_name(c)) +
                                          " but is not a prescribed family"});
      }
    }
    for (const auto& form : prescribed) {
      if (!actual.count(form)) {
        summary.violations.push_back({form, set_claim(c),
                                      "prescribed family " + std::string(family_name(names[form])) +
                                          " is missing from class " +
                                          std::string(s3_class_name(c))});
      }
    }
  }
  sort_violations(summary.violations);
  return summary;
}

std::vector<ViolationRecord> verify_side_claims(std::uint32_t n, const VerifyOptions& options) {
  check_range(n, 3, options.enumeration, "verify_side_claims");
  const unsigned jobs = resolve_jobs(options.enumeration.jobs);
  const auto forms = enumerate_connected_forms(n, options.enumeration);

  auto results = run_shards(forms, jobs, [&](const CanonicalForm& form, ShardResult& out) {
    const Graph g = form.to_graph();
    const IntMatrix l = laplacian(g);
    const auto factors = smith_normal_form(l, options.snf).factors;
    const bool complete_graph = is_complete(g);

    if ((factors[1] != 1) != complete_graph) {
      out.violations.push_back({form, Claim::LemmaS2,
                                "s2 = " + factors[1].get_str() +
                                    (complete_graph ? " for K_n" : " for a non-complete graph")});
    }
    const auto diam = diameter(g);
    if (diam > 2 && factors[2] != 1) {
      out.violations.push_back({form, Claim::DiameterS3,
                                "diameter " + std::to_string(diam) + " but s3 = " +
                                    factors[2].get_str()});
    }
    if (!satisfies_divisibility_chain(factors)) {
      out.violations.push_back({form, Claim::Chain, "factors " + factors_text(factors)});
    }
    BigInt product = 1;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) product *= factors[i];
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i < n; ++i) keep.push_back(i);
    const BigInt cofactor = determinant(submatrix(l, keep, keep));
    if (product != cofactor) {
      out.violations.push_back({form, Claim::MatrixTree,
                                "factor product " + product.get_str() + " vs cofactor " +
                                    cofactor.get_str()});
    }
  });

  std::vector<ViolationRecord> violations;
  for (auto& r : results) {
    violations.insert(violations.end(), r.violations.begin(), r.violations.end());
  }
  sort_violations(violations);
  return violations;
}

}  // namespace snfgraph
