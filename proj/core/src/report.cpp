#include "snfgraph/report.hpp"

#include "snfgraph/io.hpp"

namespace snfgraph {

namespace {

nlohmann::json strings(std::span<const BigInt> values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

nlohmann::json optional_string(const std::optional<BigInt>& v) {
  return v ? nlohmann::json(v->get_str()) : nlohmann::json(nullptr);
}

nlohmann::json diameter_json(std::uint32_t d) {
  return d == kInfiniteDiameter ? nlohmann::json(nullptr) : nlohmann::json(d);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string join_factors(std::span<const BigInt> factors, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += sep;
    out += factors[i].get_str();
  }
  return out;
}

nlohmann::json to_json(const InvariantProfile& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["factors"] = strings(p.factors);
  if (p.deltas) j["deltas"] = strings(*p.deltas);
  j["tree_count"] = p.tree_count.get_str();
  j["diameter"] = diameter_json(p.diameter);
  j["s2"] = optional_string(p.s2);
  j["s3"] = optional_string(p.s3);
  return j;
}

nlohmann::json to_json(const ClassificationReport& r, const std::string& graph6) {
  nlohmann::json j = to_json(r.profile);
  j["graph6"] = graph6;
  j["s3_class"] = std::string(s3_class_name(r.s3_class));
  j["matched_family"] = r.matched_family ? nlohmann::json(std::string(family_name(*r.matched_family)))
                                         : nlohmann::json(nullptr);
  j["structural_check_passed"] = r.structural_check_passed;
  return j;
}

nlohmann::json to_json(const ViolationRecord& v) {
  return {{"graph6", emit_graph6(v.form.to_graph())},
          {"claim", std::string(claim_name(v.claim))},
          {"details", v.details}};
}

nlohmann::json to_json(const EnumerationSummary& s,
                       std::span<const ViolationRecord> side_violations) {
  nlohmann::json j;
  j["n"] = s.n;
  j["total_connected"] = s.total_connected;
  auto histogram = nlohmann::json::object();
  for (const auto& [value, count] : s.s3_histogram) histogram[std::to_string(value)] = count;
  j["s3_histogram"] = histogram;
  auto counts = nlohmann::json::object();
  auto witnesses = nlohmann::json::object();
  for (const auto& [cls, forms] : s.witnesses) {
    const std::string key(s3_class_name(cls));
    counts[key] = forms.size();
    auto list = nlohmann::json::array();
    for (const auto& f : forms) list.push_back(emit_graph6(f.to_graph()));
    witnesses[key] = list;
  }
  j["witness_counts"] = counts;
  j["witnesses"] = witnesses;
  auto violations = nlohmann::json::array();
  for (const auto& v : s.violations) violations.push_back(to_json(v));
  j["violations"] = violations;
  auto side = nlohmann::json::array();
  for (const auto& v : side_violations) side.push_back(to_json(v));
  j["side_claim_violations"] = side;
  j["ok"] = s.violations.empty() && side_violations.empty();
  return j;
}

std::string classification_csv_row(const ClassificationReport& r, const std::string& source,
                                   const std::string& graph6) {
  std::string row;
  row += csv_escape(source) + ",";
  row += csv_escape(graph6) + ",";
  row += std::to_string(r.profile.n) + ",";
  row += join_factors(r.profile.factors, " ") + ",";
  row += std::string(s3_class_name(r.s3_class)) + ",";
  row += (r.matched_family ? std::string(family_name(*r.matched_family)) : std::string()) + ",";
  row += r.profile.tree_count.get_str() + ",";
  row += r.structural_check_passed ? "true" : "false";
  return row;
}

void write_histogram_csv(std::ostream& out, std::span<const EnumerationSummary> summaries) {
  out << "n,s3,count\n";
  for (const auto& s : summaries) {
    for (const auto& [value, count] : s.s3_histogram) {
      out << s.n << ',' << value << ',' << count << '\n';
    }
  }
}

}  // namespace snfgraph
