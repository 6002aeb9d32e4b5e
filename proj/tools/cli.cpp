#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "snfgraph/analysis.hpp"
#include "snfgraph/enumerate.hpp"
#include "snfgraph/families.hpp"
#include "snfgraph/io.hpp"
#include "snfgraph/report.hpp"
#include "snfgraph/smith.hpp"

namespace snfgraph::cli {

namespace {

// Raised for problems with the data (as opposed to the command line).
struct InputFailure {
  std::string message;
};

struct InputSpec {
  std::string path;
  std::string format;
  bool lenient = false;
};

void add_input_options(CLI::App& cmd, InputSpec& spec) {
  cmd.add_option("input", spec.path, "graph6 (.g6) or edge-list (.el) file; '-' for stdin")
      ->required();
  cmd.add_option("--format", spec.format, "Override input format detection")
      ->check(CLI::IsMember({"g6", "graph6", "edges", "el"}));
  cmd.add_flag("--lenient", spec.lenient, "Report and skip malformed records");
}

void for_each_input(const InputSpec& spec, std::ostream& err,
                    const std::function<void(const GraphRecord&)>& sink) {
  InputFormat format;
  try {
    if (!spec.format.empty()) {
      format = format_from_name(spec.format);
    } else if (spec.path == "-") {
      format = InputFormat::Graph6;
    } else {
      format = format_from_extension(spec.path);
    }
  } catch (const std::invalid_argument& e) {
    throw InputFailure{e.what()};
  }

  ReadOptions options;
  options.lenient = spec.lenient;
  options.on_error = [&](const ParseError& e) {
    err << "warning: " << spec.path << ": " << e.what() << " (skipped)\n";
  };

  auto read = [&](std::istream& in) {
    try {
      read_graphs(in, format, spec.path, sink, options);
    } catch (const ParseError& e) {
      throw InputFailure{spec.path + ": " + e.what()};
    }
  };
  if (spec.path == "-") {
    read(std::cin);
    return;
  }
  std::ifstream in(spec.path);
  if (!in) throw InputFailure{"cannot open '" + spec.path + "'"};
  read(in);
}

std::string factors_line(const std::vector<BigInt>& f) { return join_factors(f, " "); }

void require_connected(const GraphRecord& record) {
  if (!is_connected(record.graph)) {
    throw InputFailure{record.source + ": graph is disconnected"};
  }
}

int run_verify(std::uint32_t n_min, std::uint32_t n_max, unsigned jobs, bool allow_nine,
               const std::string& json_path, const std::string& csv_path, std::ostream& out,
               std::ostream& err) {
  const std::uint32_t limit = allow_nine ? 9 : 8;
  if (n_min < 3 || n_max > limit || n_min > n_max) {
    err << "error: verify needs 3 <= n <= max-n <= " << limit
        << (allow_nine ? "" : " (pass --allow-n9 for order 9)") << "\n";
    return kExitUsage;
  }
  VerifyOptions options;
  options.enumeration.jobs = jobs;
  options.enumeration.allow_order_nine = allow_nine;

  std::vector<EnumerationSummary> summaries;
  auto json = nlohmann::json::object();
  json["summaries"] = nlohmann::json::array();
  bool any_violation = false;
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    EnumerationSummary summary;
    if (n >= 5) {
      summary = verify_theorem(n, options);
    } else {
      summary.n = n;
      summary.total_connected = enumerate_connected_forms(n, options.enumeration).size();
    }
    const auto side = verify_side_claims(n, options);
    any_violation = any_violation || !summary.violations.empty() || !side.empty();

    out << "n=" << n << " connected_classes=" << summary.total_connected;
    if (n >= 5) {
      out << " EQ_N=" << summary.witness_count(S3Class::EqN)
          << " EQ_N_MINUS_1=" << summary.witness_count(S3Class::EqNMinus1)
          << " EQ_N_MINUS_2=" << summary.witness_count(S3Class::EqNMinus2)
          << " EQ_N_MINUS_3=" << summary.witness_count(S3Class::EqNMinus3);
    }
    out << " violations=" << summary.violations.size() + side.size() << "\n";
    if (n >= 5) {
      out << "  s3 histogram:";
      for (const auto& [value, count] : summary.s3_histogram) out << ' ' << value << ':' << count;
      out << "\n";
    }
    for (const auto& v : summary.violations) {
      out << "  VIOLATION " << claim_name(v.claim) << ' ' << emit_graph6(v.form.to_graph())
          << ": " << v.details << "\n";
    }
    for (const auto& v : side) {
      out << "  VIOLATION " << claim_name(v.claim) << ' ' << emit_graph6(v.form.to_graph())
          << ": " << v.details << "\n";
    }
    json["summaries"].push_back(to_json(summary, side));
    summaries.push_back(std::move(summary));
  }
  json["ok"] = !any_violation;

  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) {
      err << "error: cannot write '" << json_path << "'\n";
      return kExitInputError;
    }
    f << json.dump(2) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) {
      err << "error: cannot write '" << csv_path << "'\n";
      return kExitInputError;
    }
    write_histogram_csv(f, summaries);
  }
  return any_violation ? kExitViolations : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smith normal forms and third invariant factors of graph Laplacians",
               "snfgraph"};
  app.require_subcommand(1);

  InputSpec snf_in;
  bool with_divisors = false;
  auto* snf_cmd = app.add_subcommand("snf", "Print Laplacian invariant factors");
  add_input_options(*snf_cmd, snf_in);
  snf_cmd->add_flag("--divisors", with_divisors, "Also print determinantal divisors (n <= 9)");

  InputSpec classify_in;
  bool classify_json = false;
  bool classify_csv = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify graphs by s3");
  add_input_options(*classify_cmd, classify_in);
  auto* json_flag = classify_cmd->add_flag("--json", classify_json, "JSON array output");
  classify_cmd->add_flag("--csv", classify_csv, "CSV output")->excludes(json_flag);

  InputSpec trees_in;
  auto* trees_cmd = app.add_subcommand("trees", "Print spanning-tree counts");
  add_input_options(*trees_cmd, trees_in);

  std::string family_name_arg;
  std::uint32_t family_n = 0;
  bool as_g6 = false;
  bool as_edges = false;
  auto* family_cmd = app.add_subcommand("family", "Emit a named graph family");
  family_cmd->add_option("name", family_name_arg, "Family name")->required();
  family_cmd->add_option("n", family_n, "Vertex count")->required();
  auto* g6_flag = family_cmd->add_flag("--g6", as_g6, "graph6 output (default)");
  family_cmd->add_flag("--edges", as_edges, "Edge-list output")->excludes(g6_flag);

  std::uint32_t verify_n = 0;
  std::optional<std::uint32_t> verify_max_n;
  unsigned verify_jobs = 0;
  bool allow_nine = false;
  std::string verify_json;
  std::string verify_csv;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check the s3 characterization");
  verify_cmd->add_option("--n", verify_n, "Order to verify")->required();
  verify_cmd->add_option("--max-n", verify_max_n, "Verify every order from --n to --max-n");
  verify_cmd->add_option("--jobs", verify_jobs, "Worker threads (default: $SNFGRAPH_JOBS or all cores)");
  verify_cmd->add_flag("--allow-n9", allow_nine, "Permit order 9 (slow)");
  verify_cmd->add_option("--json", verify_json, "Write the JSON summary to this file");
  verify_cmd->add_option("--csv", verify_csv, "Write the s3 histogram as CSV to this file");

  InputSpec convert_in;
  std::string convert_to;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph6 and edge lists");
  add_input_options(*convert_cmd, convert_in);
  convert_cmd->add_option("--to", convert_to, "Target format")
      ->required()
      ->check(CLI::IsMember({"g6", "edges"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*snf_cmd) {
      for_each_input(snf_in, err, [&](const GraphRecord& r) {
        const IntMatrix l = laplacian(r.graph);
        out << factors_line(invariant_factors(l)) << "\n";
        if (with_divisors) {
          if (r.graph.order() <= kMaxDivisorOrder) {
            out << "divisors: " << factors_line(determinantal_divisors(l).deltas) << "\n";
          } else {
            out << "divisors: unavailable for n > " << kMaxDivisorOrder << "\n";
          }
        }
      });
    } else if (*classify_cmd) {
      auto reports = nlohmann::json::array();
      if (classify_csv) out << kClassificationCsvHeader << "\n";
      for_each_input(classify_in, err, [&](const GraphRecord& r) {
        require_connected(r);
        const auto report = classify_s3(r.graph);
        const auto g6 = emit_graph6(r.graph);
        if (classify_json) {
          reports.push_back(to_json(report, g6));
        } else if (classify_csv) {
          out << classification_csv_row(report, r.source, g6) << "\n";
        } else {
          out << g6 << " n=" << report.profile.n << " factors=("
              << join_factors(report.profile.factors, ",") << ") class="
              << s3_class_name(report.s3_class) << " family="
              << (report.matched_family ? family_name(*report.matched_family) : "-")
              << " check=" << (report.structural_check_passed ? "pass" : "FAIL") << "\n";
        }
      });
      if (classify_json) out << reports.dump(2) << "\n";
    } else if (*trees_cmd) {
      for_each_input(trees_in, err, [&](const GraphRecord& r) {
        require_connected(r);
        out << spanning_tree_count(r.graph).get_str() << "\n";
      });
    } else if (*family_cmd) {
      Graph g;
      try {
        g = family(family_name_arg, family_n);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      out << (as_edges ? emit_edge_list(g) : emit_graph6(g) + "\n");
    } else if (*verify_cmd) {
      return run_verify(verify_n, verify_max_n.value_or(verify_n), verify_jobs, allow_nine,
                        verify_json, verify_csv, out, err);
    } else if (*convert_cmd) {
      for_each_input(convert_in, err, [&](const GraphRecord& r) {
        out << (convert_to == "edges" ? emit_edge_list(r.graph) : emit_graph6(r.graph) + "\n");
      });
    }
  } catch (const InputFailure& e) {
    err << "error: " << e.message << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace snfgraph::cli
