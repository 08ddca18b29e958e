// sg: exact singularity and nullity analysis of graphs.
//
// Exit codes: 0 success, 1 internal inconsistency (two routes disagree),
// 2 input error, 3 certificate verification failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "singraph/errors.hpp"
#include "singraph/report.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sg::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw sg::InputError(path + ": " + e.what());
  }
}

// "group" may be inline or a path relative to the action file.
sg::GroupAction read_action(const std::string& path) {
  json doc = read_json(path);
  if (doc.is_object() && doc.contains("group") && doc["group"].is_string()) {
    const std::filesystem::path ref = std::filesystem::path(path).parent_path() / doc["group"].get<std::string>();
    doc["group"] = read_json(ref.string());
  }
  return sg::action_from_json(doc);
}

sg::Graph read_graph(const std::string& path) {
  try {
    return sg::parse_graph(read_file(path));
  } catch (const sg::ParseError& e) {
    throw sg::InputError(path + ": " + e.what());
  }
}

std::vector<std::size_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || item[0] == '-')
      throw sg::InputError(std::string(flag) + ": \"" + item + "\" is not a non-negative integer");
    out.push_back(v);
  }
  if (out.empty()) throw sg::InputError(std::string(flag) + ": empty list");
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw sg::InputError("--n-range must look like A..B");
  const auto a = parse_list(text.substr(0, dots), "--n-range");
  const auto b = parse_list(text.substr(dots + 2), "--n-range");
  if (a.size() != 1 || b.size() != 1) throw sg::InputError("--n-range must look like A..B");
  return {a[0], b[0]};
}

void emit(json report, const sg::Diagnostics& diag, bool timing, std::chrono::steady_clock::time_point start) {
  if (timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = {{"elapsed_ms", ms}};
  }
  std::cout << report.dump(2) << '\n';
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& f : diag.findings) std::cerr << "finding: " << f << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact singularity and nullity analysis of graphs"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Append wall-clock timing to the report");

  std::string graph_file, group_file, hset, chartable_file, action_file, verify_file, range, family = "circulant",
                                                                                          csv_file;
  std::size_t n = 0, moment_depth = 0;
  std::string hstar;
  bool spectrum = false, primes_only = false, force = false;

  auto* nullity_cmd = app.add_subcommand("nullity", "Nullity by exact rank, with a balance certificate");
  nullity_cmd->add_option("--graph", graph_file, "Edge-list file")->required();

  auto* circ_cmd = app.add_subcommand("circulant", "Circulant nullity by cyclotomic divisibility");
  circ_cmd->add_option("--n", n, "Group order")->required();
  circ_cmd->add_option("--hstar", hstar, "Comma-separated exponents, closed under m -> n-m")->required();
  circ_cmd->add_flag("--spectrum", spectrum, "Include exact eigenvalues");

  auto* cay_cmd = app.add_subcommand("cayley", "Cayley graph analysis over a group table");
  cay_cmd->add_option("--group", group_file, "Group JSON file")->required();
  cay_cmd->add_option("--hset", hset, "Comma-separated element indices")->required();
  cay_cmd->add_option("--chartable", chartable_file, "Character table JSON file");

  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive circulant sweep");
  sweep_cmd->add_option("--family", family, "Graph family (circulant)");
  sweep_cmd->add_option("--n-range", range, "Range A..B")->required();
  sweep_cmd->add_flag("--primes-only", primes_only, "Only prime n");
  sweep_cmd->add_flag("--force", force, "Allow B above the guardrail");
  sweep_cmd->add_option("--csv", csv_file, "Write the per-instance table to this file");

  auto* tau_cmd = app.add_subcommand("tau", "Spectrum from a transitive group of automorphisms");
  tau_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  tau_cmd->add_option("--action", action_file, "Action JSON file")->required();
  tau_cmd->add_option("--chartable", chartable_file, "Character table JSON file")->required();
  tau_cmd->add_option("--moments", moment_depth, "Moment depth when not multiplicity free");

  auto* cert_cmd = app.add_subcommand("certify", "Extract or verify a balance certificate");
  cert_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  cert_cmd->add_option("--verify", verify_file, "Certificate JSON file to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  sg::Diagnostics diag;
  try {
    if (*nullity_cmd) {
      emit(sg::analyze_nullity(read_graph(graph_file), diag), diag, timing, start);
    } else if (*circ_cmd) {
      const sg::CirculantSpec spec(n, parse_list(hstar, "--hstar"));
      emit(sg::analyze_circulant(spec, spectrum, diag), diag, timing, start);
    } else if (*cay_cmd) {
      const sg::FiniteGroup g = sg::group_from_json(read_json(group_file));
      std::optional<sg::CharacterTable> table;
      if (!chartable_file.empty()) table = sg::parse_character_table(read_json(chartable_file), g);
      emit(sg::analyze_cayley(g, sg::GroupSubset(parse_list(hset, "--hset")), table, diag), diag, timing, start);
    } else if (*sweep_cmd) {
      if (family != "circulant") throw sg::InputError("--family: only \"circulant\" is supported");
      sg::SweepOptions opts;
      std::tie(opts.from, opts.to) = parse_range(range);
      opts.primes_only = primes_only;
      opts.force = force;
      if (const char* env = std::getenv("SG_MAX_N")) opts.max_n = parse_list(env, "SG_MAX_N").at(0);
      auto result = sg::sweep_circulants(opts, diag);
      if (csv_file.empty()) {
        std::vector<std::string> rows;
        std::stringstream ss(result.csv);
        std::string line;
        while (std::getline(ss, line)) rows.push_back(line);
        result.summary["csv"] = rows;
      } else {
        std::ofstream out(csv_file, std::ios::binary);
        if (!out) throw sg::InputError("cannot write " + csv_file);
        out << result.csv;
      }
      emit(result.summary, diag, timing, start);
    } else if (*tau_cmd) {
      const sg::Graph g = read_graph(graph_file);
      const sg::GroupAction action = read_action(action_file);
      const sg::CharacterTable table = sg::parse_character_table(read_json(chartable_file), action.group());
      emit(sg::analyze_tau(g, action, table, moment_depth, diag), diag, timing, start);
    } else if (*cert_cmd) {
      const sg::Graph g = read_graph(graph_file);
      std::optional<sg::BalanceCertificate> cert;
      if (!verify_file.empty()) cert = sg::certificate_from_json(read_json(verify_file));
      const json report = sg::analyze_certify(g, cert, diag);
      emit(report, diag, timing, start);
      if (cert && !report["verified"].get<bool>()) {
        std::cerr << "error: certificate does not satisfy the balance condition\n";
        return 3;
      }
    }
  } catch (const sg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sg::CertificateRejected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const sg::InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
