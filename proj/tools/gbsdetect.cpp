// gbsdetect: decide one-way LOCC distinguishability of generalized-Bell-state
// sets, enumerate their detectors, and reproduce the shipped reference tables.
//
// Exit codes: 0 analysis completed (any verdict), 2 parse error, 3 domain
// error, 4 reference-table mismatch.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "gbs/report.hpp"

namespace {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<gbs::Gpm> parse_set_spec(const std::string& spec) {
  std::vector<gbs::Gpm> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw ParseError("malformed pair '" + item + "' (expected \"m,n\")");
    try {
      out.push_back({std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
    } catch (const std::exception&) {
      throw ParseError("malformed pair '" + item + "' (expected integers)");
    }
  }
  if (out.empty()) throw ParseError("empty set specification");
  return out;
}

struct Input {
  int d = 0;
  std::vector<gbs::Gpm> set;
};

Input load_input(int d_flag, const std::string& set_spec, const std::string& file) {
  Input in;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw ParseError("cannot open input file: " + file);
    nlohmann::json j;
    try {
      f >> j;
      in.d = j.at("d").get<int>();
      for (const auto& pair : j.at("set")) in.set.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad input document: ") + e.what());
    }
  } else {
    if (d_flag == 0 || set_spec.empty())
      throw ParseError("provide either --file or both --d and --set");
    in.d = d_flag;
    in.set = parse_set_spec(set_spec);
  }
  return in;
}

int run_analyze(const Input& in, const gbs::AnalyzeOptions& opts, bool as_json, bool as_csv) {
  const gbs::GbsSet set(gbs::Dimension{in.d}, in.set);
  const auto report = gbs::analyze(set, opts);
  if (as_json) {
    std::cout << gbs::to_json(report).dump(2) << "\n";
  } else if (as_csv) {
    std::cout << gbs::to_csv(report);
  } else {
    std::cout << gbs::to_text(report);
  }
  return 0;
}

int run_tables(const std::string& id_arg, const std::string& data_dir, bool as_json) {
  namespace corpus = gbs::corpus;
  std::vector<corpus::TableId> ids;
  if (id_arg == "all") {
    ids = corpus::all_tables();
  } else if (auto id = corpus::parse_table_id(id_arg)) {
    ids = {*id};
  } else {
    throw ParseError("unknown table '" + id_arg + "' (expected I..VI or all)");
  }
  const std::filesystem::path dir =
      data_dir.empty() ? corpus::default_data_dir() : std::filesystem::path(data_dir);

  bool all_ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto id : ids) {
    const auto diff = corpus::reproduce_table(id, dir);
    all_ok = all_ok && diff.ok();
    if (as_json) {
      nlohmann::json mism = nlohmann::json::array();
      for (const auto& m : diff.mismatches)
        mism.push_back({{"row", m.row}, {"col", m.col}, {"expected", m.expected}, {"actual", m.actual}});
      out.push_back({{"table", corpus::to_string(id)},
                     {"cells", diff.cells_total},
                     {"mismatches", mism}});
    } else {
      std::cout << "table " << corpus::to_string(id) << ": "
                << diff.cells_total - static_cast<int>(diff.mismatches.size()) << "/"
                << diff.cells_total << " cells match\n";
      for (const auto& m : diff.mismatches)
        std::cout << "  mismatch [" << m.row << "][" << m.col << "]: expected '" << m.expected
                  << "', recomputed '" << m.actual << "'\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detectors and one-way LOCC verdicts for generalized-Bell-state sets"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze one GBS set");
  int d_flag = 0;
  std::string set_spec, file;
  bool as_json = false, as_csv = false;
  gbs::AnalyzeOptions opts;
  analyze->add_option("--d", d_flag, "dimension d >= 2");
  analyze->add_option("--set", set_spec, "set as \"m,n;m,n;...\"");
  analyze->add_option("--file", file, "JSON input {\"d\": int, \"set\": [[m,n],...]}");
  analyze->add_flag("--verify", opts.verify, "verify the protocol on the detector eigenbasis");
  analyze->add_flag("--search", opts.search, "run the feasibility search for a witness state");
  analyze->add_option("--restarts", opts.restarts, "feasibility restarts")->capture_default_str();
  analyze->add_option("--iters", opts.iters, "iterations per restart")->capture_default_str();
  analyze->add_option("--seed", opts.seed, "seed for numeric sections")->capture_default_str();
  analyze->add_option("--tol", opts.tol, "feasibility success threshold")->capture_default_str();
  analyze->add_flag("--assume-small-sets,!--no-assume-small-sets", opts.assume_small_sets,
                    "use the |S| <= 3 shortcut (default on)");
  analyze->add_flag("--json", as_json, "machine-readable JSON output");
  analyze->add_flag("--csv", as_csv, "single-row CSV output");

  // tables
  auto* tables = app.add_subcommand("tables", "recompute shipped reference tables and diff");
  std::string table_id = "all", data_dir;
  bool tables_json = false;
  tables->add_option("--id", table_id, "table id I..VI or all")->capture_default_str();
  tables->add_option("--data-dir", data_dir, "override the data directory");
  tables->add_flag("--json", tables_json, "machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(load_input(d_flag, set_spec, file), opts, as_json, as_csv);
    return run_tables(table_id, data_dir, tables_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
