// Command-line front end: construct, spectrum, classify, bounds, scan,
// verify, catalog.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spectral/classify.hpp"
#include "spectral/energy.hpp"
#include "spectral/families.hpp"
#include "spectral/io.hpp"
#include "spectral/recipe.hpp"
#include "spectral/report.hpp"
#include "spectral/survey.hpp"

namespace {

using namespace spectral;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> load_graphs(const std::string& path) {
  std::istringstream in(read_input(path));
  return read_graphs(in);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

Graph resolve_graph(const std::string& text) {
  for (const auto& e : catalog())
    if (e.key == text) return e.build();
  return build_recipe(text);
}

std::vector<std::string> split_checks(const std::string& list) {
  if (list.empty() || list == "all") return check_ids();
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = static_cast<std::size_t>(std::stoul(text));
      return {n, n};
    }
    return {static_cast<std::size_t>(std::stoul(text.substr(0, dots))), static_cast<std::size_t>(std::stoul(text.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw InvalidArgument("order range must look like 2..7, got '" + text + "'");
  }
}

std::string summary_text(const SurveySummary& s, bool with_time) {
  nlohmann::ordered_json j = to_json(s, with_time);
  if (with_time) j["timestamp"] = timestamp();
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral classification of graphs by the shape of their adjacency spectrum"};
  app.require_subcommand(1);
  std::string out_path;
  bool no_timestamp = false;
  app.add_option("-o,--output", out_path, "Write to this file instead of stdout");
  app.add_flag("--no-timestamp", no_timestamp, "Leave timestamps and timings out of reports");

  auto* construct = app.add_subcommand("construct", "Build a graph from a catalog key or recipe");
  std::string recipe, construct_format = "graph6";
  construct->add_option("recipe", recipe, "Catalog key or recipe, e.g. tensorJ(catalog:LK6,2)")->required();
  construct->add_option("--format", construct_format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));

  auto* spectrum = app.add_subcommand("spectrum", "Print the adjacency spectrum");
  std::string spectrum_in = "-";
  bool want_exact = false, want_float = false;
  spectrum->add_option("input", spectrum_in, "graph6 or edge-list file, - for stdin");
  auto* exact_flag = spectrum->add_flag("--exact", want_exact, "Require an exactly certified spectrum");
  spectrum->add_flag("--float", want_float, "Print all floating-point eigenvalues")->excludes(exact_flag);

  auto* classify_cmd = app.add_subcommand("classify", "Print a classification report");
  std::string classify_in = "-", classify_format = "json";
  classify_cmd->add_option("input", classify_in, "graph6 or edge-list file, - for stdin");
  classify_cmd->add_option("--format", classify_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* bounds = app.add_subcommand("bounds", "Print the energy and its bounds");
  std::string bounds_in = "-";
  bounds->add_option("input", bounds_in, "graph6 or edge-list file, - for stdin");

  auto* scan = app.add_subcommand("scan", "Run checks over a graph6 stream");
  std::string scan_in = "-", scan_checks = "all";
  std::size_t scan_threads = 0;
  bool scan_connected = false;
  scan->add_option("input", scan_in, "graph6 file, - for stdin");
  scan->add_option("--checks", scan_checks, "Comma-separated check ids, or all");
  scan->add_option("--threads", scan_threads, "Worker count (0: SPECTRAL_CERTIFIER_THREADS or all cores)");
  scan->add_flag("--connected-only", scan_connected, "Skip disconnected graphs");

  auto* verify = app.add_subcommand("verify", "Run every check over an enumeration or a graph6 stream");
  std::string verify_range, verify_in, verify_checks = "all";
  std::size_t verify_threads = 0;
  bool verify_all_graphs = false, verify_order8 = false;
  auto* builtin_opt = verify->add_option("--builtin", verify_range, "Enumerate labeled graphs with orders in this range, e.g. 2..7");
  verify->add_option("input", verify_in, "graph6 file, - for stdin")->excludes(builtin_opt);
  verify->add_option("--checks", verify_checks, "Comma-separated check ids, or all");
  verify->add_option("--threads", verify_threads, "Worker count (0: SPECTRAL_CERTIFIER_THREADS or all cores)");
  verify->add_flag("--all-graphs", verify_all_graphs, "Include disconnected graphs in the enumeration");
  verify->add_flag("--allow-order-8", verify_order8, "Permit n = 8 (2^28 labeled graphs)");

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog keys");
  catalog_cmd->add_flag("--recipes", "Also print the recipe of each entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      const Graph g = resolve_graph(recipe);
      emit(construct_format == "graph6" ? write_graph6(g) + "\n" : write_edge_list(g), out_path);
      return kExitOk;
    }
    if (*spectrum) {
      std::string text;
      for (const Graph& g : load_graphs(spectrum_in)) {
        const auto s = exact_spectrum(g);
        if (want_float) {
          std::string line;
          for (double v : s.floating.values()) line += (line.empty() ? "" : " ") + detail::format_double(v);
          text += line + "\n";
        } else if (want_exact && !s.exact) {
          std::cerr << "error: spectrum of " << write_graph6(g) << " could not be certified exactly\n";
          emit(text, out_path);
          return kExitFailures;
        } else {
          text += spectrum_string(s) + "\n";
        }
      }
      emit(text, out_path);
      return kExitOk;
    }
    if (*classify_cmd) {
      std::vector<ClassReport> reports;
      for (const Graph& g : load_graphs(classify_in)) reports.push_back(classify(g));
      if (classify_format == "csv") {
        emit(write_report(reports, "csv"), out_path);
        return kExitOk;
      }
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        auto j = to_json(r);
        if (!no_timestamp) j["timestamp"] = timestamp();
        out.push_back(j);
      }
      emit((out.size() == 1 ? out[0] : out).dump(2) + "\n", out_path);
      return kExitOk;
    }
    if (*bounds) {
      std::string text;
      for (const Graph& g : load_graphs(bounds_in)) {
        if (g.size() == 0) throw InvalidArgument("energy bounds need at least one edge");
        const BoundReport b = bound_report(g);
        const auto eq = [](bool x) { return std::string(x ? " equal" : ""); };
        text += "energy " + b.energy.to_string() + "\n";
        text += "lower_bound " + b.nikiforov_bound.to_string() + eq(b.nikiforov_equal) + "\n";
        text += "upper_bound " + b.km_bound.to_string() + eq(b.km_equal) + "\n";
        text += "order_bound " + b.km_n_bound.to_string() + "\n";
        text += "qualifier " + b.qualifier() + "\n";
      }
      emit(text, out_path);
      return kExitOk;
    }
    if (*scan || (*verify && verify_range.empty())) {
      const std::string& path = *scan ? scan_in : (verify_in.empty() ? std::string("-") : verify_in);
      std::istringstream in(read_input(path));
      SurveyConfig cfg;
      cfg.source = SurveySource::Graph6Stream;
      cfg.input = &in;
      cfg.connected_only = *scan ? scan_connected : false;
      cfg.checks = split_checks(*scan ? scan_checks : verify_checks);
      cfg.parallelism = *scan ? scan_threads : verify_threads;
      const SurveySummary s = run_survey(cfg);
      emit(summary_text(s, !no_timestamp), out_path);
      return s.ok() ? kExitOk : kExitFailures;
    }
    if (*verify) {
      const auto [lo, hi] = parse_range(verify_range);
      SurveyConfig cfg;
      cfg.n_min = lo;
      cfg.n_max = hi;
      cfg.connected_only = !verify_all_graphs;
      cfg.allow_order_8 = verify_order8;
      cfg.checks = split_checks(verify_checks);
      cfg.parallelism = verify_threads;
      SurveySummary s = run_survey(cfg);
      if (hi <= 7)
        for (const auto& h : s.h_members) s.failures.push_back({h.graph6, 0, "h-census", "class H member on at most 7 vertices"});
      emit(summary_text(s, !no_timestamp), out_path);
      return s.ok() ? kExitOk : kExitFailures;
    }
    if (*catalog_cmd) {
      const bool recipes = catalog_cmd->count("--recipes") > 0;
      std::string text;
      for (const auto& e : catalog()) text += e.key + "\t" + e.description + (recipes ? "\t" + e.recipe : "") + "\n";
      emit(text, out_path);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
