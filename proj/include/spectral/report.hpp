#ifndef SPECTRAL_REPORT_HPP
#define SPECTRAL_REPORT_HPP

// JSON and CSV serialization of classification reports.

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "spectral/classify.hpp"
#include "spectral/errors.hpp"

namespace spectral {

inline constexpr int kReportSchema = 1;

namespace detail {

/// Rounds to 12 significant digits so the JSON number prints at most that many.
inline double round12(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

inline nlohmann::ordered_json real_json(const RealValue& v) {
  nlohmann::ordered_json j;
  j["value"] = round12(v.approx);
  j["exact"] = v.exact ? nlohmann::ordered_json(v.exact->to_string()) : nlohmann::ordered_json(nullptr);
  j["text"] = v.to_string();
  return j;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ClassReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["label"] = r.label;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["connected"] = r.connected;
  j["regular"] = r.regular;
  j["certified"] = r.certified;
  j["spectrum"] = r.spectrum;
  j["pattern"] = r.pattern.to_string();
  j["in_G"] = r.in_G;
  j["in_H"] = r.in_H;
  j["uncertified"] = !r.certified;
  j["srg"] = r.srg ? nlohmann::ordered_json::array({r.srg->n, r.srg->r, r.srg->alpha, r.srg->beta}) : nlohmann::ordered_json(nullptr);
  j["design"] = r.design;
  if (r.multiplicative) {
    j["multiplicative"] = {{"d", r.multiplicative->d}, {"alpha_sq", r.multiplicative->alpha_sq}};
  } else {
    j["multiplicative"] = nullptr;
  }
  j["integral"] = r.integral;
  if (r.bounds) {
    const auto& b = *r.bounds;
    j["bounds"] = {{"energy", detail::real_json(b.energy)},
                   {"nikiforov_bound", detail::real_json(b.nikiforov_bound)},
                   {"km_bound", detail::real_json(b.km_bound)},
                   {"km_n_bound", detail::real_json(b.km_n_bound)},
                   {"nikiforov_equal", b.nikiforov_equal},
                   {"km_equal", b.km_equal},
                   {"qualifier", b.qualifier()}};
  } else {
    j["bounds"] = nullptr;
  }
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  for (const auto& [id, v] : r.verdicts) verdicts[id] = {{"status", v.status_name()}, {"branch", v.branch}, {"detail", v.detail}};
  j["theorem_verdicts"] = verdicts;
  return j;
}

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {"n", "m", "regular", "connected", "spectrum", "pattern", "in_G", "in_H",
                                                "srg_params", "nikiforov_equal", "km_equal", "label"};
  return cols;
}

inline std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) out += (out.empty() ? "" : ",") + c;
  return out + "\n";
}

inline std::string csv_row(const ClassReport& r) {
  const auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  std::vector<std::string> f = {std::to_string(r.n),
                                std::to_string(r.m),
                                b(r.regular),
                                b(r.connected),
                                r.spectrum,
                                r.pattern.to_string(),
                                b(r.in_G),
                                b(r.in_H),
                                r.srg ? r.srg->to_string() : "",
                                r.bounds ? b(r.bounds->nikiforov_equal) : "",
                                r.bounds ? b(r.bounds->km_equal) : "",
                                r.label};
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + detail::csv_field(f[i]);
  return out + "\n";
}

/// Serializes reports as "json" (an array, or one object for a single report)
/// or "csv" (header plus one row each). Other formats throw InvalidArgument.
inline std::string write_report(const std::vector<ClassReport>& reports, std::string_view format) {
  if (format == "json") {
    if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = csv_header();
    for (const auto& r : reports) out += csv_row(r);
    return out;
  }
  throw InvalidArgument("unknown report format '" + std::string(format) + "' (expected json or csv)");
}

inline std::string write_report(const ClassReport& r, std::string_view format) { return write_report(std::vector<ClassReport>{r}, format); }

}  // namespace spectral

#endif  // SPECTRAL_REPORT_HPP
