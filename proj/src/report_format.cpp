#include <sstream>

#include <json.hpp>

#include "trigspectra/detail/shortest.hpp"
#include "trigspectra/runner.hpp"

namespace trigspectra {

namespace {

using nlohmann::json;

constexpr int kDecimalDigits = 30;

json config_json(const RunConfig& config) {
  json checks = json::array();
  for (auto family : config.checks) checks.push_back(std::string(to_string(family)));
  return json{{"n_min", config.n_min},
              {"n_max", config.n_max},
              {"checks", checks},
              {"precision", std::string(to_string(config.precision))},
              {"tol_scale", config.tol_scale},
              {"format", std::string(to_string(config.format))},
              {"seed", config.seed}};
}

json check_json(const CheckReport& c) {
  json out{{"id", c.id},
           {"n", c.n},
           {"params", c.params},
           {"measured", c.measured},
           {"tolerance", c.tolerance},
           {"pass", c.pass}};
  if (c.exact) {
    out["expected"] = c.exact->decimal(kDecimalDigits);
    out["rational"] = c.exact->str();
  }
  return out;
}

std::string join_params(const std::vector<std::int64_t>& params, char sep) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(params[i]);
  }
  return out;
}

std::string render_json(const RunReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  json summary{{"total", report.total}, {"passed", report.passed}, {"failed", report.failed}};
  summary["seconds"] = report.seconds ? json(*report.seconds) : json(nullptr);
  const json doc{{"config", config_json(report.config)}, {"checks", checks}, {"summary", summary}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const RunReport& report) {
  std::ostringstream os;
  os << "id,n,params,measured,tolerance,pass,expected,rational\n";
  for (const auto& c : report.checks) {
    os << c.id << ',' << c.n << ',' << join_params(c.params, ';') << ',' << detail::shortest(c.measured) << ','
       << detail::shortest(c.tolerance) << ',' << (c.pass ? "true" : "false") << ',';
    if (c.exact) os << c.exact->decimal(kDecimalDigits) << ',' << c.exact->str();
    else os << ',';
    os << '\n';
  }
  return os.str();
}

std::string render_text(const RunReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << " n=" << c.n;
    if (!c.params.empty()) os << " params=" << join_params(c.params, ',');
    os << " measured=" << detail::shortest(c.measured) << " tolerance=" << detail::shortest(c.tolerance);
    if (c.exact) os << " exact=" << c.exact->str();
    os << '\n';
  }
  os << "total: " << report.total << " passed: " << report.passed << " failed: " << report.failed;
  if (report.seconds) os << " seconds: " << detail::shortest(*report.seconds);
  os << '\n';
  return os.str();
}

}  // namespace

std::string render(const RunReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return render_json(report);
    case ReportFormat::csv: return render_csv(report);
    case ReportFormat::text: return render_text(report);
  }
  return {};
}

}  // namespace trigspectra
