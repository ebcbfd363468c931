#include "trigspectra/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigspectra/closed_form.hpp"
#include "trigspectra/matrices.hpp"
#include "trigspectra/runner.hpp"

namespace trigspectra {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned threads_from_environment() {
  const char* value = std::getenv("TRIGSPECTRA_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  char* end = nullptr;
  const unsigned long parsed = std::strtoul(value, &end, 10);
  if (*end != '\0') throw UsageError("TRIGSPECTRA_THREADS must be a non-negative integer");
  return static_cast<unsigned>(parsed);
}

// Writes to --out when given, otherwise to the stream.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

std::string dump_json(MatrixKind kind, const DenseHermitian<double>& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index j = 0; j < m.size(); ++j) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.size(); ++k) {
      re_row.push_back(m.matrix()(j, k).real());
      im_row.push_back(m.matrix()(j, k).imag() == 0 ? 0.0 : m.matrix()(j, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  const nlohmann::json doc{{"kind", std::string(to_string(kind))}, {"n", m.size()}, {"re", re}, {"im", im}};
  return doc.dump(2) + "\n";
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].str();
  }
  return out;
}

std::string table_sigma(std::int64_t n_min, std::int64_t n_max) {
  std::ostringstream os;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    os << n << ':';
    for (int p = 1; p <= 4; ++p) os << ' ' << sigma(n, p).str();
    os << '\n';
  }
  return os.str();
}

std::string table_spectra(std::int64_t n_min, std::int64_t n_max) {
  std::ostringstream os;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    os << "# n=" << n << '\n';
    os << "A: " << join(spectrum_closed(MatrixKind::A, n)) << " | B: " << join(spectrum_closed(MatrixKind::B, n))
       << " | C: " << join(spectrum_closed(MatrixKind::C, n)) << '\n';
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form spectra and trigonometric sum rules of cot / inverse-sine circulant matrices",
               "trigspectra"};
  app.require_subcommand(1);

  RunConfig config;
  std::string checks_text = "all";
  std::string precision_text = "standard";
  std::string format_text = "json";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run verification checks over a range of n");
  verify->add_option("--n-min", config.n_min, "Smallest rank")->capture_default_str();
  verify->add_option("--n-max", config.n_max, "Largest rank")->capture_default_str();
  verify->add_option("--checks", checks_text,
                     "Comma-separated families: theorem1, theorem2-identities, theorem2-spectra, sumrules, "
                     "traces, convolution, aux-identities, oracle, or all")
      ->capture_default_str();
  verify->add_option("--precision", precision_text, "Accumulation mode")
      ->check(CLI::IsMember({"standard", "compensated"}))
      ->capture_default_str();
  verify->add_option("--tol-scale", config.tol_scale, "Multiplier applied to every tolerance")->capture_default_str();
  verify->add_option("--format", format_text, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify->add_option("--out", out_path, "Write the report to a file instead of stdout");
  verify->add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  verify->add_flag("--timing", config.timing, "Record wall time in the summary");

  std::string kind_text;
  std::int64_t dump_n = 0;
  std::string dump_format = "text";
  auto* dump = app.add_subcommand("dump", "Print matrix A, B or C");
  dump->add_option("kind", kind_text, "A, B or C")->required();
  dump->add_option("n", dump_n, "Rank")->required();
  dump->add_option("--format", dump_format, "Output format")->check(CLI::IsMember({"text", "json"}));
  dump->add_option("--out", out_path, "Write to a file instead of stdout");

  std::string table_what;
  std::int64_t table_min = 0, table_max = 0;
  auto* table = app.add_subcommand("table", "Print exact closed forms for a range of n");
  table->add_option("what", table_what, "sigma or spectra")->required()->check(CLI::IsMember({"sigma", "spectra"}));
  table->add_option("n_min", table_min, "Smallest rank")->required();
  table->add_option("n_max", table_max, "Largest rank")->required();
  table->add_option("--out", out_path, "Write to a file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "trigspectra: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      config.checks = parse_check_families(checks_text);
      config.precision = precision_text == "compensated" ? Precision::compensated : Precision::standard;
      config.format = format_text == "csv" ? ReportFormat::csv
                      : format_text == "text" ? ReportFormat::text
                                              : ReportFormat::json;
      config.threads = threads_from_environment();
      config.validate();
      const RunReport report = run(config);
      emit(render(report), out_path, out);
      if (!out_path.empty() && report.failed > 0) {
        err << "trigspectra: " << report.failed << " of " << report.total << " checks failed\n";
      }
      return report.all_passed() ? kExitPass : kExitFail;
    }
    if (dump->parsed()) {
      const MatrixKind kind = parse_matrix_kind(kind_text);
      if (dump_n < 1) throw UsageError("dump: n must be >= 1");
      const auto m = build_matrix(kind, dump_n);
      if (dump_format == "json") {
        emit(dump_json(kind, m), out_path, out);
      } else {
        std::ostringstream os;
        write_text(os, m);
        emit(os.str(), out_path, out);
      }
      return kExitPass;
    }
    if (table->parsed()) {
      if (table_min < 1 || table_min > table_max) {
        throw UsageError("table: need 1 <= n_min <= n_max");
      }
      emit(table_what == "sigma" ? table_sigma(table_min, table_max) : table_spectra(table_min, table_max),
           out_path, out);
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "trigspectra: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "trigspectra: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "trigspectra: error: " << e.what() << "\n";
    return kExitFail;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace trigspectra
