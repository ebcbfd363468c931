#pragma once

// Sweep engine behind `trigspectra verify`: runs check families over a range
// of ranks, possibly on several threads, and assembles a report whose bytes
// depend only on the configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigspectra/rational.hpp"
#include "trigspectra/summation.hpp"
#include "trigspectra/verify.hpp"

namespace trigspectra {

enum class CheckFamily {
  theorem1,             // eigenpairs of A
  theorem2_identities,  // B and C as polynomials in A and B
  theorem2_spectra,     // eigenpairs of B and C
  sumrules,             // cot sin, sin^-2 cos, sin^-4 cos and power sums
  traces,               // exact trace identities
  convolution,          // sin^-2 convolution rule
  aux_identities,       // row shift, cot product, zero cot sum, cot |sin|^p
  oracle,               // Jacobi spectra vs closed forms
};

enum class ReportFormat { json, csv, text };

std::string_view to_string(CheckFamily family);
std::string_view to_string(ReportFormat format);
std::string_view to_string(Precision precision);
const std::vector<CheckFamily>& all_check_families();
/// Comma-separated family names or "all"; duplicates collapse. Throws
/// std::invalid_argument on an unknown name or an empty list.
std::vector<CheckFamily> parse_check_families(std::string_view text);

struct RunConfig {
  std::int64_t n_min = 1;
  std::int64_t n_max = 32;
  std::vector<CheckFamily> checks = all_check_families();
  Precision precision = Precision::standard;
  double tol_scale = 1.0;
  ReportFormat format = ReportFormat::json;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;   // record wall time (makes output run-dependent)

  /// Throws std::invalid_argument when the invariants do not hold.
  void validate() const;
};

/// One check outcome, optionally carrying the exact value it was compared
/// against.
struct CheckReport : ResidualReport {
  std::optional<Rational> exact;

  CheckReport() = default;
  CheckReport(ResidualReport base, std::optional<Rational> exact_value = std::nullopt)
      : ResidualReport(std::move(base)), exact(std::move(exact_value)) {}
};

struct RunReport {
  RunConfig config;
  std::vector<CheckReport> checks;  // sorted by (id, n, params)
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<double> seconds;

  bool all_passed() const { return failed == 0; }
};

/// Checks produced by one family at one rank.
std::vector<CheckReport> run_family(CheckFamily family, std::int64_t n, const RunConfig& config);

/// Runs every selected family for every n in [n_min, n_max].
RunReport run(const RunConfig& config);

std::string render(const RunReport& report, ReportFormat format);
inline std::string render(const RunReport& report) { return render(report, report.config.format); }

}  // namespace trigspectra
