#include "trigspectra/runner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "trigspectra/closed_form.hpp"
#include "trigspectra/jacobi.hpp"
#include "trigspectra/matrices.hpp"
#include "trigspectra/verify.hpp"

namespace trigspectra {

namespace {

struct FamilyName {
  CheckFamily family;
  std::string_view name;
};

constexpr std::array<FamilyName, 8> kFamilies{{
    {CheckFamily::theorem1, "theorem1"},
    {CheckFamily::theorem2_identities, "theorem2-identities"},
    {CheckFamily::theorem2_spectra, "theorem2-spectra"},
    {CheckFamily::sumrules, "sumrules"},
    {CheckFamily::traces, "traces"},
    {CheckFamily::convolution, "convolution"},
    {CheckFamily::aux_identities, "aux-identities"},
    {CheckFamily::oracle, "oracle"},
}};

// Fixed residual thresholds; sum rules use the summand-scaled model instead.
constexpr double kEigenpairTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kConvolutionTolerance = 1e-10;
constexpr double kCotProductTolerance = 1e-13;
constexpr double kCancellationTolerance = 1e-12;
constexpr double kMultiplicityTolerance = 0.5;

constexpr int kCotProductSamples = 1000;
constexpr int kComplexExponentSamples = 100;
// random angles stay at least this far (in |sin|) from a pole of cot
constexpr double kRandomAnglePoleMargin = 0.25;

class Collector {
 public:
  Collector(std::int64_t n, const RunConfig& config) : n_(n), scale_(config.tol_scale) {}

  void add(std::string id, std::vector<std::int64_t> params, double measured, double tolerance,
           std::optional<Rational> exact = std::nullopt) {
    // exact checks compare against zero; keep the stored tolerance positive
    const double scaled = std::max(tolerance * scale_, std::numeric_limits<double>::denorm_min());
    out_.emplace_back(ResidualReport(std::move(id), n_, std::move(params), measured, scaled), std::move(exact));
  }

  std::vector<CheckReport> take() { return std::move(out_); }

 private:
  std::int64_t n_;
  double scale_;
  std::vector<CheckReport> out_;
};

// Portable uniform double in [0, 1): the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::mt19937_64 family_rng(const RunConfig& config, CheckFamily family, std::int64_t n) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(family), static_cast<std::uint32_t>(n)};
  return std::mt19937_64(seq);
}

void theorem1(Collector& out, std::int64_t n, const RunConfig& config) {
  const auto a = build_a(n);
  for (std::int64_t s = 1; s <= n; ++s) {
    const SpectralIndex idx(n, s);
    const auto lambda = eig_a(idx);
    out.add("eq2-eigenpair", {s},
            eigenpair_residual(a, dft_eigenvector(n, s), static_cast<double>(lambda), config.precision),
            kEigenpairTolerance, Rational(lambda));
  }
}

void theorem2_spectra(Collector& out, std::int64_t n, const RunConfig& config) {
  const auto b = build_b(n);
  const auto c = build_c(n);
  for (std::int64_t s = 1; s <= n; ++s) {
    const SpectralIndex idx(n, s);
    const auto v = dft_eigenvector(n, s);
    const Rational lb = eig_b(idx);
    const Rational lc = eig_c(idx);
    out.add("eq9-eigenpair", {s}, eigenpair_residual(b, v, lb.to_double(), config.precision),
            kEigenpairTolerance, lb);
    out.add("eq10-eigenpair", {s}, eigenpair_residual(c, v, lc.to_double(), config.precision),
            kEigenpairTolerance, lc);
  }
}

void theorem2_identities(Collector& out, std::int64_t n, const RunConfig& config) {
  out.add("eq6-identity", {}, identity_b_residual(n, config.precision), kIdentityTolerance);
  out.add("eq7-identity", {}, identity_c_residual(n, config.precision), kIdentityTolerance);
}

void sumrules(Collector& out, std::int64_t n, const RunConfig& config) {
  if (n < 2) return;
  for (std::int64_t s = 1; s < n; ++s) {
    const auto stats = brute_sum_cot_sin(n, s, config.precision);
    const auto exact = cot_sin_rhs(n, s);
    out.add("eq11-cot-sin", {s}, std::abs(stats.value - static_cast<double>(exact)),
            sum_rule_tolerance(n, stats.max_term), Rational(exact));
  }
  for (std::int64_t s = 1; s <= n; ++s) {
    const SpectralIndex idx(n, s);
    const auto b = brute_sum_inv_sin2_cos(n, s, config.precision);
    const Rational eb = eig_b(idx);
    out.add("eq12-inv-sin2-cos", {s}, std::abs(b.value - eb.to_double()), sum_rule_tolerance(n, b.max_term), eb);
    const auto c = brute_sum_inv_sin4_cos(n, s, config.precision);
    const Rational ec = eig_c(idx);
    out.add("eq13-inv-sin4-cos", {s}, std::abs(c.value - ec.to_double()), sum_rule_tolerance(n, c.max_term), ec);
  }
  for (int p = 1; p <= 4; ++p) {
    const auto stats = brute_power_sum(n, p, config.precision);
    const Rational exact = sigma(n, p);
    out.add("eq14-p" + std::to_string(p), {}, std::abs(stats.value - exact.to_double()),
            sum_rule_tolerance(n, stats.max_term), exact);
  }
}

void traces(Collector& out, std::int64_t n) {
  for (const auto& t : trace_identities(n)) {
    out.add(t.id, {}, abs(t.left - t.right).to_double(), 0.0, t.right);
  }
}

void convolution(Collector& out, std::int64_t n, const RunConfig& config) {
  if (n < 2) return;
  double reduced = 0;
  for (std::int64_t k = 2; k <= n; ++k) {
    const double r = convolution_identity_residual(n, 1, k, config.precision);
    reduced = std::max(reduced, r);
    out.add("eq20-convolution", {1, k}, r, kConvolutionTolerance);
  }
  double full = 0;
  for (std::int64_t j = 1; j <= n; ++j) {
    for (std::int64_t k = 1; k <= n; ++k) {
      if (j != k) full = std::max(full, convolution_identity_residual(n, j, k, config.precision));
    }
  }
  out.add("eq20-full-scan", {}, full, kConvolutionTolerance);
}

void aux_identities(Collector& out, std::int64_t n, const RunConfig& config) {
  if (n < 2) return;
  for (int p = 1; p <= 4; ++p) {
    double worst = 0;
    for (std::int64_t j = 1; j <= n; ++j) worst = std::max(worst, row_shift_check(n, j, p, config.precision));
    const auto stats = brute_power_sum(n, p, config.precision);
    out.add("eq17-row-shift", {p}, worst, sum_rule_tolerance(n, stats.max_term));
  }

  auto rng = family_rng(config, CheckFamily::aux_identities, n);
  double worst_cot = 0;
  for (int sample = 0; sample < kCotProductSamples;) {
    const double alpha = (2 * uniform01(rng) - 1) * std::numbers::pi;
    const double beta = (2 * uniform01(rng) - 1) * std::numbers::pi;
    if (std::abs(std::sin(alpha)) < kRandomAnglePoleMargin || std::abs(std::sin(beta)) < kRandomAnglePoleMargin ||
        std::abs(std::sin(alpha - beta)) < kRandomAnglePoleMargin) {
      continue;
    }
    worst_cot = std::max(worst_cot, cot_identity_residual(alpha, beta));
    ++sample;
  }
  out.add("eq18-cot-product", {}, worst_cot, kCotProductTolerance);

  const auto zero = cot_zero_sum(n, config.precision);
  out.add("eq19-cot-zero-sum", {}, zero.value / std::max(1.0, zero.abs_total), kCancellationTolerance);

  double worst_power = 0;
  for (int sample = 0; sample < kComplexExponentSamples; ++sample) {
    const std::complex<double> p((2 * uniform01(rng) - 1) * 4, (2 * uniform01(rng) - 1) * 4);
    const auto stats = cot_abs_sin_power_sum(n, p, config.precision);
    worst_power = std::max(worst_power, stats.value / std::max(1.0, stats.abs_total));
  }
  out.add("eq21-cot-abs-sin-power", {}, worst_power, kCancellationTolerance);
}

void oracle(Collector& out, std::int64_t n) {
  for (auto kind : {MatrixKind::A, MatrixKind::B, MatrixKind::C}) {
    const std::string id = std::string("oracle-") + std::string(to_string(kind));
    try {
      const auto cmp = compare_spectrum(kind, n);
      const double tol = kSpectrumRelativeTolerance * cmp.scale;
      out.add(id, {}, cmp.max_abs_deviation, tol);
      out.add(id + "-pairing", {}, cmp.pairing_gap, tol);
      out.add(id + "-multiplicity", {}, static_cast<double>(cmp.multiplicity_mismatches), kMultiplicityTolerance);
    } catch (const ConvergenceError& e) {
      out.add(id + "-convergence", {}, e.remaining_off_mass(), 0.0);
    }
  }
}

bool report_less(const CheckReport& a, const CheckReport& b) {
  if (a.id != b.id) return a.id < b.id;
  if (a.n != b.n) return a.n < b.n;
  return a.params < b.params;
}

}  // namespace

std::string_view to_string(CheckFamily family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "?";
}

std::string_view to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::text: return "text";
  }
  return "?";
}

std::string_view to_string(Precision precision) {
  return precision == Precision::compensated ? "compensated" : "standard";
}

const std::vector<CheckFamily>& all_check_families() {
  static const std::vector<CheckFamily> all = [] {
    std::vector<CheckFamily> v;
    for (const auto& f : kFamilies) v.push_back(f.family);
    return v;
  }();
  return all;
}

std::vector<CheckFamily> parse_check_families(std::string_view text) {
  std::vector<CheckFamily> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    if (item == "all") {
      out = all_check_families();
      continue;
    }
    const auto it = std::find_if(kFamilies.begin(), kFamilies.end(), [&](const auto& f) { return f.name == item; });
    if (it == kFamilies.end()) throw std::invalid_argument("unknown check family '" + std::string(item) + "'");
    out.push_back(it->family);
  }
  if (out.empty()) throw std::invalid_argument("no check families selected");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void RunConfig::validate() const {
  if (n_min < 1) throw std::invalid_argument("--n-min must be >= 1");
  if (n_min > n_max) {
    throw std::invalid_argument("--n-min (" + std::to_string(n_min) + ") exceeds --n-max (" +
                                std::to_string(n_max) + ")");
  }
  if (checks.empty()) throw std::invalid_argument("no check families selected");
  if (!(tol_scale > 0) || !std::isfinite(tol_scale)) throw std::invalid_argument("--tol-scale must be positive");
}

std::vector<CheckReport> run_family(CheckFamily family, std::int64_t n, const RunConfig& config) {
  Collector out(n, config);
  switch (family) {
    case CheckFamily::theorem1: theorem1(out, n, config); break;
    case CheckFamily::theorem2_identities: theorem2_identities(out, n, config); break;
    case CheckFamily::theorem2_spectra: theorem2_spectra(out, n, config); break;
    case CheckFamily::sumrules: sumrules(out, n, config); break;
    case CheckFamily::traces: traces(out, n); break;
    case CheckFamily::convolution: convolution(out, n, config); break;
    case CheckFamily::aux_identities: aux_identities(out, n, config); break;
    case CheckFamily::oracle: oracle(out, n); break;
  }
  return out.take();
}

RunReport run(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  struct Unit {
    CheckFamily family;
    std::int64_t n;
  };
  std::vector<Unit> units;
  for (auto family : config.checks) {
    for (std::int64_t n = config.n_min; n <= config.n_max; ++n) units.push_back({family, n});
  }
  // expensive ranks first so the tail of the sweep stays short
  std::stable_sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) { return a.n > b.n; });

  std::vector<std::vector<CheckReport>> results(units.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        results[i] = run_family(units[i].family, units[i].n, config);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(units.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  RunReport report;
  report.config = config;
  for (auto& chunk : results) {
    for (auto& c : chunk) report.checks.push_back(std::move(c));
  }
  std::sort(report.checks.begin(), report.checks.end(), report_less);
  report.total = report.checks.size();
  report.passed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(), [](const CheckReport& c) { return c.pass; }));
  report.failed = report.total - report.passed;
  if (config.timing) {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace trigspectra
