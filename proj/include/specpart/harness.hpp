#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "specpart/bisect.hpp"
#include "specpart/family.hpp"
#include "specpart/family_config.hpp"
#include "specpart/oracle.hpp"
#include "specpart/spectrum.hpp"

namespace specpart {

/// Below this order the lower bound is reported but not judged.
inline constexpr std::size_t kTheoremMinOrder = 49;

/// One family instance: spectral cut versus the best known bisection.
///
/// spectral_cut is the minimum over the computed Fiedler-space basis and,
/// when the zero set is small enough to sweep, over every zero assignment.
/// spectral_cut_worst is the matching maximum. error_lower subtracts the
/// best known optimum upper bound (oracle when enumerated, else witness), so
/// it never overstates the true gap.
struct GapReport {
  std::string base;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  double lambda2_numeric = 0.0;
  double lambda2_analytic = 0.0;
  std::size_t fiedler_multiplicity = 0;
  std::size_t spectral_cut = 0;
  std::size_t spectral_cut_rule = 0;
  std::size_t spectral_cut_worst = 0;
  std::size_t witness_cut = 0;
  std::optional<std::size_t> oracle_cut;
  std::int64_t error_lower = 0;
  double theorem_threshold = 0.0;
  double upper_threshold = 0.0;
  bool theorem_applies = false;
  bool passes_lower = false;
  bool passes_upper = false;

  /// False only when a judged bound is violated.
  bool ok() const { return passes_upper && (!theorem_applies || passes_lower); }
};

struct ExperimentOptions {
  bool use_oracle = true;  // enumerate when n <= kOracleMaxOrder
  unsigned oracle_threads = 0;
};

inline GapReport run_gap_experiment(const FamilySpec& spec, const std::string& base = "",
                                    const ExperimentOptions& opts = {}) {
  const FamilyInstance inst = build_family(spec);
  const Spectrum spectrum = eigendecompose(inst.laplacian);
  const Eigenspace fs = fiedler_space(spectrum);

  GapReport r;
  r.base = base;
  r.n = inst.graph.order();
  r.m = spec.m;
  r.k = spec.cone_count;
  r.lambda2_numeric = fs.eigenvalue;
  // Each cone vertex shifts every nonzero eigenvalue up by one.
  r.lambda2_analytic = coupling_eigenvalues(spec.m).lambda_minus + static_cast<double>(spec.cone_count);
  r.fiedler_multiplicity = fs.multiplicity();

  r.spectral_cut = std::numeric_limits<std::size_t>::max();
  r.spectral_cut_rule = std::numeric_limits<std::size_t>::max();
  for (const Vector& y : fs.basis) {
    const std::size_t rule = spectral_bisection(inst.graph, y).cut;
    const SignPartition p = sign_partition(median_shifted(y));
    std::size_t lo = rule, hi = rule;
    if (p.zero.size() <= kSweepMaxZeros) {
      const SweepRange sw = zero_assignment_sweep(inst.graph, p);
      lo = sw.min_cut;
      hi = sw.max_cut;
    }
    r.spectral_cut = std::min(r.spectral_cut, lo);
    r.spectral_cut_rule = std::min(r.spectral_cut_rule, rule);
    r.spectral_cut_worst = std::max(r.spectral_cut_worst, hi);
  }

  r.witness_cut = spectral_bisection(inst.graph, witness_vector(spec.m, spec.cone_count)).cut;
  if (opts.use_oracle && r.n <= kOracleMaxOrder)
    r.oracle_cut = optimal_bisection(inst.graph, opts.oracle_threads).best_cut;

  const std::size_t best_known = r.oracle_cut ? std::min(*r.oracle_cut, r.witness_cut) : r.witness_cut;
  r.error_lower = static_cast<std::int64_t>(r.spectral_cut) - static_cast<std::int64_t>(best_known);
  const double nd = static_cast<double>(r.n);
  r.theorem_threshold = nd * nd / 384.0;
  r.upper_threshold = nd * nd / 2.0;
  r.theorem_applies = r.n >= kTheoremMinOrder;
  r.passes_lower = static_cast<double>(r.error_lower) > r.theorem_threshold;
  r.passes_upper = static_cast<double>(r.error_lower) < r.upper_threshold;
  return r;
}

/// One report per (m, k) pair, in input order (m outer, k inner). Instances
/// run concurrently.
inline std::vector<GapReport> verify_theorem_sweep(const std::vector<std::size_t>& m_values,
                                                   const std::string& base_kind,
                                                   const std::vector<std::size_t>& k_values,
                                                   const ExperimentOptions& opts = {}) {
  const GraphDescriptor desc = parse_descriptor(base_kind);
  std::vector<FamilySpec> specs;
  for (std::size_t m : m_values)
    for (std::size_t k : k_values) {
      FamilyConfig cfg{m, k, {}};
      cfg.bases.fill(desc);
      specs.push_back(cfg.resolve());
      validate(specs.back());
    }
  std::vector<std::future<GapReport>> jobs;
  for (const FamilySpec& s : specs)
    jobs.push_back(std::async(std::launch::async, [&s, &base_kind, opts] {
      ExperimentOptions o = opts;
      o.oracle_threads = 1;
      return run_gap_experiment(s, base_kind, o);
    }));
  std::vector<GapReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline bool sweep_passes(const std::vector<GapReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const GapReport& r) { return r.ok(); });
}

enum class ReportFormat { json, csv };

inline ReportFormat report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw InvalidArgument("unknown report format '" + name + "'");
}

namespace detail {

inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline nlohmann::ordered_json report_json(const GapReport& r) {
  auto real = [](double x) { return std::stod(format_real(x)); };
  nlohmann::ordered_json j;
  j["base"] = r.base;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["lambda2_numeric"] = real(r.lambda2_numeric);
  j["lambda2_analytic"] = real(r.lambda2_analytic);
  j["fiedler_multiplicity"] = r.fiedler_multiplicity;
  j["spectral_cut"] = r.spectral_cut;
  j["spectral_cut_rule"] = r.spectral_cut_rule;
  j["spectral_cut_worst"] = r.spectral_cut_worst;
  j["witness_cut"] = r.witness_cut;
  j["oracle_cut"] = r.oracle_cut ? nlohmann::ordered_json(*r.oracle_cut) : nlohmann::ordered_json(nullptr);
  j["error_lower"] = r.error_lower;
  j["theorem_threshold"] = real(r.theorem_threshold);
  j["upper_threshold"] = real(r.upper_threshold);
  j["theorem_applies"] = r.theorem_applies;
  j["passes_lower"] = r.passes_lower;
  j["passes_upper"] = r.passes_upper;
  return j;
}

inline std::string csv_header() {
  return "base,n,m,k,lambda2_numeric,lambda2_analytic,fiedler_multiplicity,spectral_cut,"
         "spectral_cut_rule,spectral_cut_worst,witness_cut,oracle_cut,error_lower,theorem_threshold,"
         "upper_threshold,theorem_applies,passes_lower,passes_upper\n";
}

inline std::string csv_row(const GapReport& r) {
  std::ostringstream o;
  auto b = [](bool x) { return x ? "true" : "false"; };
  o << r.base << ',' << r.n << ',' << r.m << ',' << r.k << ',' << format_real(r.lambda2_numeric) << ','
    << format_real(r.lambda2_analytic) << ',' << r.fiedler_multiplicity << ',' << r.spectral_cut << ','
    << r.spectral_cut_rule << ',' << r.spectral_cut_worst << ',' << r.witness_cut << ','
    << (r.oracle_cut ? std::to_string(*r.oracle_cut) : "") << ',' << r.error_lower << ','
    << format_real(r.theorem_threshold) << ',' << format_real(r.upper_threshold) << ','
    << b(r.theorem_applies) << ',' << b(r.passes_lower) << ',' << b(r.passes_upper) << '\n';
  return o.str();
}

}  // namespace detail

inline std::string export_report(const GapReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return detail::report_json(r).dump(2) + "\n";
  return detail::csv_header() + detail::csv_row(r);
}

inline std::string export_report(const std::vector<GapReport>& rs, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(detail::report_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out = detail::csv_header();
  for (const auto& r : rs) out += detail::csv_row(r);
  return out;
}

}  // namespace specpart
