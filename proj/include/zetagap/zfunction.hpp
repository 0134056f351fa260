// Empirical Hardy Z-function lab: Riemann-Siegel evaluation, critical-line
// zero scanning with normalized gap statistics, and fourth-power moment
// integrals checked against their conjectured/theorem leading terms.
//
// All statistics produced here are finite-range observations, not bounds on
// the limsup gap statistic.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zetagap {

// Riemann-Siegel theta via the asymptotic expansion
//   (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3);
// absolute error below 1e-8 for t >= 10.
double riemann_siegel_theta(double t);

// Z(t) by the Riemann-Siegel formula: main sum plus correction terms C_0..C_4
// (Chebyshev tables in rs_coeffs.cpp). Validated against an Euler-Maclaurin
// oracle; observed worst error ~3e-6 near t = 14, under 3e-7 for t >= 45.
double hardy_z(double t);

// Central difference of hardy_z with step delta = 1e-4 * (2pi/log t);
// truncation error O(delta^2 |Z'''|).
double hardy_z_prime(double t);

struct ScanConfig {
  double t_start = 10.0;  // >= 10 (evaluator domain)
  double t_end = 0.0;
  int grid_points_per_mean_spacing = 8;  // >= 4
  double bisection_tolerance = 1e-9;

  void validate() const;
};

struct ZeroRecord {
  int index = 0;       // 1-based within the scan, ascending ordinate
  double ordinate = 0.0;
  std::optional<double> gap;             // t_{n+1} - t_n; absent on the last record
  std::optional<double> normalized_gap;  // gap / local mean spacing 2pi/log(t_n/2pi)
};

struct ScanResult {
  std::vector<ZeroRecord> records;
  std::vector<std::string> coverage_warnings;  // subintervals skipped on evaluation failure
};

// Sign-change scan at the configured grid density, each bracket refined by
// bisection. Evaluation failures skip the subinterval and are reported in
// coverage_warnings, never silently dropped.
ScanResult scan_zeros(const ScanConfig& config);

// Largest normalized gap among the records; requires at least 2 records.
double max_normalized_gap(const std::vector<ZeroRecord>& records);
double mean_normalized_gap(const std::vector<ZeroRecord>& records);

enum class MomentKind { Z4, Zp4, Z2Zp2 };

std::string to_string(MomentKind k);

struct MomentEstimate {
  MomentKind kind;
  double T;
  double integral;           // over [10, T]; the omitted [0,10] is O(1)
  double predicted_leading;  // conjectured/theorem leading term at T
  double ratio;              // integral / predicted_leading
};

// Composite Simpson quadrature of Z^4, (Z')^4 or Z^2 (Z')^2 over [10, T]
// with step <= (2pi/log T)/grid_density. T restricted to [1e2, 1e6].
// The error terms of the moment asymptotics are one log-power down, so the
// ratio approaches 1 only logarithmically.
MomentEstimate moment_integral(MomentKind kind, double T, int grid_density = 8);

// Reads one ascending ordinate per line; '#' lines are comments. Violations
// are reported with their line number.
std::vector<double> import_zero_table(std::istream& in);

namespace detail {
// Chebyshev tables for the Riemann-Siegel correction terms (rs_coeffs.cpp).
extern const double kRsCheb0[];
extern const int kRsCheb0Size;
extern const double kRsCheb1[];
extern const int kRsCheb1Size;
extern const double kRsCheb2[];
extern const int kRsCheb2Size;
extern const double kRsCheb3[];
extern const int kRsCheb3Size;
extern const double kRsCheb4[];
extern const int kRsCheb4Size;
}  // namespace detail

}  // namespace zetagap
