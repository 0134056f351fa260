#include "zetagap/zfunction.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace zetagap {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

double clenshaw(const double* coeffs, int n, double x) {
  double b0 = 0.0, b1 = 0.0;
  for (int i = n - 1; i >= 1; --i) {
    const double t = 2.0 * x * b0 - b1 + coeffs[i];
    b1 = b0;
    b0 = t;
  }
  return x * b0 - b1 + coeffs[0];
}

void require_domain(double t, const char* who) {
  if (!(t >= 10.0))
    throw std::invalid_argument(std::string(who) + ": requires t >= 10");
}

}  // namespace

double riemann_siegel_theta(double t) {
  require_domain(t, "riemann_siegel_theta");
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - M_PI / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t * t);
}

double hardy_z(double t) {
  require_domain(t, "hardy_z");
  const double tau = std::sqrt(t / kTwoPi);
  const int N = static_cast<int>(tau);
  const double p = tau - N;
  const double theta = riemann_siegel_theta(t);

  double sum = 0.0;
  for (int n = 1; n <= N; ++n) {
    sum += std::cos(theta - t * std::log(static_cast<double>(n))) / std::sqrt(n);
  }
  sum *= 2.0;

  const double x = 2.0 * p - 1.0;
  const double inv_tau = 1.0 / tau;
  double corr = clenshaw(detail::kRsCheb0, detail::kRsCheb0Size, x);
  double pw = inv_tau;
  corr += clenshaw(detail::kRsCheb1, detail::kRsCheb1Size, x) * pw;
  pw *= inv_tau;
  corr += clenshaw(detail::kRsCheb2, detail::kRsCheb2Size, x) * pw;
  pw *= inv_tau;
  corr += clenshaw(detail::kRsCheb3, detail::kRsCheb3Size, x) * pw;
  pw *= inv_tau;
  corr += clenshaw(detail::kRsCheb4, detail::kRsCheb4Size, x) * pw;
  corr *= (N % 2 == 1 ? 1.0 : -1.0) / std::sqrt(tau);

  return sum + corr;
}

double hardy_z_prime(double t) {
  const double delta = 1e-4 * (kTwoPi / std::log(t));
  require_domain(t - delta, "hardy_z_prime");
  return (hardy_z(t + delta) - hardy_z(t - delta)) / (2.0 * delta);
}

void ScanConfig::validate() const {
  if (!(t_start >= 10.0)) throw std::invalid_argument("ScanConfig: t_start must be >= 10");
  if (!(t_end > t_start)) throw std::invalid_argument("ScanConfig: t_end must exceed t_start");
  if (grid_points_per_mean_spacing < 4)
    throw std::invalid_argument("ScanConfig: grid density must be >= 4");
  if (!(bisection_tolerance > 0))
    throw std::invalid_argument("ScanConfig: bisection tolerance must be positive");
}

namespace {

double local_mean_spacing(double t) { return kTwoPi / std::log(t / kTwoPi); }

double bisect_zero(double lo, double hi, double flo, double tol) {
  // flo is hardy_z(lo); invariant: sign change inside [lo, hi]
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = hardy_z(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ScanResult scan_zeros(const ScanConfig& config) {
  config.validate();
  ScanResult result;
  std::vector<double> ordinates;

  double t = config.t_start;
  double f_prev = 0.0;
  bool have_prev = false;
  while (t < config.t_end) {
    const double step = local_mean_spacing(t) / config.grid_points_per_mean_spacing;
    double t_next = std::min(t + step, config.t_end);
    double f_here, f_next;
    try {
      if (!have_prev) f_prev = hardy_z(t);
      f_here = f_prev;
      f_next = hardy_z(t_next);
      if (!std::isfinite(f_here) || !std::isfinite(f_next))
        throw std::runtime_error("non-finite Z value");
    } catch (const std::exception& e) {
      std::ostringstream warn;
      warn << "coverage gap on [" << t << ", " << t_next << "]: " << e.what();
      result.coverage_warnings.push_back(warn.str());
      t = t_next;
      have_prev = false;
      continue;
    }
    if (f_here == 0.0) {
      ordinates.push_back(t);
    } else if ((f_here < 0) != (f_next < 0)) {
      ordinates.push_back(bisect_zero(t, t_next, f_here, config.bisection_tolerance));
    }
    t = t_next;
    f_prev = f_next;
    have_prev = true;
  }

  result.records.reserve(ordinates.size());
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    ZeroRecord rec;
    rec.index = static_cast<int>(i) + 1;
    rec.ordinate = ordinates[i];
    if (i + 1 < ordinates.size()) {
      const double gap = ordinates[i + 1] - ordinates[i];
      rec.gap = gap;
      rec.normalized_gap = gap / local_mean_spacing(ordinates[i]);
    }
    result.records.push_back(rec);
  }
  return result;
}

double max_normalized_gap(const std::vector<ZeroRecord>& records) {
  if (records.size() < 2)
    throw std::invalid_argument("max_normalized_gap: need at least 2 records");
  double best = 0.0;
  for (const auto& r : records)
    if (r.normalized_gap && *r.normalized_gap > best) best = *r.normalized_gap;
  return best;
}

double mean_normalized_gap(const std::vector<ZeroRecord>& records) {
  if (records.size() < 2)
    throw std::invalid_argument("mean_normalized_gap: need at least 2 records");
  double sum = 0.0;
  long n = 0;
  for (const auto& r : records)
    if (r.normalized_gap) {
      sum += *r.normalized_gap;
      ++n;
    }
  return sum / n;
}

std::string to_string(MomentKind k) {
  switch (k) {
    case MomentKind::Z4: return "Z4";
    case MomentKind::Zp4: return "Zp4";
    case MomentKind::Z2Zp2: return "Z2Zp2";
  }
  return "?";
}

MomentEstimate moment_integral(MomentKind kind, double T, int grid_density) {
  if (!(T >= 100.0 && T <= 1e6))
    throw std::invalid_argument("moment_integral: T must lie in [1e2, 1e6]");
  if (grid_density < 2) throw std::invalid_argument("moment_integral: grid density >= 2");

  auto f = [kind](double t) {
    switch (kind) {
      case MomentKind::Z4: {
        const double z = hardy_z(t);
        return z * z * z * z;
      }
      case MomentKind::Zp4: {
        const double zp = hardy_z_prime(t);
        return zp * zp * zp * zp;
      }
      case MomentKind::Z2Zp2: {
        const double z = hardy_z(t);
        const double zp = hardy_z_prime(t);
        return z * z * zp * zp;
      }
    }
    return 0.0;
  };

  // Z' needs t - delta >= 10; nudge the lower limit for derivative kinds
  // (the report already notes the omitted initial interval).
  const double a = (kind == MomentKind::Z4) ? 10.0 : 10.001;
  const double max_step = local_mean_spacing(T) / grid_density;
  long n = static_cast<long>(std::ceil((T - a) / max_step));
  if (n % 2 == 1) ++n;
  const double h = (T - a) / n;

  // composite Simpson
  double sum = f(a) + f(T);
  for (long i = 1; i < n; ++i) {
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  const double integral = sum * h / 3.0;

  const double logT = std::log(T);
  double predicted = 0.0;
  switch (kind) {
    case MomentKind::Z4:
      predicted = T * std::pow(logT, 4) / (2.0 * M_PI * M_PI);
      break;
    case MomentKind::Zp4:
      predicted = T * std::pow(logT, 8) / (1120.0 * M_PI * M_PI);
      break;
    case MomentKind::Z2Zp2:
      predicted = T * std::pow(logT, 6) / (120.0 * M_PI * M_PI);
      break;
  }

  MomentEstimate out;
  out.kind = kind;
  out.T = T;
  out.integral = integral;
  out.predicted_leading = predicted;
  out.ratio = integral / predicted;
  return out;
}

std::vector<double> import_zero_table(std::istream& in) {
  std::vector<double> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // trim
    auto l = line.find_first_not_of(" \t\r");
    if (l == std::string::npos) continue;
    auto r = line.find_last_not_of(" \t\r");
    std::string body = line.substr(l, r - l + 1);
    if (body.empty() || body[0] == '#') continue;
    double v;
    try {
      std::size_t used = 0;
      v = std::stod(body, &used);
      if (used != body.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::runtime_error("import_zero_table: line " + std::to_string(lineno) +
                               ": cannot parse \"" + body + "\"");
    }
    if (!out.empty() && v <= out.back()) {
      throw std::runtime_error("import_zero_table: line " + std::to_string(lineno) +
                               ": ordinates must be strictly ascending");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace zetagap
