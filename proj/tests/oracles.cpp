#include "oracles.hpp"

#include "zetagap/zfunction.hpp"

#include <cmath>
#include <stdexcept>

namespace zetagap::testing {

namespace {

// B_{2j} for j = 1..12
const double kBernoulli[] = {
    1.0 / 6,           -1.0 / 30,         1.0 / 42,           -1.0 / 30,
    5.0 / 66,          -691.0 / 2730,     7.0 / 6,            -3617.0 / 510,
    43867.0 / 798,     -174611.0 / 330,   854513.0 / 138,     -236364091.0 / 2730,
};

}  // namespace

std::complex<double> zeta_euler_maclaurin(std::complex<double> s) {
  const double t = std::abs(s.imag());
  const long N = std::max<long>(50, static_cast<long>(2.0 * t));
  std::complex<double> sum(0.0, 0.0);
  for (long n = 1; n < N; ++n) {
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  }
  const std::complex<double> Ns = std::exp(-s * std::log(static_cast<double>(N)));
  sum += 0.5 * Ns;
  sum += Ns * static_cast<double>(N) / (s - 1.0);

  // Euler-Maclaurin tail: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}
  std::complex<double> rising(1.0, 0.0);
  double fact = 1.0;
  for (int j = 1; j <= 12; ++j) {
    if (j == 1) {
      rising = s;
      fact = 2.0;
    } else {
      rising *= (s + std::complex<double>(2.0 * j - 3.0)) *
                (s + std::complex<double>(2.0 * j - 2.0));
      fact *= (2.0 * j) * (2.0 * j - 1.0);
    }
    sum += kBernoulli[j - 1] / fact * rising * Ns /
           std::pow(static_cast<double>(N), 2.0 * j - 1.0);
  }
  return sum;
}

double hardy_z_oracle(double t, double* imag_out) {
  const std::complex<double> z = zeta_euler_maclaurin(std::complex<double>(0.5, t));
  const double theta = riemann_siegel_theta(t);
  const std::complex<double> phase(std::cos(theta), std::sin(theta));
  const std::complex<double> Z = phase * z;
  if (imag_out) *imag_out = Z.imag();
  return Z.real();
}

double hardy_z_prime_oracle(double t) {
  constexpr double kTwoPi = 6.283185307179586476925287;
  const double theta = riemann_siegel_theta(t);
  const double theta_prime = 0.5 * std::log(t / kTwoPi) - 1.0 / (48.0 * t * t) -
                             7.0 / (1920.0 * t * t * t * t);
  const double tau = std::sqrt(t / kTwoPi);
  const long N = static_cast<long>(tau);
  double sum = 0.0;
  for (long n = 1; n <= N; ++n) {
    const double logn = std::log(static_cast<double>(n));
    sum += -std::sin(theta - t * logn) * (theta_prime - logn) / std::sqrt(n);
  }
  sum *= 2.0;

  // derivative of the leading correction (-1)^{N-1} tau^{-1/2} C0(p)
  auto C0 = [&](double p) {
    double b0 = 0.0, b1 = 0.0;
    const double x = 2.0 * p - 1.0;
    for (int i = detail::kRsCheb0Size - 1; i >= 1; --i) {
      const double v = 2.0 * x * b0 - b1 + detail::kRsCheb0[i];
      b1 = b0;
      b0 = v;
    }
    return x * b0 - b1 + detail::kRsCheb0[0];
  };
  const double p = tau - N;
  const double dtau_dt = 1.0 / (4.0 * M_PI * tau);
  const double h = 1e-6;
  const double c0p = (C0(p + h) - C0(p - h)) / (2.0 * h);
  const double sign = (N % 2 == 1) ? 1.0 : -1.0;
  sum += sign * (-0.5 * std::pow(tau, -1.5) * C0(p) + std::pow(tau, -0.5) * c0p) * dtau_dt;
  return sum;
}

double L_series_oracle(double p, double lambda) {
  if (!(std::fabs(lambda) < 1.0)) throw std::invalid_argument("L_series_oracle: |lambda| >= 1");
  double sum = 0.0;
  double lam_pow = 1.0;
  for (long n = 0; n < 100000; ++n) {
    const double term = lam_pow / (p * n + 1.0);
    sum += term;
    if (std::fabs(term) < 1e-15 && n > 3) break;
    lam_pow *= lambda;
  }
  return sum;
}

}  // namespace zetagap::testing
