#include "zetagap/opial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zetagap {

void OpialTriple::validate() const {
  if (!(p > 0)) throw std::invalid_argument("OpialTriple: require p > 0");
  if (!(r > 1)) throw std::invalid_argument("OpialTriple: require r > 1");
  if (q == r) throw std::invalid_argument("OpialTriple: q = r rejected (division by r - q)");
  if (!(q >= 0 && q < r)) throw std::invalid_argument("OpialTriple: require 0 <= q < r");
}

namespace {

// Quadrature tolerances two orders tighter than requested, so that the
// propagated error on K stays below the caller's spec.
QuadratureSpec tightened(const QuadratureSpec& spec) {
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 1e-2;
  inner.rel_tol = spec.rel_tol * 1e-2;
  return inner;
}

}  // namespace

BoydBreakdown boyd_K(const OpialTriple& triple, const QuadratureSpec& spec) {
  triple.validate();
  spec.validate();
  const double p = triple.p, q = triple.q, r = triple.r;
  const double c = r * (q - 1) / (r - q);
  const double expo = -(p + q + r * p) / (r * p);

  // I = int_0^1 (1 + c t)^expo (1 + (q-1) t) t^{1/p-1} dt, substituted t = u^p.
  // For q = 0 the bracket pair collapses to (1-t)^{expo+1}, singular at u = 1;
  // 1 - u^p is then formed from the exact distance d = 1-u via expm1/log1p.
  auto integrand = [&](double u, double one_minus_u) -> double {
    double base, bracket;
    if (q == 0.0) {
      const double one_minus_up = -std::expm1(p * std::log1p(-one_minus_u));
      return p * std::pow(one_minus_up, expo + 1.0);
    }
    const double up = std::pow(u, p);
    base = 1.0 + c * up;
    bracket = 1.0 + (q - 1.0) * up;
    return p * std::pow(base, expo) * bracket;
  };

  const QuadratureSpec inner = tightened(spec);
  QuadratureResult I = integrate_unit_endpoint_aware(integrand, 0.0, inner);

  const double beta = std::pow((p * (r - 1) + (r - q)) / ((r - 1) * (p + q)), 1.0 / r);
  const double K = (r - q) * std::pow(p, p) / ((r - 1) * (p + q)) *
                   std::pow(beta, p + q - r) * std::pow(I.value, -p);

  BoydBreakdown out;
  out.I_value = I.value;
  out.beta_value = beta;
  out.K_value = K;
  out.error_estimate = p * K / I.value * I.error_estimate;
  return out;
}

namespace {

LValue L_generic(double p_exponent, double lambda, double p, double q,
                 const QuadratureSpec& spec) {
  if (!(lambda < 1.0))
    throw std::invalid_argument("L(p,q): lambda >= 1 (non-integrable pole inside [0,1])");
  LValue out;
  out.p = p;
  out.q = q;
  out.lambda = lambda;
  if (lambda == 0.0) {  // integrand identically 1
    out.value = 1.0;
    out.error_estimate = 0.0;
    return out;
  }
  const QuadratureSpec inner = tightened(spec);
  QuadratureResult res = integrate_unit(
      [=](double s) { return 1.0 / (1.0 - lambda * std::pow(s, p_exponent)); }, 0.0, inner);
  out.value = res.value;
  out.error_estimate = res.error_estimate;
  return out;
}

}  // namespace

LValue L_pq(double p, double q, const QuadratureSpec& spec) {
  spec.validate();
  if (!(p > 0)) throw std::invalid_argument("L(p,q): require p > 0");
  if (q == 0.0) throw std::invalid_argument("L(p,q): q = 0 rejected (lambda undefined)");
  const double lambda = (p + q) * (q - 1) / ((p + q - 1) * q);
  return L_generic(p, lambda, p, q, spec);
}

double K_conjugate(double p, double q, const QuadratureSpec& spec) {
  if (q == 0.0)
    throw std::invalid_argument("K_conjugate: q = 0 excluded; use boyd_K for the q = 0 case");
  const LValue L = L_pq(p, q, spec);
  return q * std::pow(p + q, p - 1) / std::pow(p * L.value + q, p);
}

namespace {

LValue L_mixed(int h, int k, const QuadratureSpec& spec) {
  if (h < 1 || h >= k) throw std::invalid_argument("K(h,k): require 1 <= h < k");
  // Identical to L(2k-2h, 2h): same exponent and the same lambda after
  // cancelling a factor of 2.
  return L_pq(2.0 * (k - h), 2.0 * h, spec);
}

}  // namespace

double K_mixed_paper(int h, int k, const QuadratureSpec& spec) {
  const LValue L = L_mixed(h, k, spec);
  return h * std::pow(k, 2 * k - 1) / std::pow((k - h) * L.value + h, 2 * k);
}

double K_mixed_derived(int h, int k, const QuadratureSpec& spec) {
  const LValue L = L_mixed(h, k, spec);
  return h * std::pow(k, 2 * (k - h) - 1) / std::pow((k - h) * L.value + h, 2 * (k - h));
}

}  // namespace zetagap
