#include "zetagap/quadrature.hpp"

#include <cmath>

namespace zetagap {

namespace {

// One tanh-sinh abscissa on (0,1): t = (1 + tanh(w))/2, w = (pi/2) sinh(u).
// Computed through exp(-2|w|) so the distance to the NEARER endpoint keeps
// full relative precision down to the underflow limit; t and 1-t are each
// returned in their best-conditioned form.
struct Node {
  double t;
  double one_minus_t;
  double weight;  // dt/du
};

Node make_node(double u) {
  const double w = 1.5707963267948966 * std::sinh(u);
  const double e = std::exp(-2.0 * std::fabs(w));
  const double near_edge = e / (1.0 + e);
  const double far_edge = 1.0 / (1.0 + e);
  Node n;
  if (w >= 0) {
    n.t = far_edge;
    n.one_minus_t = near_edge;
  } else {
    n.t = near_edge;
    n.one_minus_t = far_edge;
  }
  const double sech = 2.0 * std::sqrt(e) / (1.0 + e);  // sech(w)
  n.weight = 0.25 * M_PI * std::cosh(u) * sech * sech;
  return n;
}

// |w| ~ 760: both edge distances below double underflow
constexpr double kUMax = 6.2;
constexpr long kEvalBudget = 4'000'000;

QuadratureResult run_tanh_sinh(const std::function<double(double, double)>& f,
                               const QuadratureSpec& spec) {
  long evals = 0;
  auto eval = [&](double u) -> double {
    Node n = make_node(u);
    if (n.t <= 0.0 || n.one_minus_t <= 0.0) return 0.0;  // underflowed past an endpoint
    ++evals;
    double v = f(n.t, n.one_minus_t) * n.weight;
    if (!std::isfinite(v)) {
      if (n.weight < 1e-280) return 0.0;  // deep tail, below noise
      throw QuadratureFailure("integrate_unit: non-finite integrand value", 0.0, HUGE_VAL);
    }
    return v;
  };

  double h = 1.0;
  double sum = eval(0.0);
  for (long j = 1; j * h <= kUMax; ++j) sum += eval(j * h) + eval(-j * h);
  double integral = sum * h;
  double prev = integral;
  double err = HUGE_VAL;

  for (int level = 1; level <= spec.max_refinements; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (long j = 1; j * h <= kUMax; j += 2) add += eval(j * h) + eval(-j * h);
    sum += add;
    integral = sum * h;
    err = std::fabs(integral - prev);
    const double goal = std::max(spec.abs_tol, spec.rel_tol * std::fabs(integral));
    if (level >= 2 && err <= goal) return {integral, err, level};
    if (evals > kEvalBudget)
      throw QuadratureFailure("integrate_unit: evaluation budget exhausted", integral, err);
    prev = integral;
  }
  throw QuadratureFailure("integrate_unit: tolerance not reached within max_refinements",
                          integral, err);
}

}  // namespace

QuadratureResult integrate_unit(const std::function<double(double)>& f,
                                double left_singularity_exponent,
                                const QuadratureSpec& spec) {
  spec.validate();
  if (!(left_singularity_exponent > -1.0))
    throw std::invalid_argument(
        "integrate_unit: non-integrable left endpoint (exponent <= -1)");
  // Plain integrands see only t; drop nodes once t itself has rounded onto
  // the right endpoint (the deep-left tail keeps full relative precision).
  return run_tanh_sinh(
      [&](double t, double omt) {
        (void)omt;
        if (t >= 1.0) return 0.0;
        return f(t);
      },
      spec);
}

QuadratureResult integrate_unit_endpoint_aware(const std::function<double(double, double)>& f,
                                               double left_singularity_exponent,
                                               const QuadratureSpec& spec) {
  spec.validate();
  if (!(left_singularity_exponent > -1.0))
    throw std::invalid_argument(
        "integrate_unit: non-integrable left endpoint (exponent <= -1)");
  return run_tanh_sinh(f, spec);
}

}  // namespace zetagap
