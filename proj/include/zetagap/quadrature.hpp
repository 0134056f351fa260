// Numeric integration over (0,1) for integrands with integrable endpoint
// singularities. The workhorse is tanh-sinh (double-exponential) quadrature:
// the substitution t = (1 + tanh((pi/2) sinh(u)))/2 pushes endpoint behavior
// t^a, a > -1, into a double-exponentially decaying tail, so refinement
// converges at machine-precision rates even for e.g. t^{-1/2}.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace zetagap {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_refinements = 30;

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0))
      throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    if (max_refinements < 1)
      throw std::invalid_argument("QuadratureSpec: max_refinements must be >= 1");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int refinements = 0;
};

// Tolerance not reached within the refinement budget. Carries the best
// value/error seen so callers can decide whether to use it anyway.
class QuadratureFailure : public std::runtime_error {
 public:
  QuadratureFailure(const std::string& what, double best_value, double best_error)
      : std::runtime_error(what), best_value(best_value), best_error(best_error) {}
  double best_value;
  double best_error;
};

// Integrates f over (0,1). `left_singularity_exponent` is the power a such
// that f(t) ~ t^a as t -> 0+; a <= -1 (non-integrable) is rejected.
QuadratureResult integrate_unit(const std::function<double(double)>& f,
                                double left_singularity_exponent,
                                const QuadratureSpec& spec = {});

// Variant for integrands singular at the RIGHT endpoint: f receives both t
// and 1-t, each computed to full relative precision near its own endpoint,
// so e.g. (1-t)^{-1/2} factors can be evaluated without cancellation.
QuadratureResult integrate_unit_endpoint_aware(const std::function<double(double, double)>& f,
                                               double left_singularity_exponent,
                                               const QuadratureSpec& spec = {});

}  // namespace zetagap
