#include "zetagap/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace zetagap {

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::wirtinger_unconditional: return "wirtinger_unconditional";
    case BoundMethod::boyd_unconditional: return "boyd_unconditional";
    case BoundMethod::mixed_conditional: return "mixed_conditional";
    case BoundMethod::full_conditional: return "full_conditional";
    case BoundMethod::hall_reference: return "hall_reference";
  }
  return "?";
}

std::string to_string(Hypothesis h) {
  return h == Hypothesis::RH ? "RH" : "RH_plus_moment_conjectures";
}

double gamma_real(double x) {
  if (!(x > 0)) throw std::invalid_argument("gamma_real: require x > 0");
  return std::tgamma(x);
}

double A_of_k(int k) {
  if (k < 1) throw std::invalid_argument("A_of_k: require k >= 1");
  const double K = 2.0 * k;
  const double prefactor = std::pow(K / (K - 1.0), 1.0 / K) * std::pow(K, (K - 1.0) / K);
  const double via_gamma = prefactor / (gamma_real(1.0 / K) * gamma_real((K - 1.0) / K));
  const double via_reflection = prefactor * std::sin(M_PI / K) / M_PI;
  if (std::fabs(via_gamma - via_reflection) > 1e-10)
    throw std::runtime_error("A_of_k: Gamma and reflection forms disagree beyond 1e-10");
  return via_gamma;
}

BoundResult lambda_wirtinger_unconditional(const QuadratureSpec& spec) {
  const double K = K_conjugate(2.0, 2.0, spec);
  BoundResult out;
  out.method = BoundMethod::wirtinger_unconditional;
  out.k = 0;
  out.value = std::sqrt(112.0 / (12.0 * K)) / M_PI;
  out.hypothesis = Hypothesis::RH;  // stated unconditional; proof wording assumes RH
  return out;
}

BoundResult lambda_boyd_unconditional() {
  BoundResult out;
  out.method = BoundMethod::boyd_unconditional;
  out.k = 2;
  out.exact_radicand = ExactRational(1120, 2);
  out.value = std::pow(560.0, 0.25) / (M_PI * A_of_k(2));
  out.hypothesis = Hypothesis::RH;
  return out;
}

BoundResult lambda_mixed(int h, int k, MixedVariant variant, const QuadratureSpec& spec) {
  if (h == k) throw std::invalid_argument("lambda_mixed: h = k excluded");
  if (!(1 <= h && h < k && k <= 7))
    throw std::invalid_argument("lambda_mixed: require 1 <= h < k <= 7");
  const double K = (variant == MixedVariant::paper) ? K_mixed_paper(h, k, spec)
                                                    : K_mixed_derived(h, k, spec);
  const ExactRational radicand = b_mixed(h, k) / b_mixed(k, k);
  BoundResult out;
  out.method = BoundMethod::mixed_conditional;
  out.k = k;
  out.h = h;
  out.exact_radicand = radicand;
  out.value = std::pow(radicand.to_double() / K, 1.0 / (2.0 * (k - h))) / M_PI;
  out.hypothesis = Hypothesis::RH_plus_moment_conjectures;
  return out;
}

BoundResult lambda_full(int k, const ExactRational& ratio_bk_ck,
                        const std::string& ratio_provenance) {
  if (k < 1 || k > 15) throw std::invalid_argument("lambda_full: require 1 <= k <= 15");
  if (!ratio_bk_ck.is_positive())
    throw std::invalid_argument("lambda_full: ratio b_k/c_k must be positive");
  BoundResult out;
  out.method = BoundMethod::full_conditional;
  out.k = k;
  out.exact_radicand = ratio_bk_ck;
  out.value = std::pow(ratio_bk_ck.to_double(), 1.0 / (2.0 * k)) / (M_PI * A_of_k(k));
  out.hypothesis = Hypothesis::RH_plus_moment_conjectures;
  out.ratio_provenance = ratio_provenance;
  return out;
}

BoundResult hall_reference() {
  BoundResult out;
  out.method = BoundMethod::hall_reference;
  out.k = 3;
  out.exact_radicand = ExactRational(7533, 901);
  out.value = std::sqrt(7533.0 / 901.0);
  out.hypothesis = Hypothesis::RH_plus_moment_conjectures;
  return out;
}

}  // namespace zetagap
