// Lower bounds for the normalized zero-gap statistic Lambda, assembled from
// the Opial constants and the exact moment constants. Every result carries
// the hypothesis it depends on; mixed and full bounds also carry the exact
// rational under the root.
#pragma once

#include "zetagap/moments.hpp"
#include "zetagap/opial.hpp"
#include "zetagap/rational.hpp"

#include <optional>
#include <string>

namespace zetagap {

enum class BoundMethod {
  wirtinger_unconditional,
  boyd_unconditional,
  mixed_conditional,
  full_conditional,
  hall_reference,
};

enum class Hypothesis { RH, RH_plus_moment_conjectures };

enum class MixedVariant { paper, derived };

std::string to_string(BoundMethod m);
std::string to_string(Hypothesis h);

struct BoundResult {
  BoundMethod method;
  int k = 0;  // 0 when not applicable
  std::optional<int> h;
  double value = 0.0;
  std::optional<ExactRational> exact_radicand;
  Hypothesis hypothesis = Hypothesis::RH;
  std::string ratio_provenance;  // "computed" / "paper-fixture" for full bounds
};

// Gamma on the positive axis (relative error well under 1e-12 on (0, 50]).
double gamma_real(double x);

// A(k) of the q = 0 Opial reduction; evaluated through Gamma and
// cross-checked against the reflection-formula form to 1e-10.
double A_of_k(int k);

// Lambda >= (1/pi) sqrt(112/(12 K(2,2,4))), K computed live.
BoundResult lambda_wirtinger_unconditional(const QuadratureSpec& spec = {});

// Lambda >= (1/(pi A(2))) (1120/2)^{1/4}; radicand 560 exact.
BoundResult lambda_boyd_unconditional();

// Lambda >= (1/pi) ((1/K(h,k)) b(h,k)/b(k,k))^{1/(2k-2h)}, 1 <= h < k <= 7.
// variant selects which published K(h,k) formula feeds the bound.
BoundResult lambda_mixed(int h, int k, MixedVariant variant = MixedVariant::paper,
                         const QuadratureSpec& spec = {});

// Lambda(k) >= (1/(pi A(k))) (b_k/c_k)^{1/2k}. The exact ratio is supplied by
// the caller along with its provenance ("computed" or "paper-fixture").
BoundResult lambda_full(int k, const ExactRational& ratio_bk_ck,
                        const std::string& ratio_provenance = "computed");

// Hall's reference value sqrt(7533/901) = 2.8915, for comparison reporting.
BoundResult hall_reference();

}  // namespace zetagap
