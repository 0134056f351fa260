// Best constants for Opial-type inequalities, evaluated by quadrature.
//
// boyd_K computes the sharp constant K(p,q,r) of the general inequality
//   int |y|^p |y'|^q <= K(p,q,r) (b-a)^{r-q} (int |y'|^r)^{(p+q)/r}
// through the integral I(p,q,r) and the factor beta. K_conjugate is the
// closed r = p+q form built from L(p,q); K_mixed_paper / K_mixed_derived are
// the two published variants of the even-exponent specialization K(h,k)
// (they disagree; both are kept so the discrepancy can be audited).
#pragma once

#include "zetagap/quadrature.hpp"

namespace zetagap {

struct OpialTriple {
  double p;  // exponent of |y|, > 0
  double q;  // exponent of |y'|, in [0, r)
  double r;  // integrability exponent, > 1

  void validate() const;
};

struct BoydBreakdown {
  double I_value;
  double beta_value;
  double K_value;
  double error_estimate;
};

struct LValue {
  double p;
  double q;
  double lambda;  // (p+q)(q-1)/((p+q-1)q)
  double value;   // int_0^1 ds/(1 - lambda s^p)
  double error_estimate;
};

// K(p,q,r), I(p,q,r), beta per Boyd's theorem. The I integrand carries a
// t^{1/p-1} factor at t=0; it is integrated after the substitution t = u^p,
// which removes the left singularity entirely.
BoydBreakdown boyd_K(const OpialTriple& triple, const QuadratureSpec& spec = {});

// L(p,q) = int_0^1 ds/(1 - lambda s^p); requires q != 0 and lambda < 1.
LValue L_pq(double p, double q, const QuadratureSpec& spec = {});

// K(p,q,p+q) = q (p+q)^{p-1} / (p L(p,q) + q)^p  (q != 0).
double K_conjugate(double p, double q, const QuadratureSpec& spec = {});

// K(h,k) as printed: h k^{2k-1} / ((k-h) L + h)^{2k}, L with exponent 2k-2h
// and lambda = k(2h-1)/(h(2k-1)). This is the variant behind the published
// mixed-bound table.
double K_mixed_paper(int h, int k, const QuadratureSpec& spec = {});

// K(h,k) from substituting p = 2k-2h, q = 2h into the r = p+q constant:
// h k^{2k-2h-1} / ((k-h) L + h)^{2k-2h}. Kept for auditing; differs from
// K_mixed_paper by the factor k^{2h} / ((k-h)L+h)^{2h}.
double K_mixed_derived(int h, int k, const QuadratureSpec& spec = {});

}  // namespace zetagap
