#pragma once

#include "gfrac/gseq.hpp"

namespace gfrac {

/// Gauss 2F1 parameters; c must not be a non-positive integer.
struct Hyp2F1Params {
  double a = 0, b = 0, c = 1;
  Hyp2F1Params() = default;
  Hyp2F1Params(double a_, double b_, double c_);
};

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, int n);
Cplx pochhammer(Cplx a, int n);

/// Power series evaluation on the oracle disk |w| <= 0.9; terms are summed
/// until two consecutive terms fall below 1e-16 relative to the partial sum
/// (guards alternating-term false stops), with a 1e5-term cap.
Cplx hyp2f1(const Hyp2F1Params& p, Cplx w);

/// Truncated Maclaurin coefficients (a)_n (b)_n / ((c)_n n!), n = 0..K.
std::vector<Cplx> hyp2f1_coeffs(const Hyp2F1Params& p, int K);

/// Contiguous relations, reported as |LHS - RHS| / max(1, |LHS|):
///   bc_lower:  F(a,b;c;w) - F(a,b-1;c-1;w) = a(c-b)/((c-1)c) w F(a+1,b;c+1;w)
///   euler:     F(a,b;c;w) = (1-w) F(a+1,b;c;w) + (c-b)/c w F(a+1,b;c+1;w)
///   a_raise:   F(a+1,b;c;w) - F(a,b;c;w) = b/c w F(a+1,b+1;c+1;w)
enum class Contiguous { bc_lower, euler, a_raise };
double contiguous_residual(Contiguous rel, const Hyp2F1Params& p, Cplx w);

/// Named continued-fraction <-> hypergeometric-ratio identities.
///   gauss:    F(a,b;c;w) / F(a,b-1;c-1;w)
///   kustner:  F(a+1,b;c;w) / F(a,b;c;w)
///   g_n:      G_n(w), n >= 1 (shifted Gauss parameter fraction)
///   f_n:      F_n(w), n >= 1 (standalone leading-term fraction)
///   f_gap2:   the Kustner fraction with its second k-parameter removed,
///             assembled from F(a+2,b+2;c+3;w) / F(a+2,b+1;c+2;w)
enum class RatioFamily { gauss, kustner, g_n, f_n, f_gap2 };
struct RatioId {
  RatioFamily family = RatioFamily::gauss;
  int n = 0;  // shift for g_n / f_n
};

/// The named ratio from series evaluations.
Cplx ratio_value(const RatioId& id, const Hyp2F1Params& p, Cplx w);

/// The continued fraction converging to ratio_value(id), with its
/// parameter sequence.
struct RatioCf {
  CfSpec spec;
  GSequence gseq;
};
RatioCf ratio_cf(const RatioId& id, const Hyp2F1Params& p);

/// Residuals of the three-term difference equation
///   P_j(w) = P_{j+1}(w) - d_{j+1} w P_{j+2}(w)
/// for the P-sequence (P_{2j} = F(a+j,b+j;c+2j), P_{2j+1} = F(a+j+1,b+j;c+2j+1))
/// and the companion Q-sequence (Q_{2j+1} = F(a+j,b+j+1;c+2j+1)), whose
/// coefficients are the P-coefficients with a and b interchanged.
struct PqResidual {
  double p = 0, q = 0;
};
PqResidual pq_difference_residual(const Hyp2F1Params& p, int j, Cplx w);

/// Schur parameters of the fraction family: (c-2b)/(c+j) for even j,
/// (c-2a-1)/(c+j) for odd j >= 1. valid reports |alpha| <= 1.
struct SchurClassAlpha {
  Cplx alpha{};
  bool valid = false;
};
SchurClassAlpha schur_class_alpha(double a, double b, double c, int j);

}  // namespace gfrac
