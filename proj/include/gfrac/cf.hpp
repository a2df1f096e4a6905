#pragma once

#include <functional>

#include "gfrac/errors.hpp"

namespace gfrac {

/// One partial numerator: either coeff * z or the constant coeff.
struct CfTerm {
  Cplx coeff{};
  bool linear_in_z = true;
  Cplx at(Cplx z) const { return linear_in_z ? coeff * z : coeff; }
};

/// A continued fraction  t1 / (1 + t2 / (1 + t3 / (1 + ...)))  with all
/// partial denominators equal to 1. `leading` is t1; `partial_num(n)` is
/// t_{n+1} for n >= 1. Term generators must be pure.
struct CfSpec {
  CfTerm leading;
  std::function<CfTerm(int)> partial_num;

  CfTerm term(int m) const { return m == 1 ? leading : partial_num(m - 1); }
};

/// Values of the canonical numerator/denominator polynomials at a fixed z:
/// X_{k-1}, X_k, Y_{k-1}, Y_k with X_{-1} = 1, X_0 = 0, Y_{-1} = 0, Y_0 = 1
/// and X_j = X_{j-1} + t_j(z) X_{j-2}. Entries are stored multiplied by
/// `scale` (rescaled when magnitudes exceed 1e100); the ratio is unaffected.
struct ApproximantPair {
  Cplx x_prev{}, x_cur{}, y_prev{}, y_cur{};
  int index = 0;
  double scale = 1.0;

  /// Classical approximant X_k / Y_k.
  Cplx value() const;
};

struct TailValue {
  Cplx value{};
  int start_index = 0;  // first retained term index, k+1
  int depth_used = 0;
};

struct CfLimit {
  Cplx value{};
  int depth_used = 0;
};

inline constexpr double kDefaultTol = 1e-13;
inline constexpr int kDefaultMaxDepth = 2000;

/// Forward (Wallis) recurrence through term k.
ApproximantPair approximant(const CfSpec& spec, int k, Cplx z);

/// (X_k - h X_{k-1}) / (Y_k - h Y_{k-1}): the approximant with the
/// truncation tail 0 replaced by h in the subtracted convention, i.e. the
/// last partial denominator becomes 1 - h.
Cplx modified_approximant(const ApproximantPair& pair, Cplx h);

/// Value of the fraction formed by terms t_{k+1}, t_{k+2}, ... (the k-th
/// tail: the fraction with its first k partial quotients deleted).
TailValue tail_value(const CfSpec& spec, int k, Cplx z, int depth = kDefaultMaxDepth,
                     double tol = kDefaultTol);

/// First approximant v_j with |v_j - v_{j-1}| < tol * max(1, |v_j|).
CfLimit cf_limit_full(const CfSpec& spec, Cplx z, double tol = kDefaultTol,
                      int max_depth = kDefaultMaxDepth);
Cplx cf_limit(const CfSpec& spec, Cplx z, double tol = kDefaultTol,
              int max_depth = kDefaultMaxDepth);

/// X_k Y_{k-1} - X_{k-1} Y_k - sigma (-1)^{k-1} prod_{j=1..k} t_j(z),
/// descaled. sigma = +1; pinned by the determinant tests at k = 1, 2.
/// For a g-fraction the product term equals z^{k-1} prod_{j<k} d_j.
Cplx determinant_residual(const ApproximantPair& pair, const CfSpec& spec, Cplx z);

}  // namespace gfrac
