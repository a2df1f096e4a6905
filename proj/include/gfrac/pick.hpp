#pragma once

#include <string>

#include "gfrac/hyp.hpp"

namespace gfrac {

/// Result of one numerical certification check.
struct CheckReport {
  std::string check;
  std::string params;
  int order = 0;  // difference order K or grid size
  double worst = 0.0;
  double slack = 0.0;
  bool pass = false;
  int fail_j = -1, fail_k = -1;  // worst (j,k) for difference checks
  int eval_failures = 0;
};

/// The six certified hypergeometric-ratio maps, indexed 1..6:
///   1: F(a+1,b+1;c+1;w) / F(a+1,b;c+1;w)        2: w * (1)
///   3: F(a+2,b+1;c+2;w) / F(a+1,b;c+1;w)        4: w * (3)
///   5: F(a+2,b+1;c+2;w) / F(a+1,b+1;c+1;w)      6: w * (5)
/// Hypothesis: -1 < a <= c and 0 <= b <= c.
void require_pick_hypothesis(const Hyp2F1Params& p);

/// Raw Maclaurin coefficients of map `index` through order K, via formal
/// series division of the truncated 2F1 coefficient lists. Even indices are
/// exact one-place shifts of their odd partners.
std::vector<double> pick_ratio_taylor(int index, const Hyp2F1Params& p, int K);

/// The moment sequence certifying map `index`: the Taylor coefficients of
/// the odd partner (the w-multiplied maps share their partner's measure).
std::vector<double> pick_ratio_moments(int index, const Hyp2F1Params& p, int K);

/// Map value on the slit plane, evaluated through the continued fractions
/// (valid far outside the series disk): map 1 is the n=2 standalone-term
/// fraction, map 3 the product G_2 * F_3, map 5 their quotient by map 1.
Cplx pick_ratio_value(int index, const Hyp2F1Params& p, Cplx w);

/// Hausdorff criterion: (-1)^k Delta^k nu_j >= 0 for all j + k <= K.
/// worst violation = max(0, -min over (j,k)); pass iff worst <= slack.
CheckReport totally_monotone_check(const std::vector<double>& nu, int K, double slack);

/// 20x20 grid over Re w in [-3, 0.9], Im w in [0.01, 2].
std::vector<Cplx> standard_halfplane_grid();

/// min Im fn(w) over the grid; pass iff min > -1e-12. Evaluation failures
/// are counted per point and fail the check.
CheckReport halfplane_positivity(const std::function<Cplx(Cplx)>& fn, const std::vector<Cplx>& grid);

/// | coeff of w in map 3  -  (k_3 + (1-k_3) k_2) |
/// with k_2 = (a+1)/(c+1), k_3 = (b+1)/(c+2).
double pick_omega_coeff_residual(const Hyp2F1Params& p);

}  // namespace gfrac
