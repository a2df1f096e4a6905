#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gfrac/poly.hpp"

namespace gfrac {

/// Parameter sequence {alpha_j} in the closed unit disk, with an optional
/// single-index replacement record (k, beta). Explicit lists are
/// zero-extended. Queries validate |alpha_j| <= 1.
class SchurParams {
 public:
  SchurParams() = default;

  Cplx alpha(int j) const;

  SchurParams with_replacement(int k, Cplx beta) const;
  const std::optional<std::pair<int, Cplx>>& replacement() const { return replacement_; }

  static SchurParams from_values(std::vector<Cplx> values);
  static SchurParams from_generator(std::function<Cplx(int)> gen);
  /// alpha_0 = 1/2, alpha_n = 2/(2n+1): the parameters of f(z) = (1+z)/2.
  static SchurParams example31();

 private:
  std::function<Cplx(int)> alpha_ = [](int) { return Cplx(0); };
  std::optional<std::pair<int, Cplx>> replacement_;
};

/// Numerator/denominator polynomial of the Schur fraction at index n.
struct SchurPair {
  ComplexPoly a, b;
  int n = 0;
};

/// A_n, B_n for n = 0..up_to via the even recurrence
///   A_{2n} = alpha_n A_{2n-1} + A_{2n-2}
/// and the odd recurrence
///   A_{2n+1} = conj(alpha_n) z A_{2n} + (1-|alpha_n|^2) z A_{2n-1},
/// from A_0 = alpha_0, B_0 = 1, A_1 = z, B_1 = conj(alpha_0) z.
std::vector<SchurPair> schur_pairs(const SchurParams& params, int up_to);

/// A_{2n}(z) / B_{2n}(z) by per-point recurrence (no coefficient vectors);
/// converges to the Schur function as n grows.
Cplx schur_approximant(const SchurParams& params, int n, Cplx z);

/// 2x2 polynomial matrix T relating perturbed to unperturbed Schur-fraction
/// pairs: for p >= 2k,
///   z^k prod_{j=0..k} (1-|alpha_j|^2) [A'_{2p+1} A'_{2p}; B'_{2p+1} B'_{2p}]
///     = T [A_{2p+1} A_{2p}; B_{2p+1} B_{2p}].
/// The scalar factor is scalar_coeff * z^z_power.
struct TransferMatrix {
  ComplexPoly t11, t12, t21, t22;
  double scalar_coeff = 1.0;
  int z_power = 0;
  int k = 0;
};

/// Entries built from
///   p_k = (alpha_k - beta) B_{2k-1} + (1 - conj(alpha_k) beta) B_{2k-2},
///   q_k = (beta - alpha_k) A_{2k-1} - (1 - conj(alpha_k) beta) A_{2k-2},
/// with reciprocals taken at degree k:
///   T = [p A_{2k-1} + q* A_{2k-2},  q A_{2k-1} + p* A_{2k-2};
///        p B_{2k-1} + q* B_{2k-2},  q B_{2k-1} + p* B_{2k-2}].
/// Requires k >= 1, |beta| <= 1, and |alpha_j| < 1 for j <= k.
TransferMatrix perturb_transfer_matrix(const SchurParams& params, int k, Cplx beta);

/// (T12 + T11 f) / (T22 + T21 f) applied to a rational Schur function.
RationalFn perturbed_schur(const TransferMatrix& t, const RationalFn& f);
/// Same map applied pointwise, given f(z).
Cplx perturbed_schur_at(const TransferMatrix& t, Cplx f_z, Cplx z);

/// C = (1 + z f) / (1 - z f) and its inverse f = (C - 1) / (z (C + 1)).
RationalFn schur_to_caratheodory(const RationalFn& f);
RationalFn caratheodory_to_schur(const RationalFn& c);
Cplx schur_to_caratheodory_at(Cplx f_z, Cplx z);
Cplx caratheodory_to_schur_at(Cplx c_z, Cplx z);

/// C' = (Y- + Y+ C) / (W- + W+ C) with
///   Y+- = z (T22 + z T12) +- (T21 + z T11),
///   W+- = z (T22 - z T12) +- (T21 - z T11).
RationalFn perturbed_caratheodory(const TransferMatrix& t, const RationalFn& c);
Cplx perturbed_caratheodory_at(const TransferMatrix& t, Cplx c_z, Cplx z);

/// Subordination report for an affine f(z) = c z + d: samples
/// w(z) = (f_pert(z) - d) / c on a polar grid of n_radii x n_angles points
/// with 0 < |z| <= radius and records max |w(z)| / |z|.
struct SubordinationReport {
  double max_ratio = 0.0;
  Cplx worst_z{};
  int samples = 0;
  bool pass = false;  // max_ratio < 1
};
SubordinationReport subordination_check(Cplx c, Cplx d, const std::function<Cplx(Cplx)>& f_pert,
                                        double radius, int n_radii, int n_angles);

/// gamma_0 = 1, gamma_{p+1} = (gamma_p - conj(alpha_p)) / (1 - alpha_p gamma_p),
/// returned for p = 0..up_to.
std::vector<Cplx> gamma_sequence(const SchurParams& params, int up_to);

/// Bilinear coefficients relating the perturbed gamma sequence to the
/// unperturbed one at index k+j:
///   gamma'_{k+j} = (conj(a) gamma_{k+j} - b) / (-conj(b) gamma_{k+j} + a),
/// with the j = 1 seed and the 2x2 update for j >= 2. residual is the
/// defect of that relation against the directly recomputed gamma'_{k+j}.
struct GammaBilinear {
  Cplx a{}, b{};
  double residual = 0.0;
};
GammaBilinear gamma_bilinear(const SchurParams& params, int k, Cplx beta, int j);

/// alpha = 1 - 2g for g in [0,1], and g = (1 - alpha)/2 for real alpha in [-1,1].
double alpha_from_g(double g);
double g_from_alpha(double alpha);

}  // namespace gfrac
