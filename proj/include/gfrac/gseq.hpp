#pragma once

#include <functional>
#include <vector>

#include "gfrac/cf.hpp"

namespace gfrac {

/// Parameter sequence {g_j} of a g-fraction. Backed either by an explicit
/// list (implicitly zero-extended, so the fraction terminates past the last
/// entry) or by a named generator. Values are validated to lie in [0,1]
/// where the fraction machinery queries them.
class GSequence {
 public:
  GSequence() = default;

  double operator()(int j) const { return g_(j); }

  static GSequence from_values(std::vector<double> values);
  static GSequence from_generator(std::function<double(int)> gen);

  /// Parameters of the Gauss fraction for F(a,b;c;w)/F(a,b-1;c-1;w):
  /// g_{2p} = (c-a+p-1)/(c+2p-1), g_{2p+1} = (c-b+p)/(c+2p).
  static GSequence gauss(double a, double b, double c);
  /// {g_n, g_{n+1}, ...}: the Gauss parameters shifted by n.
  static GSequence shifted_g(double a, double b, double c, int n);
  /// {0, k_n, k_{n+1}, ...} with k_p = 1 - g_p; the fraction whose first
  /// partial numerator is the standalone term k_n w.
  static GSequence shifted_f(double a, double b, double c, int n);
  /// shifted_f at n = 1: the fraction for F(a+1,b;c;w)/F(a,b;c;w).
  static GSequence kustner(double a, double b, double c);

 private:
  std::function<double(int)> g_;
};

/// Gap pattern: deletion of indices from a parameter sequence.
struct GapSpec {
  enum class Kind { Single, Block, Pair };
  Kind kind = Kind::Single;
  int k = 1;
  int second = 0;  // block: length; pair: index l (l >= k+2)

  static GapSpec single(int k);
  static GapSpec block(int k, int length);
  static GapSpec pair(int k, int l);
};

/// The g-fraction 1/1 - (1-g_0)g_1 z/1 - (1-g_1)g_2 z/1 - ... as a CfSpec:
/// leading 1 and n-th partial numerator -(1-g_{n-1}) g_n z. Queries throw
/// ValidityError (naming the index) if any g_j falls outside [0,1].
CfSpec gfrac_spec(const GSequence& g);

/// The sequence with the gap's indices deleted and later entries shifted
/// down (index removal, not zeroing).
GSequence gap_sequence(const GSequence& g, const GapSpec& gap);

/// Ground truth for the structural formulas: the limit of the g-fraction
/// built on the gapped sequence.
Cplx gap_value_direct(const GSequence& g, const GapSpec& gap, Cplx z, double tol = kDefaultTol,
                      int max_depth = kDefaultMaxDepth);

/// H_m(z) = g_m z / (1 - (1-g_m) g_{m+1} z / (1 - ...)): the tail fraction
/// whose first numerator is g_m z.
Cplx h_tail(const GSequence& g, int m, Cplx z, double tol = kDefaultTol,
            int max_depth = kDefaultMaxDepth);

/// Structural value of the fraction with g_k removed (k >= 1):
///   S_k(0;z) - prod_{j<k} d_j z^{k-1} h / (Y_{k-1} Y_k h - Y_k^2),
/// with h = (1-g_{k-1}) H_{k+1}(z) and d_j = (1-g_{j-1}) g_j.
Cplx gap_value_structural_single(const GSequence& g, int k, Cplx z, double tol = kDefaultTol,
                                 int max_depth = kDefaultMaxDepth);

/// Same structural form with length consecutive parameters g_k..g_{k+length-1}
/// removed; h = (1-g_{k-1}) H_{k+length}(z).
Cplx gap_value_structural_block(const GSequence& g, int k, int length, Cplx z,
                                double tol = kDefaultTol, int max_depth = kDefaultMaxDepth);

/// Two parameters g_k and g_l removed, l = k+m+1 with m >= 1. The inner
/// tail h(k,l;z) is assembled from the m-th approximant of the (k+1)-th
/// tail fraction corrected by h(l;z); the outer formula is as in the
/// single-gap case.
Cplx gap_value_structural_pair(const GSequence& g, int k, int l, Cplx z, double tol = kDefaultTol,
                               int max_depth = kDefaultMaxDepth);

}  // namespace gfrac
