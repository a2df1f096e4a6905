#include "gfrac/gseq.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace gfrac {

namespace {

double checked_g(const GSequence& g, int j) {
  const double v = g(j);
  if (!std::isfinite(v) || v < 0.0 || v > 1.0)
    throw ValidityError("g_" + std::to_string(j) + " = " + std::to_string(v) + " outside [0,1]", j);
  return v;
}

double gauss_g(double a, double b, double c, int j) {
  const int p = j / 2;
  if (j % 2 == 0) return (c - a + p - 1) / (c + 2 * p - 1);
  return (c - b + p) / (c + 2 * p);
}

}  // namespace

GSequence GSequence::from_values(std::vector<double> values) {
  auto data = std::make_shared<std::vector<double>>(std::move(values));
  return from_generator([data](int j) {
    if (j < 0 || j >= static_cast<int>(data->size())) return 0.0;
    return (*data)[static_cast<std::size_t>(j)];
  });
}

GSequence GSequence::from_generator(std::function<double(int)> gen) {
  GSequence s;
  s.g_ = std::move(gen);
  return s;
}

GSequence GSequence::gauss(double a, double b, double c) {
  return from_generator([a, b, c](int j) { return gauss_g(a, b, c, j); });
}

GSequence GSequence::shifted_g(double a, double b, double c, int n) {
  return from_generator([a, b, c, n](int j) { return gauss_g(a, b, c, n + j); });
}

GSequence GSequence::shifted_f(double a, double b, double c, int n) {
  return from_generator([a, b, c, n](int j) {
    if (j == 0) return 0.0;
    return 1.0 - gauss_g(a, b, c, n + j - 1);
  });
}

GSequence GSequence::kustner(double a, double b, double c) { return shifted_f(a, b, c, 1); }

GapSpec GapSpec::single(int k) {
  if (k < 1) throw ValidityError("gap index must be >= 1", k);
  return {Kind::Single, k, 0};
}

GapSpec GapSpec::block(int k, int length) {
  if (k < 1) throw ValidityError("gap index must be >= 1", k);
  if (length < 1) throw ValidityError("gap block length must be >= 1", length);
  return {Kind::Block, k, length};
}

GapSpec GapSpec::pair(int k, int l) {
  if (k < 1) throw ValidityError("gap index must be >= 1", k);
  if (l < k + 2) throw ValidityError("pair gap requires l >= k+2", l);
  return {Kind::Pair, k, l};
}

CfSpec gfrac_spec(const GSequence& g) {
  CfSpec spec;
  spec.leading = {Cplx(1), false};
  spec.partial_num = [g](int n) {
    const double gp = checked_g(g, n - 1);
    const double gn = checked_g(g, n);
    return CfTerm{Cplx(-(1.0 - gp) * gn), true};
  };
  return spec;
}

GSequence gap_sequence(const GSequence& g, const GapSpec& gap) {
  switch (gap.kind) {
    case GapSpec::Kind::Single: {
      const int k = gap.k;
      return GSequence::from_generator([g, k](int j) { return g(j < k ? j : j + 1); });
    }
    case GapSpec::Kind::Block: {
      const int k = gap.k, len = gap.second;
      return GSequence::from_generator([g, k, len](int j) { return g(j < k ? j : j + len); });
    }
    case GapSpec::Kind::Pair: {
      const int k = gap.k, l = gap.second;
      return GSequence::from_generator([g, k, l](int j) {
        if (j < k) return g(j);
        if (j < l - 1) return g(j + 1);
        return g(j + 2);
      });
    }
  }
  throw ValidityError("malformed gap spec");
}

Cplx gap_value_direct(const GSequence& g, const GapSpec& gap, Cplx z, double tol, int max_depth) {
  return cf_limit(gfrac_spec(gap_sequence(g, gap)), z, tol, max_depth);
}

Cplx h_tail(const GSequence& g, int m, Cplx z, double tol, int max_depth) {
  CfSpec spec;
  spec.leading = {Cplx(checked_g(g, m)), true};
  spec.partial_num = [g, m](int n) {
    const double gp = checked_g(g, m + n - 1);
    const double gn = checked_g(g, m + n);
    return CfTerm{Cplx(-(1.0 - gp) * gn), true};
  };
  return cf_limit(spec, z, tol, max_depth);
}

namespace {

// S_k(0;z) - prod_{j<k} d_j z^{k-1} h / (Y_{k-1} Y_k h - Y_k^2), computed in
// the pair's stored (rescaled) entries: the numerator product is replaced by
// the determinant X_k Y_{k-1} - X_{k-1} Y_k, to which it is identically
// equal, making every factor carry the same scale^2.
Cplx structural_combine(const ApproximantPair& pair, Cplx h, Cplx z) {
  if (pair.y_cur == Cplx(0)) throw PoleError("structural formula: Y_k vanishes", z);
  const Cplx det = pair.x_cur * pair.y_prev - pair.x_prev * pair.y_cur;
  const Cplx den = pair.y_prev * pair.y_cur * h - pair.y_cur * pair.y_cur;
  if (den == Cplx(0)) throw PoleError("structural formula: denominator vanishes", z);
  return pair.value() - det * h / den;
}

}  // namespace

Cplx gap_value_structural_single(const GSequence& g, int k, Cplx z, double tol, int max_depth) {
  if (k < 1) throw ValidityError("structural gap formulas require k >= 1", k);
  const ApproximantPair pair = approximant(gfrac_spec(g), k, z);
  const Cplx h = (1.0 - checked_g(g, k - 1)) * h_tail(g, k + 1, z, tol, max_depth);
  return structural_combine(pair, h, z);
}

Cplx gap_value_structural_block(const GSequence& g, int k, int length, Cplx z, double tol,
                                int max_depth) {
  if (k < 1) throw ValidityError("structural gap formulas require k >= 1", k);
  if (length < 1) throw ValidityError("block length must be >= 1", length);
  const ApproximantPair pair = approximant(gfrac_spec(g), k, z);
  const Cplx h = (1.0 - checked_g(g, k - 1)) * h_tail(g, k + length, z, tol, max_depth);
  return structural_combine(pair, h, z);
}

Cplx gap_value_structural_pair(const GSequence& g, int k, int l, Cplx z, double tol,
                               int max_depth) {
  if (k < 1) throw ValidityError("structural gap formulas require k >= 1", k);
  if (l < k + 2) throw ValidityError("pair gap requires l >= k+2", l);
  const int m = l - k - 1;

  const Cplx h_l = (1.0 - checked_g(g, l - 1)) * h_tail(g, l + 1, z, tol, max_depth);

  // (k+1)-th tail fraction: terms t_j = -d_{k+j} z.
  CfSpec tail_spec;
  tail_spec.leading = {Cplx(-(1.0 - checked_g(g, k)) * checked_g(g, k + 1)), true};
  tail_spec.partial_num = [g, k](int n) {
    const double gp = checked_g(g, k + n);
    const double gn = checked_g(g, k + n + 1);
    return CfTerm{Cplx(-(1.0 - gp) * gn), true};
  };
  const ApproximantPair tp = approximant(tail_spec, m, z);

  // Inner formula: the m-th approximant of the tail corrected by h(l;z).
  // prod_{j=k+1..k+m} d_j z^m equals minus the tail-fraction determinant.
  const Cplx det = tp.x_cur * tp.y_prev - tp.x_prev * tp.y_cur;
  const Cplx inner_den = tp.y_cur * tp.y_cur - tp.y_prev * tp.y_cur * h_l;
  if (tp.y_cur == Cplx(0) || inner_den == Cplx(0))
    throw PoleError("pair gap: inner denominator vanishes", z);
  const Cplx inner = tp.value() + det * h_l / inner_den;

  const double one_minus_gk = 1.0 - checked_g(g, k);
  if (one_minus_gk == 0.0)
    throw DegenerateError("pair gap formula degenerates at g_k = 1", k);
  const Cplx h_kl = -(1.0 - checked_g(g, k - 1)) / one_minus_gk * inner;

  const ApproximantPair pair = approximant(gfrac_spec(g), k, z);
  return structural_combine(pair, h_kl, z);
}

}  // namespace gfrac
