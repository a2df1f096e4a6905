#include "gfrac/pick.hpp"

#include <cmath>
#include <limits>

#include "gfrac/poly.hpp"

namespace gfrac {

namespace {

struct RatioParams {
  Hyp2F1Params num, den;
};

RatioParams odd_partner_params(int index, const Hyp2F1Params& p) {
  const double a = p.a, b = p.b, c = p.c;
  switch (index) {
    case 1:
    case 2:
      return {{a + 1, b + 1, c + 1}, {a + 1, b, c + 1}};
    case 3:
    case 4:
      return {{a + 2, b + 1, c + 2}, {a + 1, b, c + 1}};
    case 5:
    case 6:
      return {{a + 2, b + 1, c + 2}, {a + 1, b + 1, c + 1}};
    default:
      throw ValidityError("ratio index must be 1..6", index);
  }
}

}  // namespace

void require_pick_hypothesis(const Hyp2F1Params& p) {
  if (!(p.a > -1.0 && p.a <= p.c && p.b >= 0.0 && p.b <= p.c))
    throw DomainError("parameters outside the hypothesis -1 < a <= c, 0 <= b <= c");
}

std::vector<double> pick_ratio_moments(int index, const Hyp2F1Params& p, int K) {
  require_pick_hypothesis(p);
  const RatioParams rp = odd_partner_params(index, p);
  const auto q = series_divide(hyp2f1_coeffs(rp.num, K), hyp2f1_coeffs(rp.den, K), K);
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = q[i].real();
  return out;
}

std::vector<double> pick_ratio_taylor(int index, const Hyp2F1Params& p, int K) {
  std::vector<double> m = pick_ratio_moments(index, p, K);
  if (index % 2 == 0) {
    m.insert(m.begin(), 0.0);
    m.resize(static_cast<std::size_t>(K) + 1);
  }
  return m;
}

Cplx pick_ratio_value(int index, const Hyp2F1Params& p, Cplx w) {
  require_pick_hypothesis(p);
  const double a = p.a, b = p.b, c = p.c;
  auto cf = [&](RatioFamily fam, int n) {
    return cf_limit(ratio_cf({fam, n}, {a, b, c}).spec, w);
  };
  Cplx v;
  switch ((index + 1) / 2) {
    case 1:
      v = cf(RatioFamily::f_n, 2);
      break;
    case 2:
      v = cf(RatioFamily::g_n, 2) * cf(RatioFamily::f_n, 3);
      break;
    case 3: {
      const Cplx f2 = cf(RatioFamily::f_n, 2);
      if (f2 == Cplx(0)) throw PoleError("ratio quotient pole", w);
      v = cf(RatioFamily::g_n, 2) * cf(RatioFamily::f_n, 3) / f2;
      break;
    }
    default:
      throw ValidityError("ratio index must be 1..6", index);
  }
  return index % 2 == 0 ? w * v : v;
}

CheckReport totally_monotone_check(const std::vector<double>& nu, int K, double slack) {
  if (K < 1) throw ValidityError("difference order must be >= 1", K);
  if (static_cast<int>(nu.size()) < K + 1)
    throw ValidityError("sequence shorter than the requested difference order");
  CheckReport rep;
  rep.check = "totally-monotone";
  rep.order = K;
  rep.slack = slack;

  std::vector<double> d(nu.begin(), nu.begin() + K + 1);
  double worst = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    for (int j = 0; j + k <= K; ++j) {
      const double v = sign * d[static_cast<std::size_t>(j)];
      if (-v > worst) {
        worst = -v;
        rep.fail_j = j;
        rep.fail_k = k;
      }
    }
    for (int j = 0; j + k + 1 <= K; ++j)
      d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j + 1)] - d[static_cast<std::size_t>(j)];
  }
  rep.worst = worst;
  rep.pass = worst <= slack;
  if (rep.pass) rep.fail_j = rep.fail_k = -1;
  return rep;
}

std::vector<Cplx> standard_halfplane_grid() {
  std::vector<Cplx> g;
  g.reserve(400);
  for (int i = 0; i < 20; ++i) {
    const double re = -3.0 + (0.9 - (-3.0)) * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double im = 0.01 + (2.0 - 0.01) * j / 19.0;
      g.emplace_back(re, im);
    }
  }
  return g;
}

CheckReport halfplane_positivity(const std::function<Cplx(Cplx)>& fn,
                                 const std::vector<Cplx>& grid) {
  CheckReport rep;
  rep.check = "halfplane-positivity";
  rep.order = static_cast<int>(grid.size());
  rep.slack = 1e-12;
  double min_im = std::numeric_limits<double>::infinity();
  for (const Cplx& w : grid) {
    try {
      min_im = std::min(min_im, fn(w).imag());
    } catch (const Error&) {
      ++rep.eval_failures;
    }
  }
  rep.worst = std::max(0.0, -min_im);
  rep.pass = rep.eval_failures == 0 && min_im > -1e-12;
  return rep;
}

double pick_omega_coeff_residual(const Hyp2F1Params& p) {
  const auto taylor = pick_ratio_taylor(3, p, 1);
  const double k2 = (p.a + 1) / (p.c + 1);
  const double k3 = (p.b + 1) / (p.c + 2);
  return std::abs(taylor[1] - (k3 + (1.0 - k3) * k2));
}

}  // namespace gfrac
