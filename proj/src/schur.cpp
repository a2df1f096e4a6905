#include "gfrac/schur.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace gfrac {

namespace {

constexpr double kUnitDiskSlack = 1e-12;

}  // namespace

Cplx SchurParams::alpha(int j) const {
  if (j < 0) throw ValidityError("Schur parameter index must be >= 0", j);
  Cplx a = alpha_(j);
  if (replacement_ && replacement_->first == j) a = replacement_->second;
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || std::abs(a) > 1.0 + kUnitDiskSlack)
    throw ValidityError("alpha_" + std::to_string(j) + " outside the closed unit disk", j);
  return a;
}

SchurParams SchurParams::with_replacement(int k, Cplx beta) const {
  if (k < 1) throw ValidityError("replacement index must be >= 1", k);
  if (std::abs(beta) > 1.0 + kUnitDiskSlack)
    throw ValidityError("replacement value outside the closed unit disk", k);
  SchurParams p = *this;
  p.replacement_ = {k, beta};
  return p;
}

SchurParams SchurParams::from_values(std::vector<Cplx> values) {
  auto data = std::make_shared<std::vector<Cplx>>(std::move(values));
  return from_generator([data](int j) {
    if (j < 0 || j >= static_cast<int>(data->size())) return Cplx(0);
    return (*data)[static_cast<std::size_t>(j)];
  });
}

SchurParams SchurParams::from_generator(std::function<Cplx(int)> gen) {
  SchurParams p;
  p.alpha_ = std::move(gen);
  return p;
}

SchurParams SchurParams::example31() {
  return from_generator([](int n) { return n == 0 ? Cplx(0.5) : Cplx(2.0 / (2 * n + 1)); });
}

std::vector<SchurPair> schur_pairs(const SchurParams& params, int up_to) {
  if (up_to < 1) throw ValidityError("schur_pairs requires up_to >= 1");
  std::vector<SchurPair> out(static_cast<std::size_t>(up_to) + 1);
  const Cplx a0 = params.alpha(0);
  out[0] = {ComplexPoly::constant(a0), ComplexPoly::constant(Cplx(1)), 0};
  out[1] = {ComplexPoly::z(), ComplexPoly::z() * std::conj(a0), 1};
  for (int n = 1; 2 * n <= up_to; ++n) {
    const Cplx an = params.alpha(n);
    const auto& odd = out[static_cast<std::size_t>(2 * n - 1)];
    const auto& even = out[static_cast<std::size_t>(2 * n - 2)];
    out[static_cast<std::size_t>(2 * n)] = {odd.a * an + even.a, odd.b * an + even.b, 2 * n};
    if (2 * n + 1 <= up_to) {
      const double w = 1.0 - std::norm(an);
      const auto& cur = out[static_cast<std::size_t>(2 * n)];
      out[static_cast<std::size_t>(2 * n + 1)] = {
          (cur.a * std::conj(an) + odd.a * Cplx(w)).shifted(1),
          (cur.b * std::conj(an) + odd.b * Cplx(w)).shifted(1), 2 * n + 1};
    }
  }
  return out;
}

Cplx schur_approximant(const SchurParams& params, int n, Cplx z) {
  const Cplx a0 = params.alpha(0);
  Cplx a_even = a0, b_even = Cplx(1);
  Cplx a_odd = z, b_odd = std::conj(a0) * z;
  for (int m = 1; m <= n; ++m) {
    const Cplx am = params.alpha(m);
    const double w = 1.0 - std::norm(am);
    const Cplx a2 = am * a_odd + a_even;
    const Cplx b2 = am * b_odd + b_even;
    const Cplx a3 = std::conj(am) * z * a2 + w * z * a_odd;
    const Cplx b3 = std::conj(am) * z * b2 + w * z * b_odd;
    a_even = a2;
    b_even = b2;
    a_odd = a3;
    b_odd = b3;
    const double mag = std::max(std::max(std::abs(a_even), std::abs(b_even)),
                                std::max(std::abs(a_odd), std::abs(b_odd)));
    if (mag > 1e100) {
      const double inv = 1.0 / mag;
      a_even *= inv;
      b_even *= inv;
      a_odd *= inv;
      b_odd *= inv;
    }
  }
  if (b_even == Cplx(0)) throw PoleError("Schur approximant denominator vanishes", z);
  return a_even / b_even;
}

TransferMatrix perturb_transfer_matrix(const SchurParams& params, int k, Cplx beta) {
  if (k < 1) throw ValidityError("transfer matrix requires k >= 1", k);
  if (std::abs(beta) > 1.0 + kUnitDiskSlack)
    throw ValidityError("beta outside the closed unit disk", k);

  double scalar = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double w = 1.0 - std::norm(params.alpha(j));
    if (w == 0.0)
      throw DegenerateError("transfer matrix degenerates: |alpha_" + std::to_string(j) + "| = 1", j);
    scalar *= w;
  }

  const auto pairs = schur_pairs(params, 2 * k - 1);
  const ComplexPoly& a_odd = pairs[static_cast<std::size_t>(2 * k - 1)].a;
  const ComplexPoly& b_odd = pairs[static_cast<std::size_t>(2 * k - 1)].b;
  const ComplexPoly& a_even = pairs[static_cast<std::size_t>(2 * k - 2)].a;
  const ComplexPoly& b_even = pairs[static_cast<std::size_t>(2 * k - 2)].b;

  const Cplx ak = params.alpha(k);
  const Cplx u = ak - beta;
  const Cplx v = Cplx(1) - std::conj(ak) * beta;

  const ComplexPoly p = b_odd * u + b_even * v;
  const ComplexPoly q = a_odd * (-u) - a_even * v;
  const ComplexPoly ps = poly_reciprocal(p, k);
  const ComplexPoly qs = poly_reciprocal(q, k);

  TransferMatrix t;
  t.t11 = p * a_odd + qs * a_even;
  t.t12 = q * a_odd + ps * a_even;
  t.t21 = p * b_odd + qs * b_even;
  t.t22 = q * b_odd + ps * b_even;
  t.scalar_coeff = scalar;
  t.z_power = k;
  t.k = k;
  return t;
}

RationalFn perturbed_schur(const TransferMatrix& t, const RationalFn& f) {
  return {t.t12 * f.den + t.t11 * f.num, t.t22 * f.den + t.t21 * f.num};
}

Cplx perturbed_schur_at(const TransferMatrix& t, Cplx f_z, Cplx z) {
  const Cplx den = t.t22.eval(z) + t.t21.eval(z) * f_z;
  if (den == Cplx(0)) throw PoleError("perturbed Schur function pole", z);
  return (t.t12.eval(z) + t.t11.eval(z) * f_z) / den;
}

RationalFn schur_to_caratheodory(const RationalFn& f) {
  const ComplexPoly zn = f.num.shifted(1);
  return {f.den + zn, f.den - zn};
}

RationalFn caratheodory_to_schur(const RationalFn& c) {
  return {c.num - c.den, (c.num + c.den).shifted(1)};
}

Cplx schur_to_caratheodory_at(Cplx f_z, Cplx z) {
  const Cplx den = Cplx(1) - z * f_z;
  if (den == Cplx(0)) throw PoleError("Caratheodory bridge pole", z);
  return (Cplx(1) + z * f_z) / den;
}

Cplx caratheodory_to_schur_at(Cplx c_z, Cplx z) {
  const Cplx den = z * (c_z + Cplx(1));
  if (den == Cplx(0)) throw PoleError("inverse Caratheodory bridge pole", z);
  return (c_z - Cplx(1)) / den;
}

namespace {

void caratheodory_transforms(const TransferMatrix& t, ComplexPoly& y_plus, ComplexPoly& y_minus,
                             ComplexPoly& w_plus, ComplexPoly& w_minus) {
  const ComplexPoly even_part = (t.t22 + t.t12.shifted(1)).shifted(1);
  const ComplexPoly even_part_m = (t.t22 - t.t12.shifted(1)).shifted(1);
  const ComplexPoly odd_part = t.t21 + t.t11.shifted(1);
  const ComplexPoly odd_part_m = t.t21 - t.t11.shifted(1);
  y_plus = even_part + odd_part;
  y_minus = even_part - odd_part;
  w_plus = even_part_m + odd_part_m;
  w_minus = even_part_m - odd_part_m;
}

}  // namespace

RationalFn perturbed_caratheodory(const TransferMatrix& t, const RationalFn& c) {
  ComplexPoly yp, ym, wp, wm;
  caratheodory_transforms(t, yp, ym, wp, wm);
  return {ym * c.den + yp * c.num, wm * c.den + wp * c.num};
}

Cplx perturbed_caratheodory_at(const TransferMatrix& t, Cplx c_z, Cplx z) {
  ComplexPoly yp, ym, wp, wm;
  caratheodory_transforms(t, yp, ym, wp, wm);
  const Cplx den = wm.eval(z) + wp.eval(z) * c_z;
  if (den == Cplx(0)) throw PoleError("perturbed Caratheodory pole", z);
  return (ym.eval(z) + yp.eval(z) * c_z) / den;
}

SubordinationReport subordination_check(Cplx c, Cplx d, const std::function<Cplx(Cplx)>& f_pert,
                                        double radius, int n_radii, int n_angles) {
  if (c == Cplx(0)) throw DomainError("subordination check requires an invertible affine f");
  if (radius <= 0.0 || radius >= 1.0) throw ValidityError("subordination radius must lie in (0,1)");
  SubordinationReport rep;
  for (int i = 1; i <= n_radii; ++i) {
    const double r = radius * i / n_radii;
    for (int j = 0; j < n_angles; ++j) {
      const double th = 2.0 * M_PI * j / n_angles;
      const Cplx z = std::polar(r, th);
      const Cplx w = (f_pert(z) - d) / c;
      const double ratio = std::abs(w) / std::abs(z);
      ++rep.samples;
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.worst_z = z;
      }
    }
  }
  rep.pass = rep.max_ratio < 1.0;
  return rep;
}

std::vector<Cplx> gamma_sequence(const SchurParams& params, int up_to) {
  std::vector<Cplx> g(static_cast<std::size_t>(up_to) + 1);
  g[0] = Cplx(1);
  for (int p = 0; p < up_to; ++p) {
    const Cplx ap = params.alpha(p);
    const Cplx den = Cplx(1) - ap * g[static_cast<std::size_t>(p)];
    if (den == Cplx(0))
      throw DegenerateError("gamma recurrence degenerates at index " + std::to_string(p), p);
    g[static_cast<std::size_t>(p + 1)] = (g[static_cast<std::size_t>(p)] - std::conj(ap)) / den;
  }
  return g;
}

GammaBilinear gamma_bilinear(const SchurParams& params, int k, Cplx beta, int j) {
  if (k < 1 || j < 1) throw ValidityError("gamma_bilinear requires k >= 1 and j >= 1");
  const Cplx ak = params.alpha(k);
  const double wb = 1.0 - std::norm(beta);
  if (wb == 0.0) throw DegenerateError("gamma_bilinear degenerates at |beta| = 1", k);

  Cplx a = (Cplx(1) - std::conj(ak) * beta) / wb;
  Cplx b = (std::conj(beta) - std::conj(ak)) / wb;
  for (int i = 2; i <= j; ++i) {
    const Cplx am = params.alpha(k + i - 1);
    const double wa = 1.0 - std::norm(am);
    if (wa == 0.0)
      throw DegenerateError("gamma_bilinear degenerates at |alpha_" + std::to_string(k + i - 1) +
                                "| = 1",
                            k + i - 1);
    const Cplx u = a - std::conj(am) * std::conj(b);
    const Cplx v = b - std::conj(am) * std::conj(a);
    a = (u + am * v) / wa;
    b = (std::conj(am) * u + v) / wa;
  }

  const auto gam = gamma_sequence(params, k + j);
  const auto gam_p = gamma_sequence(params.with_replacement(k, beta), k + j);
  const Cplx g = gam[static_cast<std::size_t>(k + j)];
  const Cplx den = -std::conj(b) * g + a;
  if (den == Cplx(0)) throw DegenerateError("gamma_bilinear transform denominator vanishes", k + j);
  const Cplx predicted = (std::conj(a) * g - b) / den;
  return {a, b, std::abs(gam_p[static_cast<std::size_t>(k + j)] - predicted)};
}

double alpha_from_g(double g) {
  if (!(g >= 0.0 && g <= 1.0)) throw ValidityError("g outside [0,1]");
  return 1.0 - 2.0 * g;
}

double g_from_alpha(double alpha) {
  if (!(alpha >= -1.0 && alpha <= 1.0)) throw ValidityError("alpha outside [-1,1]");
  return (1.0 - alpha) / 2.0;
}

}  // namespace gfrac
