#include "gfrac/cf.hpp"

#include <cmath>

namespace gfrac {

namespace {

constexpr double kRescaleAt = 1e100;

struct Stepper {
  Cplx x_prev = Cplx(1), x_cur = Cplx(0);
  Cplx y_prev = Cplx(0), y_cur = Cplx(1);
  double scale = 1.0;

  void advance(Cplx t) {
    const Cplx xn = x_cur + t * x_prev;
    const Cplx yn = y_cur + t * y_prev;
    x_prev = x_cur;
    x_cur = xn;
    y_prev = y_cur;
    y_cur = yn;
    const double m = std::max(std::max(std::abs(x_cur), std::abs(y_cur)),
                              std::max(std::abs(x_prev), std::abs(y_prev)));
    if (m > kRescaleAt) {
      const double inv = 1.0 / m;
      x_prev *= inv;
      x_cur *= inv;
      y_prev *= inv;
      y_cur *= inv;
      scale *= inv;
    }
  }
};

bool finite_term(Cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

CfLimit run_limit(const std::function<CfTerm(int)>& term, Cplx z, double tol, int max_depth,
                  const char* what) {
  if (max_depth < 2) throw ValidityError("continued-fraction depth budget below 2");
  Stepper s;
  Cplx v_prev{};
  bool have_prev = false;
  for (int j = 1; j <= max_depth; ++j) {
    const Cplx t = term(j).at(z);
    if (!finite_term(t))
      throw ValidityError("non-finite partial numerator at term " + std::to_string(j), j);
    s.advance(t);
    if (s.y_cur == Cplx(0)) continue;
    const Cplx v = s.x_cur / s.y_cur;
    if (have_prev && j >= 2 && std::abs(v - v_prev) < tol * std::max(1.0, std::abs(v)))
      return {v, j};
    v_prev = v;
    have_prev = true;
  }
  const Cplx v_last = s.y_cur != Cplx(0) ? s.x_cur / s.y_cur : Cplx(0);
  throw ConvergenceError(std::string(what) + ": no convergence within depth " +
                             std::to_string(max_depth),
                         v_last, v_prev, max_depth);
}

}  // namespace

Cplx ApproximantPair::value() const {
  if (y_cur == Cplx(0)) throw PoleError("approximant denominator vanishes");
  return x_cur / y_cur;
}

ApproximantPair approximant(const CfSpec& spec, int k, Cplx z) {
  if (k < 0) throw ValidityError("approximant index must be >= 0");
  Stepper s;
  for (int j = 1; j <= k; ++j) {
    const Cplx t = spec.term(j).at(z);
    if (!finite_term(t))
      throw ValidityError("non-finite partial numerator at term " + std::to_string(j), j);
    s.advance(t);
  }
  return {s.x_prev, s.x_cur, s.y_prev, s.y_cur, k, s.scale};
}

Cplx modified_approximant(const ApproximantPair& pair, Cplx h) {
  const Cplx den = pair.y_cur - h * pair.y_prev;
  if (den == Cplx(0)) throw PoleError("modified approximant denominator vanishes");
  return (pair.x_cur - h * pair.x_prev) / den;
}

TailValue tail_value(const CfSpec& spec, int k, Cplx z, int depth, double tol) {
  if (depth < 2) throw ValidityError("tail depth budget below 2");
  const CfLimit lim =
      run_limit([&spec, k](int m) { return spec.term(k + m); }, z, tol, depth, "tail_value");
  return {lim.value, k + 1, lim.depth_used};
}

CfLimit cf_limit_full(const CfSpec& spec, Cplx z, double tol, int max_depth) {
  return run_limit([&spec](int m) { return spec.term(m); }, z, tol, max_depth, "cf_limit");
}

Cplx cf_limit(const CfSpec& spec, Cplx z, double tol, int max_depth) {
  return cf_limit_full(spec, z, tol, max_depth).value;
}

Cplx determinant_residual(const ApproximantPair& pair, const CfSpec& spec, Cplx z) {
  if (pair.index < 1) throw ValidityError("determinant residual requires index >= 1");
  const Cplx det = (pair.x_cur * pair.y_prev - pair.x_prev * pair.y_cur) / (pair.scale * pair.scale);
  Cplx prod(1);
  for (int j = 1; j <= pair.index; ++j) prod *= spec.term(j).at(z);
  const double sign = pair.index % 2 == 1 ? 1.0 : -1.0;
  return det - sign * prod;
}

}  // namespace gfrac
