#include "gfrac/hyp.hpp"

#include <cmath>
#include <string>

namespace gfrac {

namespace {

bool nonpositive_integer(double c) { return c <= 0.0 && c == std::floor(c); }

void require_c(double c) {
  if (nonpositive_integer(c))
    throw DomainError("2F1 parameter c = " + std::to_string(c) + " is a non-positive integer");
}

constexpr double kOracleRadius = 0.9;
constexpr double kTermTol = 1e-16;
constexpr int kTermCap = 100000;

}  // namespace

Hyp2F1Params::Hyp2F1Params(double a_, double b_, double c_) : a(a_), b(b_), c(c_) { require_c(c); }

double pochhammer(double a, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

Cplx pochhammer(Cplx a, int n) {
  Cplx r(1);
  for (int i = 0; i < n; ++i) r *= a + Cplx(i);
  return r;
}

Cplx hyp2f1(const Hyp2F1Params& p, Cplx w) {
  if (std::abs(w) > kOracleRadius + 1e-12)
    throw DomainError("2F1 series oracle restricted to |w| <= 0.9");
  Cplx sum(1), term(1);
  int small_streak = 0;
  for (int n = 0; n < kTermCap; ++n) {
    term *= (p.a + n) * (p.b + n) / ((p.c + n) * (1.0 + n)) * w;
    sum += term;
    if (std::abs(term) < kTermTol * std::abs(sum)) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("2F1 series did not meet the term tolerance", sum, sum - term, kTermCap);
}

std::vector<Cplx> hyp2f1_coeffs(const Hyp2F1Params& p, int K) {
  std::vector<Cplx> c(static_cast<std::size_t>(K) + 1);
  double term = 1.0;
  for (int n = 0; n <= K; ++n) {
    c[static_cast<std::size_t>(n)] = term;
    term *= (p.a + n) * (p.b + n) / ((p.c + n) * (1.0 + n));
  }
  return c;
}

double contiguous_residual(Contiguous rel, const Hyp2F1Params& p, Cplx w) {
  const double a = p.a, b = p.b, c = p.c;
  Cplx lhs, rhs;
  switch (rel) {
    case Contiguous::bc_lower: {
      require_c(c - 1);
      require_c(c + 1);
      lhs = hyp2f1(p, w) - hyp2f1({a, b - 1, c - 1}, w);
      rhs = a * (c - b) / ((c - 1) * c) * w * hyp2f1({a + 1, b, c + 1}, w);
      break;
    }
    case Contiguous::euler: {
      require_c(c + 1);
      lhs = hyp2f1(p, w);
      rhs = (Cplx(1) - w) * hyp2f1({a + 1, b, c}, w) + (c - b) / c * w * hyp2f1({a + 1, b, c + 1}, w);
      break;
    }
    case Contiguous::a_raise: {
      require_c(c + 1);
      lhs = hyp2f1({a + 1, b, c}, w) - hyp2f1(p, w);
      rhs = b / c * w * hyp2f1({a + 1, b + 1, c + 1}, w);
      break;
    }
  }
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

namespace {

Cplx ratio_of(const Hyp2F1Params& num, const Hyp2F1Params& den, Cplx w) {
  const Cplx d = hyp2f1(den, w);
  if (d == Cplx(0)) throw PoleError("hypergeometric ratio pole", w);
  return hyp2f1(num, w) / d;
}

}  // namespace

Cplx ratio_value(const RatioId& id, const Hyp2F1Params& p, Cplx w) {
  const double a = p.a, b = p.b, c = p.c;
  switch (id.family) {
    case RatioFamily::gauss:
      return ratio_of({a, b, c}, {a, b - 1, c - 1}, w);
    case RatioFamily::kustner:
      return ratio_of({a + 1, b, c}, {a, b, c}, w);
    case RatioFamily::g_n: {
      if (id.n < 1) throw ValidityError("G_n requires n >= 1", id.n);
      if (id.n % 2 == 0) {
        const int j = id.n / 2;
        return ratio_of({a + j, b + j, c + 2 * j}, {a + j, b + j - 1, c + 2 * j - 1}, w);
      }
      const int j = (id.n - 1) / 2;
      return ratio_of({a + j + 1, b + j, c + 2 * j + 1}, {a + j, b + j, c + 2 * j}, w);
    }
    case RatioFamily::f_n: {
      if (id.n < 1) throw ValidityError("F_n requires n >= 1", id.n);
      if (id.n % 2 == 1) {
        const int j = (id.n - 1) / 2;
        return ratio_of({a + j + 1, b + j, c + 2 * j}, {a + j, b + j, c + 2 * j}, w);
      }
      const int j = id.n / 2 - 1;
      return ratio_of({a + j + 1, b + j + 1, c + 2 * j + 1}, {a + j + 1, b + j, c + 2 * j + 1}, w);
    }
    case RatioFamily::f_gap2: {
      // Kustner fraction with its second k-parameter removed:
      //   S - d1 w h / ((1 - d1 w) h - (1 - d1 w)^2),
      // d1 = b/c, h = (c-b)(b+1)/(c(c+2)) w F(a+2,b+2;c+3;w)/F(a+2,b+1;c+2;w).
      const Cplx r = ratio_of({a + 2, b + 2, c + 3}, {a + 2, b + 1, c + 2}, w);
      const Cplx h = (c - b) * (b + 1) / (c * (c + 2)) * w * r;
      const Cplx d1w = b / c * w;
      const Cplx y2 = Cplx(1) - d1w;
      if (y2 == Cplx(0)) throw PoleError("gap assembly pole", w);
      const Cplx den = y2 * h - y2 * y2;
      if (den == Cplx(0)) throw PoleError("gap assembly pole", w);
      return Cplx(1) / y2 - d1w * h / den;
    }
  }
  throw ValidityError("unknown ratio family");
}

RatioCf ratio_cf(const RatioId& id, const Hyp2F1Params& p) {
  const double a = p.a, b = p.b, c = p.c;
  GSequence g;
  switch (id.family) {
    case RatioFamily::gauss:
      g = GSequence::gauss(a, b, c);
      break;
    case RatioFamily::kustner:
      g = GSequence::kustner(a, b, c);
      break;
    case RatioFamily::g_n:
      if (id.n < 1) throw ValidityError("G_n requires n >= 1", id.n);
      g = GSequence::shifted_g(a, b, c, id.n);
      break;
    case RatioFamily::f_n:
      if (id.n < 1) throw ValidityError("F_n requires n >= 1", id.n);
      g = GSequence::shifted_f(a, b, c, id.n);
      break;
    case RatioFamily::f_gap2:
      g = gap_sequence(GSequence::kustner(a, b, c), GapSpec::single(2));
      break;
  }
  return {gfrac_spec(g), g};
}

PqResidual pq_difference_residual(const Hyp2F1Params& p, int j, Cplx w) {
  if (j < 0) throw ValidityError("difference-equation index must be >= 0", j);
  const double a = p.a, b = p.b, c = p.c;

  auto member = [&](double aa, double bb, int jj) -> Hyp2F1Params {
    if (jj % 2 == 0) {
      const int m = jj / 2;
      return {aa + m, bb + m, c + 2 * m};
    }
    const int m = (jj - 1) / 2;
    return {aa + m + 1, bb + m, c + 2 * m + 1};
  };
  auto coeff = [&](double aa, double bb, int n) -> double {
    if (n % 2 == 1) {
      const int m = (n - 1) / 2;
      return (bb + m) * (c - aa + m) / ((c + 2 * m) * (c + 2 * m + 1));
    }
    const int m = n / 2;
    return (aa + m) * (c - bb + m) / ((c + 2 * m - 1) * (c + 2 * m));
  };
  auto residual = [&](double aa, double bb) {
    const Cplx pj = hyp2f1(member(aa, bb, j), w);
    const Cplx pj1 = hyp2f1(member(aa, bb, j + 1), w);
    const Cplx pj2 = hyp2f1(member(aa, bb, j + 2), w);
    return std::abs(pj - (pj1 - coeff(aa, bb, j + 1) * w * pj2)) / std::max(1.0, std::abs(pj));
  };
  return {residual(a, b), residual(b, a)};
}

SchurClassAlpha schur_class_alpha(double a, double b, double c, int j) {
  if (j < 0) throw ValidityError("Schur class index must be >= 0", j);
  if (c + j == 0.0) throw DomainError("Schur class parameter degenerates: c + j = 0");
  const double v = j % 2 == 0 ? (c - 2 * b) / (c + j) : (c - 2 * a - 1) / (c + j);
  return {Cplx(v), std::abs(v) <= 1.0};
}

}  // namespace gfrac
