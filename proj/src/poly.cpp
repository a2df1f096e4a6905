#include "gfrac/poly.hpp"

#include <algorithm>
#include <cmath>

namespace gfrac {

namespace {

bool finite(Cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(const std::vector<Cplx>& coeffs) {
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!finite(coeffs[j]))
      throw ValidityError("non-finite polynomial coefficient at index " + std::to_string(j),
                          static_cast<int>(j));
  }
}

}  // namespace

ComplexPoly::ComplexPoly(std::initializer_list<Cplx> coeffs) : coeffs_(coeffs) {
  require_finite(coeffs_);
  normalize();
}

ComplexPoly::ComplexPoly(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
  require_finite(coeffs_);
  normalize();
}

void ComplexPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Cplx(0)) coeffs_.pop_back();
}

Cplx ComplexPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Cplx(0);
  return coeffs_[static_cast<std::size_t>(j)];
}

Cplx ComplexPoly::eval(Cplx z) const {
  Cplx r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& o) const {
  std::vector<Cplx> r(std::max(coeffs_.size(), o.coeffs_.size()), Cplx(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::operator-(const ComplexPoly& o) const { return *this + (-o); }

ComplexPoly ComplexPoly::operator-() const {
  std::vector<Cplx> r = coeffs_;
  for (auto& c : r) c = -c;
  return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& o) const {
  if (is_zero() || o.is_zero()) return ComplexPoly();
  std::vector<Cplx> r(coeffs_.size() + o.coeffs_.size() - 1, Cplx(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::operator*(Cplx s) const {
  std::vector<Cplx> r = coeffs_;
  for (auto& c : r) c *= s;
  return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::shifted(int m) const {
  if (is_zero()) return ComplexPoly();
  std::vector<Cplx> r(coeffs_.size() + static_cast<std::size_t>(m), Cplx(0));
  std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + m);
  return ComplexPoly(std::move(r));
}

ComplexPoly poly_reciprocal(const ComplexPoly& p, int n) {
  if (n < p.degree())
    throw ValidityError("reciprocal degree " + std::to_string(n) + " below polynomial degree " +
                        std::to_string(p.degree()));
  if (p.is_zero()) return ComplexPoly();
  std::vector<Cplx> r(static_cast<std::size_t>(n) + 1, Cplx(0));
  for (int j = 0; j <= n; ++j) r[static_cast<std::size_t>(j)] = std::conj(p.coeff(n - j));
  return ComplexPoly(std::move(r));
}

std::vector<Cplx> poly_roots(const ComplexPoly& p) {
  if (p.degree() < 1) throw DomainError("poly_roots requires degree >= 1");
  const int n = p.degree();

  // Monic normalization.
  std::vector<Cplx> a(p.coeffs());
  const Cplx lead = a.back();
  for (auto& c : a) c /= lead;

  auto eval_monic = [&](Cplx z) {
    Cplx r(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * z + *it;
    return r;
  };

  // Cauchy-style radius bound for the initial ring of guesses.
  double radius = 0.0;
  for (int j = 0; j < n; ++j) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(j)]));
  radius = 1.0 + radius;

  std::vector<Cplx> x(static_cast<std::size_t>(n));
  const Cplx seed(0.4, 0.9);  // not a root of unity
  Cplx pw = seed;
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = radius * pw;
    pw *= seed;
  }

  const int max_iter = 200;
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Cplx denom(1);
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
      if (denom == Cplx(0)) denom = Cplx(1e-300);
      const Cplx delta = eval_monic(x[static_cast<std::size_t>(i)]) / denom;
      x[static_cast<std::size_t>(i)] -= delta;
      worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(x[static_cast<std::size_t>(i)])));
    }
    if (worst < 1e-15) break;
  }
  return x;
}

RationalFn::RationalFn(ComplexPoly n, ComplexPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw ValidityError("rational function with zero denominator polynomial");
}

Cplx RationalFn::eval(Cplx z) const {
  const Cplx d = den.eval(z);
  if (d == Cplx(0)) throw PoleError("rational function pole", z);
  return num.eval(z) / d;
}

std::vector<Cplx> series_divide(const std::vector<Cplx>& num, const std::vector<Cplx>& den, int K) {
  if (den.empty() || den[0] == Cplx(0))
    throw DomainError("series_divide: constant term of the denominator vanishes");
  std::vector<Cplx> q(static_cast<std::size_t>(K) + 1, Cplx(0));
  for (int k = 0; k <= K; ++k) {
    Cplx s = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : Cplx(0);
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
      s -= den[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = s / den[0];
  }
  return q;
}

std::vector<Cplx> series_multiply(const std::vector<Cplx>& a, const std::vector<Cplx>& b, int K) {
  std::vector<Cplx> r(static_cast<std::size_t>(K) + 1, Cplx(0));
  for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= K && j < static_cast<int>(b.size()); ++j)
      r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return r;
}

}  // namespace gfrac
