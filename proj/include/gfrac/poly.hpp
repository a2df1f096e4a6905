#pragma once

#include <vector>

#include "gfrac/errors.hpp"

namespace gfrac {

/// Polynomial with complex coefficients, stored ascending by degree.
/// Normalized: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list and degree() == -1. Constructors reject NaN/Inf.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  ComplexPoly(std::initializer_list<Cplx> coeffs);
  explicit ComplexPoly(std::vector<Cplx> coeffs);

  static ComplexPoly constant(Cplx c) { return ComplexPoly({c}); }
  /// The monomial z.
  static ComplexPoly z() { return ComplexPoly({Cplx(0), Cplx(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Cplx>& coeffs() const { return coeffs_; }
  /// Coefficient of z^j; zero beyond the stored degree.
  Cplx coeff(int j) const;

  Cplx eval(Cplx z) const;

  ComplexPoly operator+(const ComplexPoly& o) const;
  ComplexPoly operator-(const ComplexPoly& o) const;
  ComplexPoly operator*(const ComplexPoly& o) const;
  ComplexPoly operator*(Cplx s) const;
  ComplexPoly operator-() const;
  /// Multiply by z^m.
  ComplexPoly shifted(int m) const;

  bool operator==(const ComplexPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void normalize();
  std::vector<Cplx> coeffs_;
};

inline ComplexPoly operator*(Cplx s, const ComplexPoly& p) { return p * s; }

/// Reciprocal polynomial at formal degree n: z^n conj(p(1/conj(z))).
/// Coefficient c_j maps to conj(c_{n-j}). Requires n >= degree(p).
ComplexPoly poly_reciprocal(const ComplexPoly& p, int n);

/// All complex roots with multiplicity, by Durand-Kerner iteration
/// (simultaneous Weierstrass updates on the monic normalization).
/// Requires degree >= 1.
std::vector<Cplx> poly_roots(const ComplexPoly& p);

/// Rational function num/den, stored without common-root cancellation.
/// den must not be the zero polynomial.
struct RationalFn {
  ComplexPoly num;
  ComplexPoly den;

  RationalFn(ComplexPoly n, ComplexPoly d);
  Cplx eval(Cplx z) const;
};

/// First K+1 Maclaurin coefficients of the formal quotient num/den.
/// den[0] must be nonzero.
std::vector<Cplx> series_divide(const std::vector<Cplx>& num, const std::vector<Cplx>& den, int K);

/// First K+1 coefficients of the formal product a*b.
std::vector<Cplx> series_multiply(const std::vector<Cplx>& a, const std::vector<Cplx>& b, int K);

}  // namespace gfrac
