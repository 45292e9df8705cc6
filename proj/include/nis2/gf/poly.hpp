#pragma once

#include <optional>
#include <vector>

#include "nis2/gf/field.hpp"
#include "nis2/gf/matrix.hpp"

namespace nis2::gf {

/// Univariate polynomial over F_p, coefficients low degree first, no trailing
/// zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(Field f, Elem c) { return Poly(f, {c}); }
  static Poly monomial(Field f, Elem c, std::size_t degree);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return int(c_.size()) - 1; }
  [[nodiscard]] const std::vector<Elem>& coeffs() const { return c_; }
  [[nodiscard]] Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  [[nodiscard]] Elem eval(Elem x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws std::domain_error on division by zero.
  [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& d) const;

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

/// det(a + lambda * b) as a polynomial in lambda, by fraction-free
/// (Bareiss) elimination over F_p[lambda]. Both matrices square, same size.
[[nodiscard]] Poly pencil_determinant(const Matrix& a, const Matrix& b);

/// True iff p has no factor of degree 1..deg/2 over its field. Decided by
/// exhaustive trial division by monic polynomials; degree must be in [1, 8].
[[nodiscard]] bool is_irreducible(const Poly& p);

}  // namespace nis2::gf
