#pragma once

#include <cstddef>

#include "nis2/gf/matrix.hpp"

namespace nis2::forms {

using gf::Elem;
using gf::Vector;

enum class FormParity { Even, Odd, Inhomogeneous };
const char* to_string(FormParity p);

/// A bilinear form on a superspace of format dim_even|dim_odd (even basis
/// vectors first).
///
/// The primary datum is the value matrix V_ij = B(v_i, v_j). The Gram matrix
/// follows the sign convention Gram_ij = (-1)^{p(B)p(v_i)} V_ij, which over
/// F_2 coincides with V. The zero form counts as even.
class BilinearForm {
 public:
  BilinearForm(gf::Matrix values, std::size_t dim_even);
  /// From a Gram matrix of a homogeneous form of the given parity.
  static BilinearForm from_gram(const gf::Matrix& gram, std::size_t dim_even, FormParity parity);

  [[nodiscard]] gf::Field field() const { return values_.field(); }
  [[nodiscard]] std::size_t dim() const { return values_.rows(); }
  [[nodiscard]] std::size_t dim_even() const { return dim_even_; }
  [[nodiscard]] const gf::Matrix& values() const { return values_; }
  [[nodiscard]] gf::Matrix gram() const;
  [[nodiscard]] FormParity parity() const { return parity_; }
  [[nodiscard]] bool is_zero() const { return values_.is_zero(); }
  [[nodiscard]] bool is_nondegenerate() const;
  [[nodiscard]] Elem operator()(const Vector& x, const Vector& y) const;

  /// Gram matrix of the upsetting u(B) (block formula on R,S,T,U).
  [[nodiscard]] gf::Matrix upset_gram() const;
  /// u(B) = B.
  [[nodiscard]] bool is_symmetric() const;

  friend BilinearForm operator+(const BilinearForm& a, const BilinearForm& b);
  friend BilinearForm operator*(Elem s, const BilinearForm& a);
  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.dim_even_ == b.dim_even_ && a.values_ == b.values_;
  }

 private:
  gf::Matrix values_;
  std::size_t dim_even_;
  FormParity parity_;
};

/// Applies u to a Gram matrix of the given parity.
[[nodiscard]] gf::Matrix upset(const gf::Matrix& gram, std::size_t dim_even, FormParity parity);

/// The form B^Π on Π(V): B^Π(Πx, Πy) = (-1)^{p(B) + p(x) + p(x)p(y)} B(x, y).
/// Π(V) is ordered even-first, i.e. the images of the odd vectors of V come
/// first (matching build::parity_swap).
[[nodiscard]] BilinearForm pi_twist(const BilinearForm& b);

}  // namespace nis2::forms
