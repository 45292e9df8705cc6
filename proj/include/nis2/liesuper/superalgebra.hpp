#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nis2/gf/field.hpp"
#include "nis2/gf/matrix.hpp"

namespace nis2::liesuper {

using gf::Elem;
using gf::Vector;

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity((unsigned(a) + unsigned(b)) & 1U);
}
inline unsigned bit(Parity p) { return unsigned(p); }
const char* to_string(Parity p);

/// A finite-dimensional superalgebra over F_p given by structure constants.
///
/// The basis is ordered even vectors first, then odd ones. [e_i, e_j] is
/// stored for every ordered pair. Over F_2 a separate squaring table holds
/// e_i^2 for odd i; the squares of other odd vectors follow from
///   (sum a_i e_i)^2 = sum a_i^2 e_i^2 + sum_{i<j} a_i a_j [e_i, e_j].
/// For odd p there is no squaring table and x^2 means (1/2)[x, x].
///
/// Tables are filled during construction and treated as immutable afterwards.
/// Nothing here enforces the Lie superalgebra axioms; see validate().
class SuperAlgebra {
 public:
  SuperAlgebra(gf::Field f, std::size_t dim_even, std::size_t dim_odd);

  [[nodiscard]] gf::Field field() const { return field_; }
  [[nodiscard]] unsigned p() const { return field_.p(); }
  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] std::size_t dim_even() const { return dim_even_; }
  [[nodiscard]] std::size_t dim_odd() const { return n_ - dim_even_; }
  [[nodiscard]] Parity parity(std::size_t i) const {
    return i < dim_even_ ? Parity::Even : Parity::Odd;
  }
  [[nodiscard]] bool has_squaring_table() const { return field_.is_binary(); }

  [[nodiscard]] Elem bracket_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }
  [[nodiscard]] Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// Sets [e_i, e_j] only.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// Sets [e_i, e_j] and fills [e_j, e_i] by super anti-symmetry.
  void set_bracket_pair(std::size_t i, std::size_t j, const Vector& value);

  /// e_i^2 for an odd basis vector (binary field only).
  [[nodiscard]] Vector basis_square(std::size_t i) const;
  void set_square(std::size_t i, const Vector& value);

  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  [[nodiscard]] std::string label(std::size_t i) const { return labels_.at(i); }

  /// Bilinear extension of the table. Throws std::invalid_argument on length mismatch.
  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;
  /// x^2 for x supported on odd coordinates, for any p (see class comment).
  [[nodiscard]] Vector square(const Vector& x) const;
  /// Matrix of ad_x: column j is [x, e_j].
  [[nodiscard]] gf::Matrix ad(const Vector& x) const;
  [[nodiscard]] gf::Matrix ad_basis(std::size_t i) const;

  [[nodiscard]] bool is_even_vector(const Vector& v) const;
  [[nodiscard]] bool is_odd_vector(const Vector& v) const;

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);

 private:
  gf::Field field_;
  std::size_t n_;
  std::size_t dim_even_;
  std::vector<Elem> table_;    // n^3
  std::vector<Elem> squares_;  // n^2, rows of odd indices only meaningful
  std::vector<std::string> labels_;
};

/// Free-function form of SuperAlgebra::bracket.
[[nodiscard]] Vector bracket_apply(const SuperAlgebra& g, const Vector& x, const Vector& y);

/// Squaring over F_2. Throws std::invalid_argument if x has even support or
/// p != 2 (callers with odd p use (1/2)[x, x], i.e. SuperAlgebra::square).
[[nodiscard]] Vector square_apply(const SuperAlgebra& g, const Vector& x);

/// The abelian superalgebra with zero squaring.
[[nodiscard]] SuperAlgebra abelian(gf::Field f, std::size_t dim_even, std::size_t dim_odd);

/// Renders a coordinate vector with basis labels, e.g. "A + Z" or "2*h1".
[[nodiscard]] std::string format_vector(const SuperAlgebra& g, const Vector& v);

}  // namespace nis2::liesuper
