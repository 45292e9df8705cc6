#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nis2/gf/field.hpp"
#include "nis2/gf/matrix.hpp"

namespace nis2::gf {

struct Rref {
  Matrix reduced;                    // reduced row-echelon form, same shape as input
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row, increasing
};

/// Reduced row-echelon form. Pivot choice: leftmost column with a nonzero
/// entry at or below the current row, first such row.
[[nodiscard]] Rref rref(const Matrix& m);

[[nodiscard]] std::size_t rank(const Matrix& m);

/// Free-variable basis of {v : m v = 0}, one vector per non-pivot column in
/// increasing column order, with a 1 in that column.
[[nodiscard]] std::vector<Vector> nullspace(const Matrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
/// Throws std::invalid_argument if b has the wrong length.
[[nodiscard]] std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws std::invalid_argument for a non-square matrix.
[[nodiscard]] FieldElem det(const Matrix& m);

[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally maintained row space, kept in reduced echelon form.
///
/// Used to stream large, highly redundant linear systems (one equation at a
/// time) and to grow spans during closure computations.
class RowSpace {
 public:
  RowSpace(Field f, std::size_t cols);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t dim() const { return pivots_.size(); }
  [[nodiscard]] bool full() const { return dim() == cols_; }

  /// Adds v to the span. Returns true if the dimension grew.
  bool insert(const Vector& v);
  /// v minus its projection onto the span along the echelon basis.
  [[nodiscard]] Vector reduce(const Vector& v) const;
  [[nodiscard]] bool contains(const Vector& v) const;
  /// Coefficients of v in basis() order; nullopt if v is not in the span.
  [[nodiscard]] std::optional<Vector> coordinates(const Vector& v) const;

  /// The reduced echelon basis sorted by pivot column.
  [[nodiscard]] std::vector<Vector> basis() const;
  [[nodiscard]] std::vector<std::size_t> pivots() const;
  /// Basis of the solutions of {r . x = 0 for every row r in the span}.
  [[nodiscard]] std::vector<Vector> nullspace() const;

 private:
  void reduce_packed(std::vector<std::uint64_t>& w) const;
  void reduce_bytes(Vector& v) const;

  Field field_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::size_t> pivots_;               // per stored row
  std::vector<long> pivot_row_;                    // per column, -1 if free
  std::vector<std::uint64_t> pivot_mask_;          // packed: pivot columns
  std::vector<std::vector<std::uint64_t>> packed_;
  std::vector<Vector> bytes_;
};

}  // namespace nis2::gf
