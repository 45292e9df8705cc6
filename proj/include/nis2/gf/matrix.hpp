#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "nis2/gf/field.hpp"

namespace nis2::gf {

/// Dense matrix over F_p.
///
/// Over F_2 rows are bit-packed (64 entries per word, bit j of word j/64 is
/// column j); for odd p each entry takes one byte. The representation is an
/// implementation detail: get/set/row work the same for every p, and the
/// packed/byte row views exist for the elimination kernels.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::initializer_list<std::initializer_list<int>> rows);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool packed() const { return field_.is_binary(); }

  [[nodiscard]] Elem get(std::size_t r, std::size_t c) const {
    if (packed()) return Elem((bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1U);
    return bytes_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Elem v);

  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);

  // Raw row views for kernels.
  [[nodiscard]] std::size_t words_per_row() const { return words_; }
  [[nodiscard]] std::span<std::uint64_t> packed_row(std::size_t r) {
    return {bits_.data() + r * words_, words_};
  }
  [[nodiscard]] std::span<const std::uint64_t> packed_row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }
  [[nodiscard]] std::span<Elem> byte_row(std::size_t r) {
    return {bytes_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const Elem> byte_row(std::size_t r) const {
    return {bytes_.data() + r * cols_, cols_};
  }
  void swap_rows(std::size_t a, std::size_t b);

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vector apply(const Vector& v) const;  // M * v
  [[nodiscard]] bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Elem s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> bytes_;
};

}  // namespace nis2::gf
