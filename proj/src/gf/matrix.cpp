#include "nis2/gf/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "nis2/gf/kernels.hpp"

namespace nis2::gf {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (packed()) {
    words_ = (cols + 63) / 64;
    bits_.assign(rows * words_, 0);
  } else {
    bytes_.assign(rows * cols, 0);
  }
}

Matrix::Matrix(Field f, std::initializer_list<std::initializer_list<int>> rows)
    : Matrix(f, rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (int v : row) set(r, c++, f.reduce(v));
    ++r;
  }
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Elem v) {
  if (packed()) {
    std::uint64_t& w = bits_[r * words_ + (c >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (v & 1U) w |= bit;
    else w &= ~bit;
  } else {
    bytes_[r * cols_ + c] = v;
  }
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = get(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (packed()) {
    std::swap_ranges(bits_.begin() + a * words_, bits_.begin() + (a + 1) * words_,
                     bits_.begin() + b * words_);
  } else {
    std::swap_ranges(bytes_.begin() + a * cols_, bytes_.begin() + (a + 1) * cols_,
                     bytes_.begin() + b * cols_);
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (Elem v = get(r, c)) t.set(c, r, v);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector length mismatch");
  Vector out(rows_, 0);
  if (packed()) {
    std::vector<std::uint64_t> packed_v(words_, 0);
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] & 1U) packed_v[c >> 6] |= std::uint64_t{1} << (c & 63);
    const auto& k = kernels::active();
    for (std::size_t r = 0; r < rows_; ++r)
      out[r] = k.and_parity(bits_.data() + r * words_, packed_v.data(), words_) ? 1 : 0;
    return out;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned long acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += unsigned(bytes_[r * cols_ + c]) * v[c];
    out[r] = Elem(acc % field_.p());
  }
  return out;
}

bool Matrix::is_zero() const {
  if (packed()) return std::all_of(bits_.begin(), bits_.end(), [](auto w) { return w == 0; });
  return std::all_of(bytes_.begin(), bytes_.end(), [](Elem e) { return e == 0; });
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape or field mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix r = a;
  if (r.packed()) {
    for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] ^= b.bits_[i];
  } else {
    const auto& k = kernels::active();
    k.axpy_mod(r.bytes_.data(), b.bytes_.data(), 1, a.field().p(), r.bytes_.size());
  }
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  return a + a.field().neg(1) * b;
}

Matrix operator*(Elem s, const Matrix& a) {
  Matrix r = a;
  if (r.packed()) {
    if ((s & 1U) == 0) std::fill(r.bits_.begin(), r.bits_.end(), 0);
  } else {
    kernels::active().scale_mod(r.bytes_.data(), s, a.field().p(), r.bytes_.size());
  }
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(a.field(), a.rows(), b.cols());
  const auto& k = kernels::active();
  // Row i of the product is the combination of rows of b weighted by row i of a.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elem c = a.get(i, j);
      if (!c) continue;
      if (r.packed())
        k.xor_words(r.packed_row(i).data(), b.packed_row(j).data(), r.words_);
      else
        k.axpy_mod(r.byte_row(i).data(), b.byte_row(j).data(), c, a.field().p(), r.cols_);
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field() == b.field() && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.bits_ == b.bits_ && a.bytes_ == b.bytes_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << unsigned(m.get(r, c));
    os << "]\n";
  }
  return os;
}

}  // namespace nis2::gf
