#include "nis2/gf/linalg.hpp"

#include <stdexcept>

#include "nis2/gf/kernels.hpp"

namespace nis2::gf {

namespace {

// row[dst] += c * row[src], touching only columns >= from.
void add_row(Matrix& m, std::size_t dst, std::size_t src, Elem c, std::size_t from) {
  const auto& k = kernels::active();
  if (m.packed()) {
    const std::size_t w0 = from >> 6;
    k.xor_words(m.packed_row(dst).data() + w0, m.packed_row(src).data() + w0,
                m.words_per_row() - w0);
  } else {
    k.axpy_mod(m.byte_row(dst).data() + from, m.byte_row(src).data() + from, c,
               m.field().p(), m.cols() - from);
  }
}

void scale_row(Matrix& m, std::size_t r, Elem c, std::size_t from) {
  if (m.packed()) return;  // the only nonzero scalar is 1
  kernels::active().scale_mod(m.byte_row(r).data() + from, c, m.field().p(), m.cols() - from);
}

}  // namespace

Rref rref(const Matrix& input) {
  Rref out{input, {}};
  Matrix& m = out.reduced;
  const Field f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.get(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    scale_row(m, r, f.inv(m.get(r, c)), c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      if (Elem v = m.get(i, c)) add_row(m, i, r, f.neg(v), c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const Rref e = rref(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = f.neg(e.reduced.get(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (Elem v = m.get(r, c)) aug.set(r, c, v);
    aug.set(r, m.cols(), b[r]);
  }
  const Rref e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.get(r, m.cols());
  return x;
}

FieldElem det(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("det: matrix is not square");
  Matrix m = input;
  const Field f = m.field();
  Elem acc = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t pivot = c;
    while (pivot < m.rows() && m.get(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) return {f, 0};
    if (pivot != c) {
      m.swap_rows(pivot, c);
      acc = f.neg(acc);
    }
    const Elem pv = m.get(c, c);
    acc = f.mul(acc, pv);
    const Elem pinv = f.inv(pv);
    for (std::size_t i = c + 1; i < m.rows(); ++i)
      if (Elem v = m.get(i, c)) add_row(m, i, c, f.neg(f.mul(v, pinv)), c);
  }
  return {f, acc};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (Elem v = m.get(r, c)) aug.set(r, c, v);
    aug.set(r, n + r, 1);
  }
  const Rref e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (Elem v = e.reduced.get(r, n + c)) inv.set(r, c, v);
  return inv;
}

}  // namespace nis2::gf
