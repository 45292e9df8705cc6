#include "nis2/liesuper/superalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace nis2::liesuper {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

SuperAlgebra::SuperAlgebra(gf::Field f, std::size_t dim_even, std::size_t dim_odd)
    : field_(f), n_(dim_even + dim_odd), dim_even_(dim_even), table_(n_ * n_ * n_, 0),
      squares_(n_ * n_, 0) {
  labels_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i));
}

Vector SuperAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const auto* p = &table_[(i * n_ + j) * n_];
  return Vector(p, p + n_);
}

void SuperAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= n_ || j >= n_ || value.size() != n_)
    throw std::invalid_argument("set_bracket: index or length out of range");
  auto* p = &table_[(i * n_ + j) * n_];
  for (std::size_t k = 0; k < n_; ++k) p[k] = field_.reduce(value[k]);
}

void SuperAlgebra::set_bracket_pair(std::size_t i, std::size_t j, const Vector& value) {
  set_bracket(i, j, value);
  if (i == j) return;
  // [e_j, e_i] = -(-1)^{p(i)p(j)} [e_i, e_j]
  const Elem s = field_.neg(field_.sign(bit(parity(i)) * bit(parity(j))));
  set_bracket(j, i, gf::scale(field_, s, value));
}

Vector SuperAlgebra::basis_square(std::size_t i) const {
  if (parity(i) != Parity::Odd) throw std::invalid_argument("basis_square: even index");
  const auto* p = &squares_[i * n_];
  return Vector(p, p + n_);
}

void SuperAlgebra::set_square(std::size_t i, const Vector& value) {
  if (i >= n_ || parity(i) != Parity::Odd || value.size() != n_)
    throw std::invalid_argument("set_square: index must be odd and value of full length");
  if (!has_squaring_table()) throw std::invalid_argument("set_square: no squaring table for odd p");
  for (std::size_t k = 0; k < n_; ++k) squares_[i * n_ + k] = field_.reduce(value[k]);
}

void SuperAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) throw std::invalid_argument("set_labels: wrong number of labels");
  labels_ = std::move(labels);
}

Vector SuperAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("bracket: length mismatch");
  Vector out(n_, 0);
  const unsigned p = field_.p();
  std::vector<unsigned long> acc(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!y[j]) continue;
      const unsigned c = field_.mul(x[i], y[j]);
      const Elem* row = &table_[(i * n_ + j) * n_];
      for (std::size_t k = 0; k < n_; ++k) acc[k] += c * row[k];
    }
    // Keep the accumulators far from overflow.
    for (auto& a : acc) a %= p;
  }
  for (std::size_t k = 0; k < n_; ++k) out[k] = Elem(acc[k] % p);
  return out;
}

Vector SuperAlgebra::square(const Vector& x) const {
  if (x.size() != n_) throw std::invalid_argument("square: length mismatch");
  if (!has_squaring_table()) {
    const Elem half = field_.inv(2);
    return gf::scale(field_, half, bracket(x, x));
  }
  Vector out(n_, 0);
  for (std::size_t i = dim_even_; i < n_; ++i) {
    if (!x[i]) continue;
    gf::axpy(field_, out, field_.mul(x[i], x[i]), basis_square(i));
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x[j]) gf::axpy(field_, out, field_.mul(x[i], x[j]), basis_bracket(i, j));
  }
  return out;
}

gf::Matrix SuperAlgebra::ad(const Vector& x) const {
  gf::Matrix m(field_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const Vector col = bracket(x, gf::unit_vector(n_, j));
    for (std::size_t k = 0; k < n_; ++k)
      if (col[k]) m.set(k, j, col[k]);
  }
  return m;
}

gf::Matrix SuperAlgebra::ad_basis(std::size_t i) const {
  gf::Matrix m(field_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k)
      if (Elem c = bracket_coeff(i, j, k)) m.set(k, j, c);
  return m;
}

bool SuperAlgebra::is_even_vector(const Vector& v) const {
  for (std::size_t i = dim_even_; i < n_; ++i)
    if (v[i]) return false;
  return true;
}

bool SuperAlgebra::is_odd_vector(const Vector& v) const {
  for (std::size_t i = 0; i < dim_even_; ++i)
    if (v[i]) return false;
  return true;
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (!(a.field_ == b.field_) || a.n_ != b.n_ || a.dim_even_ != b.dim_even_) return false;
  if (a.table_ != b.table_) return false;
  if (!a.has_squaring_table()) return true;
  for (std::size_t i = a.dim_even_; i < a.n_; ++i)
    if (a.basis_square(i) != b.basis_square(i)) return false;
  return true;
}

Vector bracket_apply(const SuperAlgebra& g, const Vector& x, const Vector& y) {
  return g.bracket(x, y);
}

Vector square_apply(const SuperAlgebra& g, const Vector& x) {
  if (g.p() != 2)
    throw std::invalid_argument("square_apply: squaring table exists only over F_2; use (1/2)[x,x]");
  if (x.size() != g.dim()) throw std::invalid_argument("square_apply: length mismatch");
  if (!g.is_odd_vector(x)) throw std::invalid_argument("square_apply: argument has even support");
  return g.square(x);
}

SuperAlgebra abelian(gf::Field f, std::size_t dim_even, std::size_t dim_odd) {
  return SuperAlgebra(f, dim_even, dim_odd);
}

std::string format_vector(const SuperAlgebra& g, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i] != 1) os << unsigned(v[i]) << '*';
    os << g.label(i);
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace nis2::liesuper
