#include "nis2/gf/poly.hpp"

#include <stdexcept>

namespace nis2::gf {

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (auto& c : c_) c = f.reduce(c);
  trim();
}

Poly Poly::monomial(Field f, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
  const Field f = a.field_;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
  return Poly(f, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field f = field_;
  std::vector<Elem> rem = c_;
  if (degree() < d.degree()) return {Poly(f), *this};
  std::vector<Elem> quot(std::size_t(degree() - d.degree() + 1), 0);
  const Elem lead_inv = f.inv(d.c_.back());
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const Elem q = f.mul(rem[std::size_t(k) + d.c_.size() - 1], lead_inv);
    quot[std::size_t(k)] = q;
    if (!q) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j)
      rem[std::size_t(k) + j] = f.sub(rem[std::size_t(k) + j], f.mul(q, d.c_[j]));
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly pencil_determinant(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("pencil_determinant: shape mismatch");
  const Field f = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(f, 1);
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Poly(f, {a.get(i, j), b.get(i, j)});

  // Bareiss: every intermediate entry is a minor, so the divisions are exact.
  bool negate = false;
  Poly prev = Poly::constant(f, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return Poly(f);
      std::swap(m[k], m[s]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto [q, r] = num.divmod(prev);
        if (!r.is_zero()) throw std::logic_error("Bareiss division was not exact");
        m[i][j] = std::move(q);
      }
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return negate ? Poly(f) - d : d;
}

bool is_irreducible(const Poly& p) {
  const int deg = p.degree();
  if (deg < 1 || deg > 8) throw std::invalid_argument("is_irreducible: degree must be in [1, 8]");
  const Field f = p.field();
  for (int d = 1; 2 * d <= deg; ++d) {
    // Every monic polynomial of degree d: p^d candidates.
    std::vector<Elem> c(std::size_t(d) + 1, 0);
    c[std::size_t(d)] = 1;
    while (true) {
      if (p.divmod(Poly(f, c)).second.is_zero()) return false;
      std::size_t i = 0;
      while (i < std::size_t(d)) {
        if (++c[i] < f.p()) break;
        c[i++] = 0;
      }
      if (i == std::size_t(d)) break;
    }
  }
  return true;
}

}  // namespace nis2::gf
