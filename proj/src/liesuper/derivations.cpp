#include <stdexcept>

#include "nis2/gf/linalg.hpp"
#include "nis2/liesuper/structure.hpp"

namespace nis2::liesuper {

namespace {

// Unknowns D_ab (row a, column b) of a map of parity `par`.
struct Unknowns {
  std::vector<long> index;  // n*n, -1 if forced zero
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t n;
  long at(std::size_t a, std::size_t b) const { return index[a * n + b]; }
};

Unknowns unknowns_for(const SuperAlgebra& g, Parity par) {
  Unknowns u;
  u.n = g.dim();
  u.index.assign(u.n * u.n, -1);
  for (std::size_t a = 0; a < u.n; ++a)
    for (std::size_t b = 0; b < u.n; ++b)
      if (g.parity(a) == g.parity(b) + par) {
        u.index[a * u.n + b] = long(u.pairs.size());
        u.pairs.emplace_back(a, b);
      }
  return u;
}

class RowBuilder {
 public:
  RowBuilder(gf::Field f, std::size_t size) : f_(f), row_(size, 0) {}
  void add(long idx, Elem c) {
    if (idx < 0 || !c) return;
    row_[std::size_t(idx)] = f_.add(row_[std::size_t(idx)], c);
  }
  void sub(long idx, Elem c) { add(idx, f_.neg(c)); }
  // Inserts the row into rs and clears it.
  void flush(gf::RowSpace& rs) {
    if (!gf::is_zero(row_)) rs.insert(row_);
    std::fill(row_.begin(), row_.end(), 0);
  }

 private:
  gf::Field f_;
  Vector row_;
};

std::vector<Derivation> solve_parity(const SuperAlgebra& g, Parity par) {
  const gf::Field f = g.field();
  const std::size_t n = g.dim();
  const Unknowns u = unknowns_for(g, par);
  if (u.pairs.empty()) return {};
  gf::RowSpace rs(f, u.pairs.size());
  RowBuilder rb(f, u.pairs.size());
  for (std::size_t i = 0; i < n && !rs.full(); ++i)
    for (std::size_t j = 0; j < n && !rs.full(); ++j) {
      const Elem sgn = f.sign(bit(par) * bit(g.parity(i)));
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) rb.add(u.at(k, m), g.bracket_coeff(i, j, m));
        for (std::size_t a = 0; a < n; ++a) {
          rb.sub(u.at(a, i), g.bracket_coeff(a, j, k));
          rb.sub(u.at(a, j), f.mul(sgn, g.bracket_coeff(i, a, k)));
        }
        rb.flush(rs);
      }
    }
  if (g.p() == 2) {
    for (std::size_t i = g.dim_even(); i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vector x = gf::unit_vector(n, i);
        if (j != i) x[j] = 1;
        const Vector s = g.square(x);
        std::vector<Vector> ax(n);  // [e_a, x]
        for (std::size_t a = 0; a < n; ++a) ax[a] = g.bracket(gf::unit_vector(n, a), x);
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t m = 0; m < n; ++m) rb.add(u.at(k, m), s[m]);
          for (std::size_t b = 0; b < n; ++b) {
            if (!x[b]) continue;
            for (std::size_t a = 0; a < n; ++a) rb.sub(u.at(a, b), ax[a][k]);
          }
          rb.flush(rs);
        }
      }
  }
  std::vector<Derivation> out;
  for (const auto& sol : rs.nullspace()) {
    gf::Matrix d(f, n, n);
    for (std::size_t t = 0; t < sol.size(); ++t)
      if (sol[t]) d.set(u.pairs[t].first, u.pairs[t].second, sol[t]);
    out.push_back({std::move(d), par});
  }
  return out;
}

}  // namespace

std::vector<Derivation> derivations(const SuperAlgebra& g) {
  auto out = solve_parity(g, Parity::Even);
  auto odd = solve_parity(g, Parity::Odd);
  out.insert(out.end(), std::make_move_iterator(odd.begin()), std::make_move_iterator(odd.end()));
  return out;
}

std::vector<gf::Matrix> centroid(const SuperAlgebra& g) {
  const gf::Field f = g.field();
  const std::size_t n = g.dim();
  const Unknowns u = unknowns_for(g, Parity::Even);
  if (u.pairs.empty()) return {};
  gf::RowSpace rs(f, u.pairs.size());
  RowBuilder rb(f, u.pairs.size());
  // C[e_i, e_j] = [e_i, C e_j]
  for (std::size_t i = 0; i < n && !rs.full(); ++i)
    for (std::size_t j = 0; j < n && !rs.full(); ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) rb.add(u.at(k, m), g.bracket_coeff(i, j, m));
        for (std::size_t a = 0; a < n; ++a) rb.sub(u.at(a, j), g.bracket_coeff(i, a, k));
        rb.flush(rs);
      }
  std::vector<gf::Matrix> out;
  for (const auto& sol : rs.nullspace()) {
    gf::Matrix c(f, n, n);
    for (std::size_t t = 0; t < sol.size(); ++t)
      if (sol[t]) c.set(u.pairs[t].first, u.pairs[t].second, sol[t]);
    out.push_back(std::move(c));
  }
  return out;
}

bool is_derivation(const SuperAlgebra& g, const gf::Matrix& d, Parity parity) {
  const gf::Field f = g.field();
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("is_derivation: shape mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.get(a, b) && g.parity(a) != g.parity(b) + parity) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = gf::unit_vector(n, i), ej = gf::unit_vector(n, j);
      Vector lhs = d.apply(g.basis_bracket(i, j));
      Vector rhs = g.bracket(d.apply(ei), ej);
      gf::axpy(f, rhs, f.sign(bit(parity) * bit(g.parity(i))), g.bracket(ei, d.apply(ej)));
      if (lhs != rhs) return false;
    }
  if (g.p() == 2)
    for (std::size_t i = g.dim_even(); i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vector x = gf::unit_vector(n, i);
        if (j != i) x[j] = 1;
        if (d.apply(g.square(x)) != g.bracket(d.apply(x), x)) return false;
      }
  return true;
}

}  // namespace nis2::liesuper
