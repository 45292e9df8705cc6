#include "nis2/liesuper/structure.hpp"

#include <deque>
#include <stdexcept>

#include "nis2/gf/linalg.hpp"

namespace nis2::liesuper {

using gf::RowSpace;
using gf::unit_vector;

namespace {

std::vector<Vector> brackets_of(const SuperAlgebra& g, const std::vector<Vector>& basis) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) out.push_back(g.bracket(basis[i], basis[j]));
  return out;
}

}  // namespace

Subspace commutant(const SuperAlgebra& g) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) v.push_back(g.basis_bracket(i, j));
  return Subspace(g.field(), g.dim_even(), g.dim_odd(), v);
}

Subspace derived(const SuperAlgebra& g, std::size_t i) {
  Subspace cur = Subspace::whole(g.field(), g.dim_even(), g.dim_odd());
  for (std::size_t step = 0; step < i && !cur.is_zero(); ++step) {
    std::vector<Vector> gens = brackets_of(g, cur.basis());
    for (const auto& b : cur.basis())
      if (g.is_odd_vector(b)) gens.push_back(g.square(b));
    Subspace next(g.field(), g.dim_even(), g.dim_odd(), gens);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

Subspace center(const SuperAlgebra& g) {
  const std::size_t n = g.dim();
  RowSpace eq(g.field(), n);
  Vector row(n);
  for (std::size_t j = 0; j < n && !eq.full(); ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) row[i] = g.bracket_coeff(i, j, k);
      eq.insert(row);
    }
  return Subspace(g.field(), g.dim_even(), g.dim_odd(), eq.nullspace());
}

Subspace ideal_closure(const SuperAlgebra& g, const Subspace& s) {
  const std::size_t n = g.dim();
  RowSpace rs(g.field(), n);
  std::deque<Vector> todo;
  auto push = [&](const Vector& v) {
    if (rs.insert(v)) todo.push_back(v);
  };
  const Subspace start = s.project_parts();
  for (const auto& b : start.basis()) push(b);
  while (!todo.empty() && !rs.full()) {
    const Vector v = std::move(todo.front());
    todo.pop_front();
    for (std::size_t j = 0; j < n && !rs.full(); ++j) push(g.bracket(v, unit_vector(n, j)));
    if (g.p() == 2 && g.is_odd_vector(v)) push(g.square(v));
  }
  if (rs.full()) return Subspace::whole(g.field(), g.dim_even(), g.dim_odd());
  return Subspace(g.field(), g.dim_even(), g.dim_odd(), rs.basis());
}

bool is_ideal(const SuperAlgebra& g, const Subspace& s) {
  if (!s.homogeneous()) return false;
  RowSpace rs(g.field(), g.dim());
  for (const auto& b : s.basis()) rs.insert(b);
  for (const auto& b : s.basis()) {
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (!rs.contains(g.bracket(b, unit_vector(g.dim(), j)))) return false;
    if (g.is_odd_vector(b) && !rs.contains(g.square(b))) return false;
  }
  return true;
}

SubalgebraResult subalgebra(const SuperAlgebra& g, const Subspace& s) {
  if (!s.homogeneous()) throw std::invalid_argument("subalgebra: subspace is not homogeneous");
  const auto& basis = s.basis();
  const auto [de, dodd] = s.superdim();
  RowSpace rs(g.field(), g.dim());
  for (const auto& b : basis) rs.insert(b);
  auto coords = [&](const Vector& v) {
    auto c = rs.coordinates(v);
    if (!c) throw std::invalid_argument("subalgebra: subspace is not closed");
    return *c;
  };
  SuperAlgebra h(g.field(), de, dodd);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) h.set_bracket(i, j, coords(g.bracket(basis[i], basis[j])));
    if (g.p() == 2 && i >= de) h.set_square(i, coords(g.square(basis[i])));
  }
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(format_vector(g, b));
  h.set_labels(labels);
  return {std::move(h), gf::Matrix::from_columns(g.field(), g.dim(), basis)};
}

SuperAlgebra subalgebra_on_basis(const SuperAlgebra& g, const std::vector<Vector>& basis, std::size_t dim_even,
                                 std::vector<std::string> labels) {
  const gf::Field f = g.field();
  const std::size_t n = g.dim(), d = basis.size();
  if (dim_even > d) throw std::invalid_argument("subalgebra_on_basis: dim_even exceeds basis size");
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i].size() != n) throw std::invalid_argument("subalgebra_on_basis: vector length mismatch");
    if (i < dim_even ? !g.is_even_vector(basis[i]) : !g.is_odd_vector(basis[i]))
      throw std::invalid_argument("subalgebra_on_basis: basis vector of the wrong parity");
  }
  const gf::Matrix m = gf::Matrix::from_columns(f, n, basis);
  if (gf::rank(m) != d) throw std::invalid_argument("subalgebra_on_basis: basis is linearly dependent");
  auto coords = [&](const Vector& v) {
    auto c = gf::solve(m, v);
    if (!c) throw std::invalid_argument("subalgebra_on_basis: span is not closed");
    return *c;
  };
  SuperAlgebra h(f, dim_even, d - dim_even);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) h.set_bracket(i, j, coords(g.bracket(basis[i], basis[j])));
    if (g.p() == 2 && i >= dim_even) h.set_square(i, coords(g.square(basis[i])));
  }
  if (labels.empty())
    for (const auto& b : basis) labels.push_back(format_vector(g, b));
  h.set_labels(std::move(labels));
  return h;
}

SuperAlgebra quotient(const SuperAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  RowSpace rs(g.field(), n);
  for (const auto& b : ideal.basis()) rs.insert(b);
  std::vector<std::size_t> keep;
  std::vector<bool> pivot(n, false);
  for (auto c : rs.pivots()) pivot[c] = true;
  std::size_t de = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) {
      keep.push_back(c);
      if (c < g.dim_even()) ++de;
    }
  auto proj = [&](const Vector& v) {
    const Vector r = rs.reduce(v);
    Vector out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) out[i] = r[keep[i]];
    return out;
  };
  SuperAlgebra q(g.field(), de, keep.size() - de);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(g.label(keep[i]));
    for (std::size_t j = 0; j < keep.size(); ++j) q.set_bracket(i, j, proj(g.basis_bracket(keep[i], keep[j])));
    if (g.p() == 2 && i >= de) q.set_square(i, proj(g.basis_square(keep[i])));
  }
  q.set_labels(labels);
  return q;
}

SuperAlgebra direct_sum(const SuperAlgebra& g, const SuperAlgebra& h) {
  if (!(g.field() == h.field())) throw std::invalid_argument("direct_sum: different fields");
  const std::size_t ge = g.dim_even(), he = h.dim_even();
  const std::size_t n = g.dim() + h.dim();
  // position of g's index i and h's index j in the sum
  auto gpos = [&](std::size_t i) { return i < ge ? i : i + he; };
  auto hpos = [&](std::size_t j) { return j < he ? ge + j : g.dim() + j; };
  SuperAlgebra s(g.field(), ge + he, g.dim_odd() + h.dim_odd());
  std::vector<std::string> labels(n);
  auto embed = [&](const SuperAlgebra& a, auto pos, std::size_t i, std::size_t j) {
    Vector v(n, 0);
    const Vector b = a.basis_bracket(i, j);
    for (std::size_t k = 0; k < a.dim(); ++k) v[pos(k)] = b[k];
    s.set_bracket(pos(i), pos(j), v);
  };
  for (std::size_t i = 0; i < g.dim(); ++i) {
    labels[gpos(i)] = g.label(i);
    for (std::size_t j = 0; j < g.dim(); ++j) embed(g, gpos, i, j);
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    labels[hpos(i)] = h.label(i) + "'";
    for (std::size_t j = 0; j < h.dim(); ++j) embed(h, hpos, i, j);
  }
  if (s.has_squaring_table()) {
    for (std::size_t i = ge; i < g.dim(); ++i) {
      Vector v(n, 0);
      const Vector q = g.basis_square(i);
      for (std::size_t k = 0; k < g.dim(); ++k) v[gpos(k)] = q[k];
      s.set_square(gpos(i), v);
    }
    for (std::size_t i = he; i < h.dim(); ++i) {
      Vector v(n, 0);
      const Vector q = h.basis_square(i);
      for (std::size_t k = 0; k < h.dim(); ++k) v[hpos(k)] = q[k];
      s.set_square(hpos(i), v);
    }
  }
  s.set_labels(labels);
  return s;
}

SuperAlgebra change_basis(const SuperAlgebra& g, const gf::Matrix& change) {
  const std::size_t n = g.dim();
  if (change.rows() != n || change.cols() != n) throw std::invalid_argument("change_basis: shape mismatch");
  const auto inv = gf::inverse(change);
  if (!inv) throw std::invalid_argument("change_basis: matrix is singular");
  std::vector<Vector> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = change.column(i);
    const bool ok = i < g.dim_even() ? g.is_even_vector(b[i]) : g.is_odd_vector(b[i]);
    if (!ok) throw std::invalid_argument("change_basis: matrix does not preserve parity");
  }
  SuperAlgebra h(g.field(), g.dim_even(), g.dim_odd());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.set_bracket(i, j, inv->apply(g.bracket(b[i], b[j])));
    if (g.p() == 2 && i >= g.dim_even()) h.set_square(i, inv->apply(g.square(b[i])));
  }
  return h;
}

}  // namespace nis2::liesuper
