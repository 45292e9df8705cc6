#include "nis2/restricted/pstructure.hpp"

#include <sstream>
#include <stdexcept>

#include "nis2/gf/linalg.hpp"
#include "nis2/liesuper/enumerate.hpp"

namespace nis2::restricted {

namespace {

// (ad_x)^k y without forming matrices.
Vector ad_pow_apply(const SuperAlgebra& g, const Vector& x, unsigned k, Vector y) {
  for (unsigned t = 0; t < k; ++t) y = g.bracket(x, y);
  return y;
}

// Vectorized (rows then columns) even-even block of a matrix.
Vector even_block(const gf::Matrix& m, std::size_t e) {
  Vector v;
  v.reserve(e * e);
  for (std::size_t r = 0; r < e; ++r)
    for (std::size_t c = 0; c < e; ++c) v.push_back(m.get(r, c));
  return v;
}

}  // namespace

gf::Matrix ad_power(const SuperAlgebra& g, const Vector& x, unsigned k) {
  const gf::Matrix a = g.ad(x);
  gf::Matrix r = gf::Matrix::identity(g.field(), g.dim());
  for (unsigned t = 0; t < k; ++t) r = r * a;
  return r;
}

std::vector<Vector> jacobson_terms(const SuperAlgebra& g, const Vector& x, const Vector& y) {
  const gf::Field f = g.field();
  const unsigned p = f.p();
  const std::size_t n = g.dim();
  // coefficient of lambda^d of ad(lambda x + y)^t (x), t = 0..p-1
  std::vector<Vector> c{x};
  for (unsigned t = 1; t < p; ++t) {
    std::vector<Vector> next(c.size() + 1, Vector(n, 0));
    for (std::size_t d = 0; d < c.size(); ++d) {
      gf::axpy(f, next[d + 1], 1, g.bracket(x, c[d]));
      gf::axpy(f, next[d], 1, g.bracket(y, c[d]));
    }
    c = std::move(next);
  }
  std::vector<Vector> s;
  for (unsigned i = 1; i < p; ++i) s.push_back(gf::scale(f, f.inv(Elem(i)), c[i - 1]));
  return s;
}

Vector p_power(const SuperAlgebra& g, const PStructure& ps, const Vector& x) {
  const gf::Field f = g.field();
  const std::size_t n = g.dim();
  if (!g.is_even_vector(x)) throw std::invalid_argument("p_power: argument must be even");
  Vector acc(n, 0), acc_p(n, 0);
  for (std::size_t i = 0; i < g.dim_even(); ++i) {
    if (!x[i]) continue;
    Vector term = gf::scale(f, x[i], gf::unit_vector(n, i));
    // (a e_i)^[p] = a^p e_i^[p]
    Vector term_p = gf::scale(f, f.pow(x[i], f.p()), ps.p_map[i]);
    Vector next = gf::add(f, acc_p, term_p);
    if (!gf::is_zero(acc))
      for (const auto& s : jacobson_terms(g, acc, term)) next = gf::add(f, next, s);
    acc = gf::add(f, acc, term);
    acc_p = std::move(next);
  }
  return acc_p;
}

Vector two_p_power(const SuperAlgebra& g, const PStructure& ps, const Vector& x) {
  if (!g.is_odd_vector(x)) throw std::invalid_argument("two_p_power: argument must be odd");
  return p_power(g, ps, g.square(x));
}

std::optional<PStructure> find_p_structure(const SuperAlgebra& g) {
  const gf::Field f = g.field();
  const std::size_t n = g.dim(), e = g.dim_even();
  // columns: vec(ad_{e_j}|ev)
  std::vector<Vector> cols;
  std::vector<gf::Matrix> ads;
  for (std::size_t j = 0; j < e; ++j) {
    ads.push_back(g.ad_basis(j));
    cols.push_back(even_block(ads.back(), e));
  }
  const gf::Matrix a = gf::Matrix::from_columns(f, e * e, cols);
  PStructure ps;
  for (std::size_t i = 0; i < e; ++i) {
    gf::Matrix pw = gf::Matrix::identity(f, n);
    for (unsigned t = 0; t < f.p(); ++t) pw = pw * ads[i];
    const auto y = gf::solve(a, even_block(pw, e));
    if (!y) return std::nullopt;
    Vector v(n, 0);
    std::copy(y->begin(), y->end(), v.begin());
    ps.p_map.push_back(std::move(v));
  }
  for (const auto& z : gf::nullspace(a)) {
    Vector v(n, 0);
    std::copy(z.begin(), z.end(), v.begin());
    ps.ambiguity.push_back(std::move(v));
  }
  return ps;
}

namespace {

// Checks [x^[p], y] = (ad_x)^p y over x in the test set, y basis in [yl, yh).
bool check_restr(const SuperAlgebra& g, const PStructure& ps, std::size_t yl, std::size_t yh, PVerdict& v,
                 bool& flag, Parity tag) {
  const std::size_t n = g.dim();
  bool ex = true;
  liesuper::for_each_test_vector(g.field(), n, 0, g.dim_even(), g.p(), [&](const Vector& x) {
    const Vector xp = p_power(g, ps, x);
    for (std::size_t j = yl; j < yh; ++j) {
      const Vector y = gf::unit_vector(n, j);
      const Vector l = g.bracket(xp, y), r = ad_pow_apply(g, x, g.p(), y);
      if (l != r) {
        flag = false;
        if (v.failure.empty()) {
          std::ostringstream os;
          os << "x = " << liesuper::format_vector(g, x) << ", y = " << g.label(j) << " (" << to_string(tag)
             << "): [x^[p], y] = " << liesuper::format_vector(g, l)
             << " but (ad x)^p y = " << liesuper::format_vector(g, r);
          v.failure = os.str();
          v.failure_parity = tag;
          v.witness = {x, y};
        }
        return false;
      }
    }
    return true;
  }, &ex);
  v.exhaustive = v.exhaustive && ex;
  return flag;
}

}  // namespace

PVerdict verify_p_structure(const SuperAlgebra& g, const PStructure& ps) {
  PVerdict v;
  check_restr(g, ps, 0, g.dim_even(), v, v.even_ok, Parity::Even);
  return v;
}

PVerdict verify_2_4_structure(const SuperAlgebra& g, const PStructure& ps) {
  PVerdict v;
  const std::size_t n = g.dim();
  check_restr(g, ps, 0, g.dim_even(), v, v.even_ok, Parity::Even);
  check_restr(g, ps, g.dim_even(), n, v, v.odd_ok, Parity::Odd);
  bool ex = true;
  liesuper::for_each_test_vector(g.field(), n, g.dim_even(), n, 2 * g.p(), [&](const Vector& x) {
    const Vector x2p = two_p_power(g, ps, x);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector y = gf::unit_vector(n, j);
      const Vector l = g.bracket(x2p, y), r = ad_pow_apply(g, x, 2 * g.p(), y);
      if (l != r) {
        v.two_p_ok = false;
        if (v.failure.empty()) {
          std::ostringstream os;
          os << "x = " << liesuper::format_vector(g, x) << ", y = " << g.label(j) << " ("
             << to_string(g.parity(j)) << "): [x^[2p], y] = " << liesuper::format_vector(g, l)
             << " but (ad x)^{2p} y = " << liesuper::format_vector(g, r);
          v.failure = os.str();
          v.failure_parity = g.parity(j);
          v.witness = {x, y};
        }
        return false;
      }
    }
    return true;
  }, &ex);
  v.exhaustive = v.exhaustive && ex;
  return v;
}

}  // namespace nis2::restricted
