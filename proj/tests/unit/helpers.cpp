#include "helpers.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nis2/build/assoc.hpp"
#include "nis2/build/matrix_algebras.hpp"
#include "nis2/build/tensor.hpp"
#include "nis2/gf/linalg.hpp"
#include "nis2/liesuper/structure.hpp"

namespace nis2::oracle {

gf::Matrix random_block_change(const SuperAlgebra& g, gf::Rng& rng) {
  const gf::Field f = g.field();
  const std::size_t e = g.dim_even(), n = g.dim();
  while (true) {
    gf::Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((i < e) == (j < e)) m.set(i, j, gf::random_elem(f, rng));
    if (gf::inverse(m)) return m;
  }
}

SuperAlgebra random_two_step_nilpotent(gf::Field f, std::size_t de, std::size_t dodd, std::size_t ze, std::size_t zo,
                                       gf::Rng& rng) {
  // Basis: V_ev (de), Z_ev (ze) | V_od (dodd), Z_od (zo).
  const std::size_t E = de + ze, n = E + dodd + zo;
  SuperAlgebra g(f, E, dodd + zo);
  auto is_v = [&](std::size_t i) { return i < de || (i >= E && i < E + dodd); };
  auto central_part = [&](liesuper::Parity par) {
    return par == liesuper::Parity::Even ? gf::random_vector_on(f, n, de, E, rng)
                                         : gf::random_vector_on(f, n, E + dodd, n, rng);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (is_v(i) && is_v(j)) g.set_bracket_pair(i, j, central_part(g.parity(i) + g.parity(j)));
  if (g.has_squaring_table())
    for (std::size_t i = E; i < E + dodd; ++i) g.set_square(i, central_part(liesuper::Parity::Even));
  return g;
}

SuperAlgebra random_valid_4_4(unsigned kind, gf::Rng& rng) {
  const gf::Field f(2);
  SuperAlgebra g = [&] {
    switch (kind % 5) {
      case 0: return build::queer_q(f, 2);
      case 1: {
        const SuperAlgebra a = build::gl(f, build::Format::standard(1, 1));
        return liesuper::direct_sum(a, a);
      }
      case 2:
        return build::tensor_supercommutative(build::gl(f, build::Format::standard(1, 1)),
                                              build::AssocSuperAlgebra::truncated(gf::Poly(f, {0, 0, 1})));
      case 3:
        return build::tensor_supercommutative(build::gl(f, build::Format::standard(1, 1)),
                                              build::AssocSuperAlgebra::grassmann(f, 1));
      default: return random_two_step_nilpotent(f, 2, 2, 2, 2, rng);
    }
  }();
  return liesuper::change_basis(g, random_block_change(g, rng));
}

namespace {

using Mask = std::uint32_t;

Mask to_mask(const Vector& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1U) m |= Mask(1) << i;
  return m;
}

}  // namespace

std::optional<std::vector<Vector>> brute_invariance_violation(const SuperAlgebra& g, const gf::Matrix& values) {
  if (g.p() != 2 || g.dim() > 10) throw std::invalid_argument("brute force needs F_2 and dim <= 10");
  const std::size_t n = g.dim();
  const Mask all = Mask(1) << n;
  // bracket of masks by bilinearity over the basis table
  std::vector<Mask> basis_br(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis_br[i * n + j] = to_mask(g.basis_bracket(i, j));
  auto br = [&](Mask x, Mask y) {
    Mask r = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (x >> i & 1U)
        for (std::size_t j = 0; j < n; ++j)
          if (y >> j & 1U) r ^= basis_br[i * n + j];
    return r;
  };
  std::vector<Mask> row(n);  // row[i]: functional y -> B(e_i, y)
  for (std::size_t i = 0; i < n; ++i) {
    Vector r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = values.get(i, j);
    row[i] = to_mask(r);
  }
  auto form = [&](Mask x, Mask y) {
    Mask acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (x >> i & 1U) acc ^= row[i];
    return std::popcount(acc & y) & 1;
  };
  auto unmask = [&](Mask m) {
    Vector v(n, 0);
    for (std::size_t i = 0; i < n; ++i) v[i] = Elem(m >> i & 1U);
    return v;
  };
  std::vector<Mask> brackets(std::size_t(all) * all);
  for (Mask x = 0; x < all; ++x)
    for (Mask y = 0; y < all; ++y) brackets[std::size_t(x) * all + y] = br(x, y);
  for (Mask x = 0; x < all; ++x)
    for (Mask z = 0; z < all; ++z) {
      const Mask xz = brackets[std::size_t(x) * all + z];
      for (Mask y = 0; y < all; ++y)
        if (form(xz, y) != form(x, brackets[std::size_t(z) * all + y])) return std::vector<Vector>{unmask(x), unmask(z), unmask(y)};
    }
  return std::nullopt;
}

bool brute_symmetric(const gf::Matrix& values) {
  const std::size_t n = values.rows();
  const std::uint32_t all = std::uint32_t(1) << n;
  auto form = [&](std::uint32_t x, std::uint32_t y) {
    unsigned acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((x >> i & 1U) && (y >> j & 1U)) acc ^= values.get(i, j) & 1U;
    return acc;
  };
  for (std::uint32_t x = 0; x < all; ++x)
    for (std::uint32_t y = x + 1; y < all; ++y)
      if (form(x, y) != form(y, x)) return false;
  return true;
}

std::size_t brute_ideal_dim(const SuperAlgebra& g, const Vector& v) {
  const std::size_t n = g.dim();
  gf::RowSpace rs(g.field(), n);
  rs.insert(v);
  std::size_t before = 0;
  while (rs.dim() != before) {
    before = rs.dim();
    const auto basis = rs.basis();
    for (const auto& b : basis) {
      for (std::size_t j = 0; j < n; ++j) rs.insert(g.bracket(b, gf::unit_vector(n, j)));
      if (g.p() == 2 && g.is_odd_vector(b)) rs.insert(g.square(b));
    }
  }
  return rs.dim();
}

bool brute_is_simple(const SuperAlgebra& g) {
  if (g.p() != 2 || g.dim_even() > 16 || g.dim_odd() > 16) throw std::invalid_argument("brute simplicity: F_2, parts <= 16");
  const std::size_t n = g.dim();
  if (n == 0) return false;
  if (n == 1) return false;  // a line is abelian or has a 1-dim ideal
  auto scan = [&](std::size_t lo, std::size_t hi) {
    const std::uint32_t all = std::uint32_t(1) << (hi - lo);
    for (std::uint32_t m = 1; m < all; ++m) {
      Vector v(n, 0);
      for (std::size_t i = lo; i < hi; ++i) v[i] = Elem(m >> (i - lo) & 1U);
      if (brute_ideal_dim(g, v) != n) return false;
    }
    return true;
  };
  return scan(0, g.dim_even()) && scan(g.dim_even(), n);
}

bool in_span(const std::vector<gf::Matrix>& basis, const gf::Matrix& m) {
  const std::size_t n = m.rows();
  gf::RowSpace rs(m.field(), n * n);
  auto flat = [&](const gf::Matrix& a) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a.get(i, j));
    return v;
  };
  for (const auto& b : basis) rs.insert(flat(b));
  return rs.contains(flat(m));
}

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(NIS2_FIXTURES) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace nis2::oracle
