#include <array>
#include <bit>
#include <cstdint>
#include <memory>

#include "nis2/gf/random.hpp"
#include "nis2/liesuper/structure.hpp"

namespace nis2::liesuper {

namespace {

constexpr std::size_t kMaxExhaustivePartDim = 21;
constexpr std::size_t kMaxExhaustiveCandidates = std::size_t{1} << 22;

// Binary algebra with n <= 64, vectors as bit masks.
class PackedF2 {
 public:
  explicit PackedF2(const SuperAlgebra& g) : n_(g.dim()), e_(g.dim_even()) {
    even_mask_ = e_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e_) - 1;
    brk_.assign(n_ * n_, 0);
    sq_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) brk_[i * n_ + j] = pack(g.basis_bracket(i, j));
    for (std::size_t i = e_; i < n_; ++i) sq_[i] = pack(g.basis_square(i));
    // byte tables: col_[j][c][b] = XOR of [e_i, e_j] over bits i of b in chunk c
    chunks_ = (n_ + 7) / 8;
    col_.assign(n_ * chunks_ * 256, 0);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t c = 0; c < chunks_; ++c)
        for (unsigned b = 1; b < 256; ++b) {
          const unsigned low = unsigned(std::countr_zero(b));
          const std::size_t i = c * 8 + low;
          std::uint64_t v = col_[(j * chunks_ + c) * 256 + (b & (b - 1))];
          if (i < n_) v ^= brk_[i * n_ + j];
          col_[(j * chunks_ + c) * 256 + b] = v;
        }
  }

  static std::uint64_t pack(const Vector& v) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) m |= std::uint64_t{1} << i;
    return m;
  }
  Vector unpack(std::uint64_t m) const {
    Vector v(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) v[i] = Elem((m >> i) & 1U);
    return v;
  }

  std::uint64_t bracket_basis(std::uint64_t v, std::size_t j) const {
    std::uint64_t r = 0;
    const std::uint64_t* t = &col_[j * chunks_ * 256];
    for (std::size_t c = 0; c < chunks_ && (v >> (8 * c)); ++c) r ^= t[c * 256 + ((v >> (8 * c)) & 0xFF)];
    return r;
  }

  std::uint64_t square(std::uint64_t v) const {
    std::uint64_t r = 0;
    for (std::uint64_t a = v; a; a &= a - 1) {
      const std::size_t i = std::size_t(std::countr_zero(a));
      r ^= sq_[i];
      for (std::uint64_t b = a & (a - 1); b; b &= b - 1) r ^= brk_[i * n_ + std::size_t(std::countr_zero(b))];
    }
    return r;
  }

  // Ideal generated by a homogeneous v; returns the basis (empty if whole).
  bool closure_is_whole(std::uint64_t v, std::vector<std::uint64_t>* basis_out) const {
    std::array<std::uint64_t, 64> piv{};
    std::uint64_t pivmask = 0;
    std::size_t dim = 0;
    std::array<std::uint64_t, 64> queue{};
    std::size_t head = 0, tail = 0;
    auto insert = [&](std::uint64_t x) {
      while (std::uint64_t h = x & pivmask) x ^= piv[std::size_t(std::countr_zero(h))];
      if (!x) return;
      const std::size_t b = std::size_t(std::countr_zero(x));
      piv[b] = x;
      pivmask |= std::uint64_t{1} << b;
      ++dim;
      queue[tail++] = x;
    };
    insert(v);
    while (head < tail && dim < n_) {
      const std::uint64_t x = queue[head++];
      for (std::size_t j = 0; j < n_ && dim < n_; ++j) insert(bracket_basis(x, j));
      if (!(x & even_mask_) && dim < n_) insert(square(x));
    }
    if (dim == n_) return true;
    if (basis_out) {
      basis_out->clear();
      for (std::size_t b = 0; b < n_; ++b)
        if (pivmask >> b & 1U) basis_out->push_back(piv[b]);
    }
    return false;
  }

  std::size_t n() const { return n_; }
  std::size_t e() const { return e_; }

 private:
  std::size_t n_, e_, chunks_ = 0;
  std::uint64_t even_mask_ = 0;
  std::vector<std::uint64_t> brk_, sq_, col_;
};

Subspace as_subspace(const SuperAlgebra& g, const PackedF2& pk, const std::vector<std::uint64_t>& masks) {
  std::vector<Vector> v;
  for (auto m : masks) v.push_back(pk.unpack(m));
  return Subspace(g.field(), g.dim_even(), g.dim_odd(), v);
}

// Number of normalized nonzero vectors on a part of dimension d.
std::size_t projective_count(unsigned p, std::size_t d) {
  if (d > kMaxExhaustivePartDim) return kMaxExhaustiveCandidates + 1;
  std::size_t t = 1;
  for (std::size_t i = 0; i < d; ++i) {
    t *= p;
    if (t > 64 * kMaxExhaustiveCandidates) return kMaxExhaustiveCandidates + 1;
  }
  return (t - 1) / (p - 1);
}

}  // namespace

SimplicityVerdict is_simple(const SuperAlgebra& g, std::size_t random_trials) {
  SimplicityVerdict v;
  const std::size_t n = g.dim();
  if (n <= 1) {
    v.method = "dimension <= 1";
    return v;
  }
  const gf::Field f = g.field();

  // Cheap exact witnesses first.
  for (Subspace cand : {center(g), derived(g, 1)}) {
    if (!cand.is_zero() && !cand.is_whole() && is_ideal(g, cand)) {
      v.method = "center or derived algebra is a proper ideal";
      v.witness = std::move(cand);
      return v;
    }
  }

  const std::size_t cand_count = projective_count(f.p(), g.dim_even()) + projective_count(f.p(), g.dim_odd());
  if (cand_count <= kMaxExhaustiveCandidates) {
    v.method = "exhaustive over homogeneous generators";
    if (f.is_binary() && n <= 64) {
      PackedF2 pk(g);
      std::vector<std::uint64_t> basis;
      for (int part = 0; part < 2; ++part) {
        const std::size_t lo = part == 0 ? 0 : g.dim_even();
        const std::size_t d = part == 0 ? g.dim_even() : g.dim_odd();
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << d); ++m) {
          if (!pk.closure_is_whole(m << lo, &basis)) {
            v.witness = as_subspace(g, pk, basis);
            return v;
          }
        }
      }
      v.simple = true;
      return v;
    }
    // Generic p: vectors whose first nonzero coordinate is 1.
    for (int part = 0; part < 2; ++part) {
      const std::size_t lo = part == 0 ? 0 : g.dim_even();
      const std::size_t hi = part == 0 ? g.dim_even() : n;
      for (std::size_t lead = lo; lead < hi; ++lead) {
        Vector x(n, 0);
        x[lead] = 1;
        while (true) {
          Subspace s(f, g.dim_even(), g.dim_odd(), {x});
          Subspace c = ideal_closure(g, s);
          if (!c.is_whole()) {
            v.witness = std::move(c);
            return v;
          }
          std::size_t k = lead + 1;
          while (k < hi && ++x[k] == f.p()) x[k++] = 0;
          if (k >= hi) break;
        }
      }
    }
    v.simple = true;
    return v;
  }

  v.method = "random generators";
  v.probabilistic = true;
  gf::Rng rng(gf::default_seed());
  for (std::size_t t = 0; t < random_trials; ++t) {
    const bool odd = (t & 1U) && g.dim_odd() > 0;
    const std::size_t lo = odd ? g.dim_even() : 0, hi = odd ? n : g.dim_even();
    if (lo == hi) continue;
    Vector x = gf::random_vector_on(f, n, lo, hi, rng);
    if (gf::is_zero(x)) continue;
    ++v.trials;
    Subspace c = ideal_closure(g, Subspace(f, g.dim_even(), g.dim_odd(), {x}));
    if (!c.is_whole()) {
      v.probabilistic = false;
      v.witness = std::move(c);
      return v;
    }
  }
  v.simple = true;
  return v;
}

}  // namespace nis2::liesuper
