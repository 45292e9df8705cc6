#include "nis2/liesuper/subspace.hpp"

#include <stdexcept>

#include "nis2/gf/linalg.hpp"

namespace nis2::liesuper {

Subspace::Subspace(gf::Field f, std::size_t dim_even, std::size_t dim_odd,
                   const std::vector<Vector>& spanning)
    : field_(f), dim_even_(dim_even), dim_odd_(dim_odd) {
  const std::size_t n = dim_even + dim_odd;
  gf::RowSpace rs(f, n);
  for (const auto& v : spanning) {
    if (v.size() != n) throw std::invalid_argument("Subspace: vector length mismatch");
    rs.insert(v);
    if (rs.full()) break;
  }
  basis_ = rs.basis();
  for (const auto& b : basis_) {
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i]) continue;
      (i < dim_even ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) homogeneous_ = false;
  }
}

Subspace Subspace::whole(gf::Field f, std::size_t dim_even, std::size_t dim_odd) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < dim_even + dim_odd; ++i) units.push_back(gf::unit_vector(dim_even + dim_odd, i));
  return Subspace(f, dim_even, dim_odd, units);
}

std::pair<std::size_t, std::size_t> Subspace::superdim() const {
  std::size_t ev = 0;
  for (const auto& b : basis_) {
    bool odd = false;
    for (std::size_t i = dim_even_; i < b.size(); ++i) odd = odd || b[i];
    if (!odd) ++ev;
  }
  return {ev, basis_.size() - ev};
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::contains: length mismatch");
  gf::RowSpace rs(field_, ambient_dim());
  for (const auto& b : basis_) rs.insert(b);
  return rs.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  gf::RowSpace rs(field_, ambient_dim());
  for (const auto& b : basis_) rs.insert(b);
  for (const auto& v : other.basis_)
    if (!rs.contains(v)) return false;
  return true;
}

Subspace Subspace::intersect_parts() const {
  if (homogeneous_) return *this;
  const std::size_t n = ambient_dim();
  std::vector<Vector> out;
  // For each part, find combinations c of the basis whose other-part
  // coordinates vanish: nullspace of the k x |other| system.
  for (int part = 0; part < 2; ++part) {
    const std::size_t lo = part == 0 ? dim_even_ : 0;
    const std::size_t hi = part == 0 ? n : dim_even_;
    gf::Matrix sys(field_, hi - lo, basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r)
      for (std::size_t i = lo; i < hi; ++i)
        if (basis_[r][i]) sys.set(i - lo, r, basis_[r][i]);
    for (const auto& c : gf::nullspace(sys)) {
      Vector v(n, 0);
      for (std::size_t r = 0; r < basis_.size(); ++r)
        if (c[r]) gf::axpy(field_, v, c[r], basis_[r]);
      out.push_back(std::move(v));
    }
  }
  return Subspace(field_, dim_even_, dim_odd_, out);
}

Subspace Subspace::project_parts() const {
  if (homogeneous_) return *this;
  std::vector<Vector> out;
  for (const auto& b : basis_) {
    Vector ev = b, od = b;
    for (std::size_t i = 0; i < b.size(); ++i) (i < dim_even_ ? od : ev)[i] = 0;
    out.push_back(std::move(ev));
    out.push_back(std::move(od));
  }
  return Subspace(field_, dim_even_, dim_odd_, out);
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(field_, dim_even_, dim_odd_, all);
}

}  // namespace nis2::liesuper
