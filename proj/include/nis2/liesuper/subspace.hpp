#pragma once

#include <cstddef>
#include <vector>

#include "nis2/gf/field.hpp"

namespace nis2::liesuper {

using gf::Vector;

/// A subspace of the coordinate space of a superalgebra with the given format.
///
/// The basis is kept in reduced echelon form, so two subspaces are equal iff
/// their bases are. Because even coordinates precede odd ones, the echelon
/// basis of a homogeneous subspace consists of homogeneous vectors.
class Subspace {
 public:
  Subspace(gf::Field f, std::size_t dim_even, std::size_t dim_odd,
           const std::vector<Vector>& spanning = {});

  static Subspace whole(gf::Field f, std::size_t dim_even, std::size_t dim_odd);

  [[nodiscard]] gf::Field field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const { return dim_even_ + dim_odd_; }
  [[nodiscard]] std::size_t ambient_dim_even() const { return dim_even_; }
  [[nodiscard]] std::size_t ambient_dim_odd() const { return dim_odd_; }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] bool is_zero() const { return basis_.empty(); }
  [[nodiscard]] bool is_whole() const { return basis_.size() == ambient_dim(); }
  /// Every basis vector is purely even or purely odd.
  [[nodiscard]] bool homogeneous() const { return homogeneous_; }
  /// (dim of even basis vectors | dim of odd basis vectors); meaningful when homogeneous.
  [[nodiscard]] std::pair<std::size_t, std::size_t> superdim() const;

  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;

  /// S ∩ g_ev ⊕ S ∩ g_od, the largest homogeneous subspace inside S.
  [[nodiscard]] Subspace intersect_parts() const;
  /// pr_ev(S) ⊕ pr_od(S), the smallest homogeneous subspace containing S.
  [[nodiscard]] Subspace project_parts() const;

  [[nodiscard]] Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  gf::Field field_;
  std::size_t dim_even_;
  std::size_t dim_odd_;
  std::vector<Vector> basis_;
  bool homogeneous_ = true;
};

}  // namespace nis2::liesuper
