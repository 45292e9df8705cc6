#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nis2/gf/matrix.hpp"
#include "nis2/liesuper/subspace.hpp"
#include "nis2/liesuper/superalgebra.hpp"

namespace nis2::liesuper {

/// Span of [e_i, e_j] over all basis pairs. Over F_2 this excludes odd squares.
[[nodiscard]] Subspace commutant(const SuperAlgebra& g);

/// i-th term of the derived series: g^(0) = g and
/// g^(i+1) = [g^(i), g^(i)] + span{x^2 : x in g^(i)_od}.
[[nodiscard]] Subspace derived(const SuperAlgebra& g, std::size_t i);

/// {x : [x, y] = 0 for all y}.
[[nodiscard]] Subspace center(const SuperAlgebra& g);

/// The ideal generated by s: the smallest homogeneous, ad-invariant,
/// squaring-closed subspace containing pr_ev(s) + pr_od(s).
[[nodiscard]] Subspace ideal_closure(const SuperAlgebra& g, const Subspace& s);

/// True iff s is homogeneous, [s, g] ⊆ s and x^2 ∈ s for odd x ∈ s.
[[nodiscard]] bool is_ideal(const SuperAlgebra& g, const Subspace& s);

struct SimplicityVerdict {
  bool simple = false;
  /// The verdict "simple" came from random trials, not an exhaustive scan.
  bool probabilistic = false;
  std::size_t trials = 0;
  /// A proper nonzero ideal when simple is false (absent for dim <= 1).
  std::optional<Subspace> witness;
  std::string method;
};

/// Exhaustive over homogeneous generators when both parts are small enough
/// (every ideal is homogeneous, so a proper ideal contains a homogeneous
/// nonzero vector whose closure is proper). Otherwise random generators are
/// tried and the answer is labelled probabilistic.
[[nodiscard]] SimplicityVerdict is_simple(const SuperAlgebra& g, std::size_t random_trials = 256);

/// A homogeneous linear map of the algebra; column j is D(e_j).
struct Derivation {
  gf::Matrix matrix;
  Parity parity;
};

/// Basis of the derivation superalgebra, even derivations first. Over F_2
/// the condition D(x^2) = [D(x), x] is imposed on odd e_i and e_i + e_j.
[[nodiscard]] std::vector<Derivation> derivations(const SuperAlgebra& g);

/// Even linear maps commuting with every ad(e_i). For a simple algebra this
/// is a field; dimension > 1 means g is not central simple.
[[nodiscard]] std::vector<gf::Matrix> centroid(const SuperAlgebra& g);

/// Checks the Leibniz rule on basis pairs and, over F_2, the squaring rule.
[[nodiscard]] bool is_derivation(const SuperAlgebra& g, const gf::Matrix& d, Parity parity);

/// The subalgebra carried by a homogeneous subspace closed under bracket and
/// squaring, in the subspace's echelon basis. The returned embedding has the
/// basis vectors as columns. Throws std::invalid_argument if not closed.
struct SubalgebraResult {
  SuperAlgebra algebra;
  gf::Matrix embedding;
};
[[nodiscard]] SubalgebraResult subalgebra(const SuperAlgebra& g, const Subspace& s);

/// The subalgebra spanned by an explicit basis (first dim_even vectors even,
/// the rest odd). Throws std::invalid_argument if the vectors are dependent,
/// of the wrong parity, or do not span a subalgebra.
[[nodiscard]] SuperAlgebra subalgebra_on_basis(const SuperAlgebra& g, const std::vector<Vector>& basis,
                                               std::size_t dim_even, std::vector<std::string> labels = {});

/// g / I for an ideal I; basis: the standard vectors at non-pivot columns of I.
[[nodiscard]] SuperAlgebra quotient(const SuperAlgebra& g, const Subspace& ideal);

/// g ⊕ h with basis g_ev, h_ev, g_od, h_od.
[[nodiscard]] SuperAlgebra direct_sum(const SuperAlgebra& g, const SuperAlgebra& h);

/// The same algebra in the basis given by the columns of `change`, which must
/// be invertible and map even (odd) coordinates to even (odd) vectors.
[[nodiscard]] SuperAlgebra change_basis(const SuperAlgebra& g, const gf::Matrix& change);

}  // namespace nis2::liesuper
