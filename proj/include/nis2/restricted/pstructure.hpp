#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nis2/gf/matrix.hpp"
#include "nis2/liesuper/subspace.hpp"
#include "nis2/liesuper/superalgebra.hpp"

namespace nis2::restricted {

using liesuper::Parity;
using liesuper::SuperAlgebra;
using gf::Elem;
using gf::Vector;

/// A p-structure on the even part: e_i^[p] for each even basis vector,
/// extended to all of g_ev by Frobenius semilinearity and the s_i correction
/// terms. On odd vectors x^[2p] := (x^2)^[p] is derived, never stored.
struct PStructure {
  /// p_map[i] = e_i^[p] for i < dim_even, as a vector of g (even support).
  std::vector<Vector> p_map;
  /// center(g_ev) inside g: the set of all choices is p_map + (maps into it).
  std::vector<Vector> ambiguity;
  [[nodiscard]] bool ambiguous() const { return !ambiguity.empty(); }
};

/// (ad_x)^k as an operator on all of g.
[[nodiscard]] gf::Matrix ad_power(const SuperAlgebra& g, const Vector& x, unsigned k);

/// Coefficient vectors s_1..s_{p-1}(x, y) with (x+y)^[p] = x^[p] + y^[p] + sum s_i.
[[nodiscard]] std::vector<Vector> jacobson_terms(const SuperAlgebra& g, const Vector& x, const Vector& y);

/// x^[p] for any even x.
[[nodiscard]] Vector p_power(const SuperAlgebra& g, const PStructure& ps, const Vector& x);
/// x^[2p] = (x^2)^[p] for odd x.
[[nodiscard]] Vector two_p_power(const SuperAlgebra& g, const PStructure& ps, const Vector& x);

/// Solves ad_y = (ad_{e_i})^p on g_ev for every even basis vector. Absent
/// when some (ad_{e_i})^p is not inner. With a nonzero center of g_ev the
/// solver's representative is kept and the center is attached as ambiguity.
[[nodiscard]] std::optional<PStructure> find_p_structure(const SuperAlgebra& g);

struct PVerdict {
  bool even_ok = true;   // [x^[p], y] = (ad_x)^p y, x, y even
  bool odd_ok = true;    // same with y odd
  bool two_p_ok = true;  // [x^[2p], y] = (ad_x)^{2p} y, x odd, y any
  bool exhaustive = true;
  std::string failure;
  Parity failure_parity = Parity::Even;  // parity of y in the first failure
  std::vector<Vector> witness;           // (x, y)
  [[nodiscard]] bool ok() const { return even_ok && odd_ok && two_p_ok; }
};

/// The p-structure identity on g_ev only (plus Frobenius and additivity by construction).
[[nodiscard]] PVerdict verify_p_structure(const SuperAlgebra& g, const PStructure& ps);

/// Even part, odd part and the induced [2p] map, each tested separately.
[[nodiscard]] PVerdict verify_2_4_structure(const SuperAlgebra& g, const PStructure& ps);

struct ClosureResult {
  /// The closure as a Lie algebra; basis starts with ad(e_1), ..., ad(e_n).
  SuperAlgebra algebra;
  /// Each basis element as an operator on g (column j = D e_j).
  std::vector<gf::Matrix> operators;
  /// dim(closure) x dim(g); column i = coordinates of ad(e_i), i.e. e_i.
  gf::Matrix embedding;
  [[nodiscard]] bool adds_nothing() const { return operators.size() == embedding.cols(); }
};

/// The Lie subalgebra of der(g) generated by ad(g) and (ad x)^2 for basis x
/// and pairwise sums. p = 2, purely even g with zero center; otherwise
/// std::invalid_argument.
[[nodiscard]] ClosureResult one_step_closure(const SuperAlgebra& g);

/// Coordinates of an operator in the closure basis; absent if outside.
[[nodiscard]] std::optional<Vector> closure_coordinates(const ClosureResult& c, const gf::Matrix& op);

}  // namespace nis2::restricted
