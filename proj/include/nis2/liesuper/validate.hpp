#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nis2/liesuper/superalgebra.hpp"

namespace nis2::liesuper {

/// One checked identity.
///
/// Ids are stable and used by the CLI and tests:
///   alternating          [x,x] = 0 for even x
///   antisymmetry         [x,y] = -(-1)^{p(x)p(y)}[y,x] on basis pairs
///   polarization         [x,y] = (x+y)^2 - x^2 - y^2 for odd x,y        (p = 2)
///   jacobi-even          Jacobi identity on even triples
///   module               [[a,b],x] = [a,[b,x]] - [b,[a,x]], a,b even, x odd
///   jacobi-super         super Jacobi identity on all triples           (p != 2)
///   square-even-action   [x^2,y] = [x,[x,y]], x odd, y even
///   square-self          [x^2,x] = 0, x odd
///   jacobi-odd           [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0, x,y,z odd
///   cubic-self           [x,[x,x]] = 0, x odd                            (p = 3)
///   square-odd-action    [x^2,y] = [x,[x,y]], x,y odd                    (p = 2)
struct AxiomCheck {
  std::string id;
  std::string statement;
  bool passed = true;
  /// False when the identity was sampled rather than decided.
  bool exhaustive = true;
  /// Arguments of the first failure, in order (x, y, z as needed).
  std::vector<Vector> witness;
  Vector lhs;
  Vector rhs;
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> structural_errors;
  std::vector<AxiomCheck> axioms;

  /// No structural errors and every applicable axiom passed.
  [[nodiscard]] bool ok() const;
  [[nodiscard]] const AxiomCheck* find(std::string_view id) const;
  [[nodiscard]] std::vector<std::string> failed() const;
  /// Only alternating/antisymmetry failed: the table would define a Leibniz
  /// superalgebra. Reported, not modelled.
  [[nodiscard]] bool only_symmetry_fails() const;
};

/// Checks every axiom of a Lie superalgebra over F_p. Tables that violate
/// the parity grading are reported as structural errors and no identities
/// are evaluated.
[[nodiscard]] ValidationReport validate(const SuperAlgebra& g);

}  // namespace nis2::liesuper
