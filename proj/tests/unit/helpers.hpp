#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nis2/forms/bilinear_form.hpp"
#include "nis2/gf/random.hpp"
#include "nis2/liesuper/superalgebra.hpp"

namespace nis2::oracle {

using gf::Elem;
using gf::Vector;
using liesuper::SuperAlgebra;

/// Random invertible matrix that preserves parity blocks.
gf::Matrix random_block_change(const SuperAlgebra& g, gf::Rng& rng);

/// One of five families of valid 4|4 superalgebras over F_2, in a random
/// parity-preserving basis. `kind` selects the family modulo 5.
SuperAlgebra random_valid_4_4(unsigned kind, gf::Rng& rng);

/// Random nilpotent of class 2: brackets and squares land in a central part.
SuperAlgebra random_two_step_nilpotent(gf::Field f, std::size_t de, std::size_t dodd, std::size_t ze, std::size_t zo,
                                       gf::Rng& rng);

/// Brute force over every x, y, z of an F_2 algebra of dimension <= 10:
/// B([x,z],y) = B(x,[z,y]). Returns a witness (x, z, y) on failure.
std::optional<std::vector<Vector>> brute_invariance_violation(const SuperAlgebra& g, const gf::Matrix& values);
/// Brute force B(x,y) = B(y,x) for every x, y (F_2, dimension <= 10).
bool brute_symmetric(const gf::Matrix& values);

/// Naive fixed-point ideal generated by v: repeatedly adds [b, e_j] and, for
/// odd basis vectors b of the current span, b^2, until nothing grows.
std::size_t brute_ideal_dim(const SuperAlgebra& g, const Vector& v);
/// Simplicity by brute force over every nonzero homogeneous vector (F_2,
/// each part of dimension <= 16). Dimension 0 or 1 with zero bracket counts
/// as not simple.
bool brute_is_simple(const SuperAlgebra& g);

/// Span membership of value matrices.
bool in_span(const std::vector<gf::Matrix>& basis, const gf::Matrix& m);

/// Reads tests/fixtures/<name>.
std::string fixture(const std::string& name);

}  // namespace nis2::oracle
