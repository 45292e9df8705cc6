#pragma once

#include <cstddef>
#include <functional>

#include "nis2/gf/field.hpp"

namespace nis2::liesuper {

/// Test points for a polynomial identity of degree <= `degree` in a vector
/// supported on coordinates [lo, hi).
///
/// A polynomial function on F_p^m vanishes identically iff it vanishes on
/// every vector with at most `degree` nonzero coordinates, each taken from
/// {1, ..., min(degree, p - 1)}. That set is enumerated when it has at most
/// `budget` points; otherwise `samples` uniformly random vectors are used and
/// *exhaustive is set to false.
///
/// fn returns false to stop early; the function then returns false.
bool for_each_test_vector(gf::Field f, std::size_t n, std::size_t lo, std::size_t hi, unsigned degree,
                          const std::function<bool(const gf::Vector&)>& fn, bool* exhaustive = nullptr,
                          std::size_t budget = 400000, std::size_t samples = 3000);

/// Number of points the exhaustive enumeration would visit (saturating).
[[nodiscard]] std::size_t test_vector_count(gf::Field f, std::size_t m, unsigned degree);

}  // namespace nis2::liesuper
