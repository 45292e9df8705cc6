#pragma once

#include <cstdint>
#include <random>

#include "nis2/gf/field.hpp"
#include "nis2/gf/matrix.hpp"

namespace nis2::gf {

/// Seed for randomized checks: NIS2_SEED if set, else a fixed default.
[[nodiscard]] std::uint64_t default_seed();

using Rng = std::mt19937_64;

[[nodiscard]] Elem random_elem(Field f, Rng& rng);
[[nodiscard]] Vector random_vector(Field f, std::size_t n, Rng& rng);
/// Random vector supported on coordinates [lo, hi).
[[nodiscard]] Vector random_vector_on(Field f, std::size_t n, std::size_t lo, std::size_t hi, Rng& rng);
[[nodiscard]] Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace nis2::gf
