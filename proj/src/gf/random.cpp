#include "nis2/gf/random.hpp"

#include <cstdlib>
#include <string>

namespace nis2::gf {

std::uint64_t default_seed() {
  if (const char* s = std::getenv("NIS2_SEED"); s && *s) {
    try {
      return std::stoull(s);
    } catch (...) {
      return std::hash<std::string>{}(s);
    }
  }
  return 0x6e69733232ULL;
}

Elem random_elem(Field f, Rng& rng) {
  return Elem(std::uniform_int_distribution<unsigned>(0, f.p() - 1)(rng));
}

Vector random_vector(Field f, std::size_t n, Rng& rng) { return random_vector_on(f, n, 0, n, rng); }

Vector random_vector_on(Field f, std::size_t n, std::size_t lo, std::size_t hi, Rng& rng) {
  Vector v(n, 0);
  for (std::size_t i = lo; i < hi; ++i) v[i] = random_elem(f, rng);
  return v;
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_elem(f, rng));
  return m;
}

}  // namespace nis2::gf
