#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nis2/build/assoc.hpp"
#include "nis2/liesuper/superalgebra.hpp"
#include "nis2/restricted/pstructure.hpp"

namespace nis2::cli {

/// Malformed or inconsistent input; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk algebra. Brackets store i < j only; odd squares live in
/// `squaring` (for odd p, [e_i, e_i] = 2 e_i^2). See docs/format.md.
struct AlgebraDocument {
  unsigned p = 2;
  std::size_t dim_even = 0;
  std::size_t dim_odd = 0;
  std::vector<std::string> labels;                    // empty: none stored
  std::vector<std::array<unsigned, 4>> bracket;       // (i, j, k, c), i < j
  std::vector<std::array<unsigned, 3>> squaring;      // (i, k, c), i odd
  std::optional<std::vector<std::array<unsigned, 3>>> p_structure;  // (i, k, c), e_i^[p]

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

[[nodiscard]] AlgebraDocument parse_document(const std::string& text);
/// Canonical form: fixed key order, entries sorted, one entry per line.
[[nodiscard]] std::string serialize_document(const AlgebraDocument& doc);

/// `field_override` reinterprets the stored coefficients modulo another prime.
[[nodiscard]] liesuper::SuperAlgebra to_algebra(const AlgebraDocument& doc, std::optional<unsigned> field_override = {});
[[nodiscard]] std::optional<restricted::PStructure> to_p_structure(const AlgebraDocument& doc,
                                                                   const liesuper::SuperAlgebra& g);
[[nodiscard]] AlgebraDocument to_document(const liesuper::SuperAlgebra& g,
                                          const std::optional<restricted::PStructure>& ps = std::nullopt);

/// Associative factor: {"p", "dimEven", "dimOdd", "unit", "labels"?, "mult": [[i, j, k, c], ...]}.
[[nodiscard]] build::AssocSuperAlgebra parse_assoc(const std::string& text);

[[nodiscard]] std::string read_file(const std::string& path);

}  // namespace nis2::cli
