#pragma once

#include <string>
#include <vector>

#include "nis2/liesuper/superalgebra.hpp"

namespace nis2::cli {

enum class RowStatus { Pass, Fail, Skip };
const char* to_string(RowStatus s);

/// One algebra's verdict in the batch theorem check.
struct TheoremRow {
  std::string name;
  std::string superdim_of_algebra;  // "8|8"
  unsigned p = 2;
  RowStatus status = RowStatus::Skip;
  bool simple = false;
  bool simplicity_probabilistic = false;
  bool perfect = false;
  std::string nis_superdimension = "-";
  std::string classification;
  std::string certificate = "-";   // PASS / FAIL / "-"
  std::string even_core = "-";     // "restricted simple, NIS" etc.
  std::string note;
  double seconds = 0;
};

/// Runs every check on one algebra. Never throws for mathematical outcomes;
/// violations become Fail rows.
[[nodiscard]] TheoremRow check_theorem_row(const std::string& name, const liesuper::SuperAlgebra& g);

/// Rows for several algebras, evaluated on up to `jobs` threads and returned
/// sorted by name.
[[nodiscard]] std::vector<TheoremRow> check_theorem_rows(
    const std::vector<std::pair<std::string, liesuper::SuperAlgebra>>& inputs, unsigned jobs = 1);

}  // namespace nis2::cli
