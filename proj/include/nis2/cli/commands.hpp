#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nis2/cli/document.hpp"

namespace nis2::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kInputError = 2, kViolation = 3 };

/// An algebra named on the command line: a document path, or "catalog:<name>".
struct LoadedAlgebra {
  liesuper::SuperAlgebra algebra;
  std::optional<restricted::PStructure> p_structure;
};
[[nodiscard]] LoadedAlgebra load_algebra(const std::string& source, std::optional<unsigned> field = std::nullopt);

struct ValidateArgs {
  std::string file;
  std::optional<unsigned> field;
  std::string format = "text";
};
int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err);

struct FormsArgs {
  std::string file;
  bool strict = false;
  bool pencil = false;
  std::string format = "text";
};
int cmd_forms(const FormsArgs& a, std::ostream& out, std::ostream& err);

int cmd_catalog_list(const std::string& format, std::ostream& out);
int cmd_catalog_get(const std::string& name, std::ostream& out, std::ostream& err);

struct QueerifyArgs {
  std::string file;
  bool generalized = false;
};
int cmd_queerify(const QueerifyArgs& a, std::ostream& out, std::ostream& err);

struct TensorArgs {
  std::string l_file;
  std::string a_file;  // unused in extend mode
  std::string mode = "super";
  std::vector<unsigned> poly;  // extend: coefficients of P, low degree first
  std::vector<unsigned> phi;   // extend: φ on 1, x, ...; default coefficient of 1
};
int cmd_tensor(const TensorArgs& a, std::ostream& out, std::ostream& err);

struct RestrictArgs {
  std::string file;
  std::string format = "text";
};
int cmd_restrict(const RestrictArgs& a, std::ostream& out, std::ostream& err);

struct CheckTheoremArgs {
  bool catalog = false;
  std::vector<std::string> files;
  std::string format = "text";
  unsigned jobs = 0;  // 0: hardware concurrency
};
int cmd_check_theorem(const CheckTheoremArgs& a, std::ostream& out, std::ostream& err);

}  // namespace nis2::cli
