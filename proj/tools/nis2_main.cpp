#include <iostream>

#include <CLI11.hpp>

#include "nis2/cli/commands.hpp"

using namespace nis2::cli;

int main(int argc, char** argv) {
  CLI::App app{"nis2: Lie superalgebras over F_p, invariant forms and the NIS superdimension"};
  app.require_subcommand(1);
  int code = kPass;

  ValidateArgs va;
  unsigned field = 0;
  auto* validate = app.add_subcommand("validate", "check the Lie superalgebra axioms");
  validate->add_option("file", va.file, "algebra document or catalog:<name>")->required();
  validate->add_option("--field", field, "reinterpret coefficients modulo this prime");
  validate->add_option("--format", va.format, "text or json");
  validate->callback([&] {
    if (field) va.field = field;
    code = cmd_validate(va, std::cout, std::cerr);
  });

  FormsArgs fa;
  auto* forms = app.add_subcommand("forms", "invariant symmetric forms and the NIS superdimension");
  forms->add_option("file", fa.file, "algebra document or catalog:<name>")->required();
  forms->add_flag("--strict", fa.strict, "also impose B(x^2,y) = B(x,[x,y]) (p = 2)");
  forms->add_flag("--pencil", fa.pencil, "print det(B1 + t B2) for same-parity pairs");
  forms->add_option("--format", fa.format, "text or json");
  forms->callback([&] { code = cmd_forms(fa, std::cout, std::cerr); });

  std::string cat_action, cat_name, cat_format = "text";
  auto* catalog = app.add_subcommand("catalog", "list the built-in algebras or print one as a document");
  catalog->add_option("action", cat_action, "list or get")->required()->check(CLI::IsMember({"list", "get"}));
  catalog->add_option("name", cat_name, "entry name for get");
  catalog->add_option("--format", cat_format, "text or json (list)");
  catalog->callback([&] {
    if (cat_action == "list") {
      code = cmd_catalog_list(cat_format, std::cout);
    } else if (cat_name.empty()) {
      std::cerr << "input error: catalog get needs a name\n";
      code = kInputError;
    } else {
      code = cmd_catalog_get(cat_name, std::cout, std::cerr);
    }
  });

  QueerifyArgs qa;
  auto* queerify = app.add_subcommand("queerify", "queerification of a restricted Lie algebra (p = 2)");
  queerify->add_option("file", qa.file, "algebra document or catalog:<name>")->required();
  queerify->add_flag("--generalized", qa.generalized, "use the one-step restricted closure instead");
  queerify->callback([&] { code = cmd_queerify(qa, std::cout, std::cerr); });

  TensorArgs ta;
  auto* tensor = app.add_subcommand("tensor", "tensor product with an associative superalgebra");
  tensor->add_option("l_file", ta.l_file, "Lie superalgebra document or catalog:<name>")->required();
  tensor->add_option("a_file", ta.a_file, "associative superalgebra document (not needed for extend)");
  tensor->add_option("--mode", ta.mode, "super, comm24 or extend")->check(CLI::IsMember({"super", "comm24", "extend"}));
  tensor->add_option("--poly", ta.poly, "extend: coefficients of P, constant term first")->delimiter(',');
  tensor->add_option("--phi", ta.phi, "extend: values of the functional on 1, x, ...")->delimiter(',');
  tensor->callback([&] { code = cmd_tensor(ta, std::cout, std::cerr); });

  RestrictArgs ra;
  auto* restrict_cmd = app.add_subcommand("restrict", "find and verify a p-structure");
  restrict_cmd->add_option("file", ra.file, "algebra document or catalog:<name>")->required();
  restrict_cmd->add_option("--format", ra.format, "text or json");
  restrict_cmd->callback([&] { code = cmd_restrict(ra, std::cout, std::cerr); });

  CheckTheoremArgs ca;
  auto* check = app.add_subcommand("check-theorem", "batch check of the NIS superdimension theorem");
  check->add_flag("--catalog", ca.catalog, "check the built-in catalog");
  check->add_option("files", ca.files, "algebra documents or catalog:<name>");
  check->add_option("--format", ca.format, "text or json");
  check->add_option("--jobs", ca.jobs, "worker threads (default: hardware concurrency)");
  check->callback([&] { code = cmd_check_theorem(ca, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  return code;
}
