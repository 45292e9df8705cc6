#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "nis2/build/catalog.hpp"
#include "nis2/cli/check_theorem.hpp"
#include "nis2/cli/commands.hpp"
#include "nis2/cli/document.hpp"
#include "nis2/liesuper/validate.hpp"

using namespace nis2;
using cli::InputError;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary; stderr is discarded unless merged.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(NIS2_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return std::string(NIS2_FIXTURES) + "/" + name + ".json"; }

const char* kMinimal = R"({"p": 2, "dimEven": 1, "dimOdd": 1, "bracket": [], "squaring": []})";

std::string with(const std::string& body) { return "{\"p\": 2, \"dimEven\": 2, \"dimOdd\": 1, " + body + "}"; }

}  // namespace

TEST(Document, CanonicalFixturesRoundTripByteForByte) {
  for (const char* name : {"sl3", "qsl3", "q2", "psq3", "witt-1-3", "example-3-2-1", "sl2-f3", "gl11-restricted",
                           "gl11-mutated-pmap", "qsl3-mutated-pmap", "qsl3-mutated-odd"}) {
    SCOPED_TRACE(name);
    const std::string text = oracle::fixture(std::string(name) + ".json");
    const auto doc = cli::parse_document(text);
    EXPECT_EQ(cli::serialize_document(doc), text);
    EXPECT_EQ(cli::parse_document(cli::serialize_document(doc)), doc);
  }
}

TEST(Document, AlgebraRoundTripOverCatalog) {
  for (const auto& e : build::catalog()) {
    SCOPED_TRACE(e.name);
    const auto doc = cli::to_document(e.algebra);
    const auto g = cli::to_algebra(cli::parse_document(cli::serialize_document(doc)));
    EXPECT_TRUE(g == e.algebra);
    EXPECT_EQ(g.labels(), e.algebra.labels());
  }
}

TEST(Document, SerializationSortsEntries) {
  const auto a = cli::parse_document(
      with(R"("bracket": [[1, 2, 2, 1], [0, 2, 2, 1]], "squaring": [[2, 1, 1], [2, 0, 1]])"));
  const auto b = cli::parse_document(
      with(R"("bracket": [[0, 2, 2, 1], [1, 2, 2, 1]], "squaring": [[2, 0, 1], [2, 1, 1]])"));
  EXPECT_EQ(cli::serialize_document(a), cli::serialize_document(b));
}

TEST(Document, PStructureRoundTrips) {
  const auto doc = cli::parse_document(oracle::fixture("sl3.json"));
  ASSERT_TRUE(doc.p_structure.has_value());
  const auto g = cli::to_algebra(doc);
  const auto ps = cli::to_p_structure(doc, g);
  ASSERT_TRUE(ps.has_value());
  EXPECT_EQ(cli::to_document(g, ps), doc);
}

TEST(Document, InputErrors) {
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"unknown key", R"({"p": 2, "dimEven": 1, "dimOdd": 0, "bracket": [], "squaring": [], "extra": 1})"},
      {"missing p", R"({"dimEven": 1, "dimOdd": 0, "bracket": [], "squaring": []})"},
      {"p not prime", R"({"p": 4, "dimEven": 1, "dimOdd": 0, "bracket": [], "squaring": []})"},
      {"negative dim", R"({"p": 2, "dimEven": -1, "dimOdd": 0, "bracket": [], "squaring": []})"},
      {"i == j", with(R"("bracket": [[0, 0, 1, 1]], "squaring": [])")},
      {"i > j", with(R"("bracket": [[1, 0, 1, 1]], "squaring": [])")},
      {"index range", with(R"("bracket": [[0, 3, 1, 1]], "squaring": [])")},
      {"unreduced", with(R"("bracket": [[0, 1, 1, 2]], "squaring": [])")},
      {"duplicate", with(R"("bracket": [[0, 1, 1, 1], [0, 1, 1, 1]], "squaring": [])")},
      {"parity", with(R"("bracket": [[0, 1, 2, 1]], "squaring": [])")},
      {"even squared", with(R"("bracket": [], "squaring": [[0, 1, 1]])")},
      {"odd square", with(R"("bracket": [], "squaring": [[2, 2, 1]])")},
      {"entry arity", with(R"("bracket": [[0, 1, 1]], "squaring": [])")},
      {"labels count", with(R"("labels": ["a"], "bracket": [], "squaring": [])")},
      {"labels distinct", with(R"("labels": ["a", "a", "b"], "bracket": [], "squaring": [])")},
      {"pStructure odd", with(R"("bracket": [], "squaring": [], "pStructure": [[2, 0, 1]])")},
      {"not json", "{\"p\": 2,"},
      {"not object", "[1, 2]"},
  };
  for (const auto& [what, text] : bad) {
    SCOPED_TRACE(what);
    EXPECT_THROW((void)cli::parse_document(text), InputError);
  }
  EXPECT_NO_THROW((void)cli::parse_document(kMinimal));
  EXPECT_THROW((void)cli::parse_document(oracle::fixture("truncated.json")), InputError);
}

TEST(Document, FieldOverrideReinterpretsCoefficients) {
  const auto doc = cli::parse_document(oracle::fixture("sl3.json"));
  const auto g3 = cli::to_algebra(doc, 3u);
  EXPECT_EQ(g3.p(), 3u);
  EXPECT_EQ(g3.dim(), 8u);
  // the F_2 table of sl(3) read over F_3 loses its signs and is not a Lie algebra
  EXPECT_FALSE(liesuper::validate(g3).ok());
  EXPECT_THROW((void)cli::to_algebra(doc, 4u), InputError);
}

TEST(Document, OddPrimeSquaringMeansHalfBracket) {
  // over F_3: e1^2 = e0 means [e1, e1] = 2 e0
  const auto doc = cli::parse_document(R"({"p": 3, "dimEven": 1, "dimOdd": 1, "bracket": [], "squaring": [[1, 0, 1]]})");
  const auto g = cli::to_algebra(doc);
  EXPECT_EQ(g.basis_bracket(1, 1), (gf::Vector{2, 0}));
  EXPECT_EQ(g.square(gf::unit_vector(2, 1)), (gf::Vector{1, 0}));
  const auto back = cli::to_document(g);
  EXPECT_EQ(back.squaring, doc.squaring);
  EXPECT_TRUE(back.bracket.empty());
}

TEST(Document, ParseAssoc) {
  const auto a = cli::parse_assoc(oracle::fixture("odd-involution.json"));
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_THROW((void)cli::parse_assoc(R"({"p": 2, "dimEven": 1, "dimOdd": 0, "unit": 0, "mult": [[0, 0, 1, 1]]})"),
               InputError);
  EXPECT_THROW((void)cli::parse_assoc(R"({"p": 2, "dimEven": 1, "dimOdd": 0, "unit": 0, "mult": []})"), InputError);
}

TEST(Commands, InProcessExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_validate({fx("sl3"), std::nullopt, "text"}, out, err), cli::kPass);
  EXPECT_EQ(cli::cmd_validate({fx("example-3-2-1"), std::nullopt, "text"}, out, err), cli::kFailure);
  EXPECT_EQ(cli::cmd_validate({fx("truncated"), std::nullopt, "text"}, out, err), cli::kInputError);
  EXPECT_EQ(cli::cmd_validate({fx("does-not-exist"), std::nullopt, "text"}, out, err), cli::kInputError);
  EXPECT_EQ(cli::cmd_validate({fx("sl3"), std::nullopt, "yaml"}, out, err), cli::kInputError);
  EXPECT_EQ(cli::cmd_catalog_get("no-such-algebra", out, err), cli::kInputError);
  EXPECT_EQ(cli::cmd_restrict({fx("gl11-restricted"), "text"}, out, err), cli::kPass);
  EXPECT_EQ(cli::cmd_restrict({fx("gl11-mutated-pmap"), "text"}, out, err), cli::kFailure);
  EXPECT_EQ(cli::cmd_restrict({fx("witt-1-3"), "text"}, out, err), cli::kFailure);
  EXPECT_EQ(cli::cmd_forms({fx("example-3-2-1"), false, false, "text"}, out, err), cli::kFailure);
}

TEST(Commands, ScalarExtensionDemoReportsOpenField) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_forms({"catalog:sl3xF4", false, true, "text"}, out, err), cli::kPass);
  EXPECT_NE(out.str().find("NIS superdimension: 2|0 (field not closed)"), std::string::npos);
  EXPECT_NE(out.str().find("root in F_2: no"), std::string::npos);
}

TEST(Commands, CatalogGetMatchesFixture) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_catalog_get("qof(sl3)", out, err), cli::kPass);
  EXPECT_EQ(out.str(), oracle::fixture("qsl3.json"));
}

TEST(Commands, CheckTheoremRowsAreDeterministic) {
  std::vector<std::pair<std::string, liesuper::SuperAlgebra>> in;
  for (const char* n : {"sl(3)", "q(2)", "qof(sl3)", "gl(1|1)", "W'(1;3)"})
    if (auto e = build::catalog_get(n)) in.emplace_back(e->name, e->algebra);
  ASSERT_GE(in.size(), 3u);
  const auto a = cli::check_theorem_rows(in, 1);
  const auto b = cli::check_theorem_rows(in, 4);
  ASSERT_EQ(a.size(), in.size());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].nis_superdimension, b[i].nis_superdimension);
    if (i) EXPECT_LT(a[i - 1].name, a[i].name);
  }
}

TEST(Commands, CheckTheoremSkipsNonSimple) {
  const auto sl2 = build::catalog_get("sl(2)");
  ASSERT_TRUE(sl2.has_value());
  const auto row = cli::check_theorem_row("sl(2)", sl2->algebra);
  EXPECT_EQ(row.status, cli::RowStatus::Skip);
  EXPECT_NE(row.note.find("not simple"), std::string::npos);
}

TEST(Subprocess, Validate) {
  EXPECT_EQ(run_cli("validate " + fx("sl3")).code, 0);
  const auto ex = run_cli("validate " + fx("example-3-2-1") + " --field 2");
  EXPECT_EQ(ex.code, 1);
  EXPECT_NE(ex.out.find("square-odd-action"), std::string::npos);
  EXPECT_NE(ex.out.find("witness (X, Y)"), std::string::npos);
  EXPECT_EQ(run_cli("validate " + fx("truncated")).code, 2);
  EXPECT_EQ(run_cli("validate").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  const auto js = run_cli("validate " + fx("sl3") + " --format json");
  EXPECT_EQ(js.code, 0);
  EXPECT_NE(js.out.find("\"ok\": true"), std::string::npos);
}

TEST(Subprocess, Forms) {
  const auto q = run_cli("forms " + fx("qsl3"));
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("NIS superdimension: 1|1; classification: queerification\n"), std::string::npos);
  EXPECT_NE(q.out.find("queer-operator certificate: PASS"), std::string::npos);
  const auto s = run_cli("forms " + fx("sl3"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("NIS superdimension: 1|0; classification: even NIS\n"), std::string::npos);
  const auto ext = run_cli("forms catalog:sl3xF4 --pencil");
  EXPECT_EQ(ext.code, 0);
  EXPECT_NE(ext.out.find("2|0 (field not closed)"), std::string::npos);
  EXPECT_EQ(run_cli("forms catalog:nonsense").code, 2);
}

TEST(Subprocess, CatalogQueerifyTensor) {
  const auto list = run_cli("catalog list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("qof(sl3)"), std::string::npos);
  EXPECT_EQ(run_cli("catalog get nonsense").code, 2);

  const auto q = run_cli("queerify " + fx("sl3"));
  ASSERT_EQ(q.code, 0);
  const auto qa = cli::to_algebra(cli::parse_document(q.out));
  EXPECT_TRUE(qa == cli::to_algebra(cli::parse_document(oracle::fixture("qsl3.json"))));
  EXPECT_EQ(run_cli("queerify " + fx("witt-1-3")).code, 1);
  EXPECT_EQ(run_cli("queerify " + fx("witt-1-3") + " --generalized").code, 0);

  const auto t = run_cli("tensor " + fx("sl3") + " " + fx("odd-involution") + " --mode comm24");
  ASSERT_EQ(t.code, 0);
  EXPECT_TRUE(cli::to_algebra(cli::parse_document(t.out)) == qa);
  const auto sup = run_cli("tensor " + fx("sl3") + " " + fx("grassmann1") + " --mode super");
  ASSERT_EQ(sup.code, 0);
  EXPECT_TRUE(liesuper::validate(cli::to_algebra(cli::parse_document(sup.out))).ok());
  const auto e = run_cli("tensor " + fx("sl3") + " --mode extend --poly 1,1,1", true);
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("B_phi: invariant, symmetric, nondegenerate"), std::string::npos);
  EXPECT_EQ(run_cli("tensor " + fx("sl3") + " --mode extend --poly 0,0,1").code, 2);
}

TEST(Subprocess, RestrictAndCheckTheorem) {
  const auto r = run_cli("restrict " + fx("qsl3-mutated-odd"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("y even: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("y odd: FAIL"), std::string::npos);
  EXPECT_EQ(run_cli("restrict " + fx("gl11-restricted")).code, 0);

  const auto c = run_cli("check-theorem --catalog");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("qof(sl3)"), std::string::npos);
  EXPECT_EQ(run_cli("check-theorem").code, 2);
}
