#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nis2/build/catalog.hpp"
#include "nis2/build/matrix_algebras.hpp"
#include "nis2/build/queerify.hpp"
#include "nis2/cli/document.hpp"
#include "nis2/gf/linalg.hpp"
#include "nis2/liesuper/structure.hpp"
#include "nis2/liesuper/validate.hpp"
#include "nis2/restricted/pstructure.hpp"

using namespace nis2;
using namespace nis2::restricted;
using gf::Field;
using gf::Matrix;

namespace {

SuperAlgebra entry(const std::string& name) { return build::catalog_get(name).value().algebra; }

SuperAlgebra witt_derived() {
  const SuperAlgebra w = build::witt_divided(3);
  return liesuper::subalgebra(w, liesuper::commutant(w)).algebra;
}

std::pair<SuperAlgebra, std::optional<PStructure>> load_fixture(const std::string& name) {
  const auto doc = cli::parse_document(oracle::fixture(name));
  SuperAlgebra g = cli::to_algebra(doc);
  auto ps = cli::to_p_structure(doc, g);
  return {g, ps};
}

Vector even_unit(const SuperAlgebra& g, std::size_t i) { return gf::unit_vector(g.dim(), i); }

}  // namespace

TEST(PStructure, Sl3OverF2IsRestrictedWithTheMatrixSquare) {
  const SuperAlgebra g = entry("sl(3)");
  const auto ps = find_p_structure(g);
  ASSERT_TRUE(ps);
  EXPECT_FALSE(ps->ambiguous());
  const PVerdict v = verify_p_structure(g, *ps);
  EXPECT_TRUE(v.ok()) << v.failure;
  EXPECT_TRUE(v.exhaustive);
  // x^[2] is the matrix square minus its trace part: root vectors square to 0, h_i to h_i.
  const auto mats = build::sl3_chevalley_matrices(Field(2));
  for (std::size_t i = 0; i < 8; ++i) {
    const Matrix sq = mats[i] * mats[i];
    Matrix img(Field(2), 3, 3);
    for (std::size_t k = 0; k < 8; ++k)
      if (ps->p_map[i][k]) img = img + mats[k];
    Elem tr = 0;
    for (std::size_t d = 0; d < 3; ++d) tr ^= sq.get(d, d);
    // over F_2 with n = 3, x^2 - tr(x^2) 1 is traceless; compare modulo scalars
    Matrix diff = img + sq;
    if (tr) diff = diff + Matrix::identity(Field(2), 3);
    bool scalar = diff.get(0, 1) == 0 && diff.get(0, 2) == 0 && diff.get(1, 0) == 0 && diff.get(1, 2) == 0 &&
                  diff.get(2, 0) == 0 && diff.get(2, 1) == 0 && diff.get(0, 0) == diff.get(1, 1) &&
                  diff.get(1, 1) == diff.get(2, 2);
    EXPECT_TRUE(scalar) << g.label(i);
  }
}

TEST(PStructure, AdditivityOnAllBasisPairs) {
  for (const char* name : {"sl(3)", "psl(4)", "qof(sl3)"}) {
    const SuperAlgebra g = entry(name);
    const auto ps = find_p_structure(g);
    ASSERT_TRUE(ps) << name;
    for (std::size_t i = 0; i < g.dim_even(); ++i)
      for (std::size_t j = 0; j < g.dim_even(); ++j) {
        const Vector x = even_unit(g, i), y = even_unit(g, j);
        Vector lhs = p_power(g, *ps, gf::add(g.field(), x, y));
        Vector rhs = gf::add(g.field(), p_power(g, *ps, x), p_power(g, *ps, y));
        rhs = gf::add(g.field(), rhs, g.bracket(x, y));
        EXPECT_EQ(lhs, rhs) << name << " " << i << "," << j;
        const auto s = jacobson_terms(g, x, y);
        ASSERT_EQ(s.size(), 1U);
        EXPECT_EQ(s[0], g.bracket(x, y));
      }
  }
}

TEST(PStructure, AdOfSquareEqualsSquareOfAdOnRandomPairs) {
  const SuperAlgebra g = entry("qof(sl3)");
  const auto ps = find_p_structure(g);
  ASSERT_TRUE(ps);
  gf::Rng rng(gf::default_seed());
  for (int t = 0; t < 1000; ++t) {
    const Vector x = gf::random_vector_on(g.field(), g.dim(), 0, g.dim_even(), rng);
    const Vector y = gf::random_vector(g.field(), g.dim(), rng);
    EXPECT_EQ(g.bracket(p_power(g, *ps, x), y), g.bracket(x, g.bracket(x, y)));
  }
  EXPECT_EQ(ad_power(g, even_unit(g, 3), 2), g.ad_basis(3) * g.ad_basis(3));
}

TEST(PStructure, OddCharacteristicFrobeniusAndJacobsonTerms) {
  const SuperAlgebra g = entry("sl(2)/F3");
  const auto ps = find_p_structure(g);
  ASSERT_TRUE(ps);
  EXPECT_TRUE(verify_p_structure(g, *ps).ok());
  gf::Rng rng(gf::default_seed());
  const Field f = g.field();
  for (int t = 0; t < 50; ++t) {
    const Vector x = gf::random_vector(f, 3, rng), y = gf::random_vector(f, 3, rng);
    const Elem c = gf::random_elem(f, rng);
    EXPECT_EQ(p_power(g, *ps, gf::scale(f, c, x)), gf::scale(f, f.pow(c, 3), p_power(g, *ps, x)));
    const auto s = jacobson_terms(g, x, y);
    EXPECT_EQ(s.size(), 2U);
    Vector rhs = gf::add(f, p_power(g, *ps, x), p_power(g, *ps, y));
    for (const auto& term : s) rhs = gf::add(f, rhs, term);
    EXPECT_EQ(p_power(g, *ps, gf::add(f, x, y)), rhs);
    EXPECT_EQ(g.ad(p_power(g, *ps, x)), ad_power(g, x, 3));
  }
}

TEST(PStructure, AmbiguityFromTheCenter) {
  const auto ab = find_p_structure(liesuper::abelian(Field(2), 2, 1));
  ASSERT_TRUE(ab);
  EXPECT_EQ(ab->ambiguity.size(), 2U);
  for (const auto& v : ab->p_map) EXPECT_TRUE(gf::is_zero(v));
  const auto sl2 = find_p_structure(entry("sl(2)"));
  ASSERT_TRUE(sl2);
  EXPECT_EQ(sl2->ambiguity.size(), 1U);
  const auto gl11 = find_p_structure(entry("gl(1|1)"));
  ASSERT_TRUE(gl11);
  EXPECT_EQ(gl11->ambiguity.size(), 2U);
}

TEST(PStructure, NonRestrictedAlgebraHasNone) {
  EXPECT_FALSE(find_p_structure(witt_derived()).has_value());
}

TEST(PStructure, QueerificationCarriesA24Structure) {
  const SuperAlgebra q = entry("qof(sl3)");
  const auto ps = find_p_structure(q);
  ASSERT_TRUE(ps);
  const PVerdict v = verify_2_4_structure(q, *ps);
  EXPECT_TRUE(v.ok()) << v.failure;
  EXPECT_TRUE(v.even_ok);
  EXPECT_TRUE(v.odd_ok);
  EXPECT_TRUE(v.two_p_ok);
  // (Πx)^2 = x^[2], consistent with square_apply
  const auto gps = find_p_structure(entry("sl(3)"));
  for (std::size_t i = 0; i < 8; ++i) {
    Vector pix(16, 0);
    pix[8 + i] = 1;
    Vector expect(16, 0);
    for (std::size_t k = 0; k < 8; ++k) expect[k] = gps->p_map[i][k];
    EXPECT_EQ(liesuper::square_apply(q, pix), expect);
    // x^[4] = (x^2)^[2] acts as (ad x)^4
    EXPECT_EQ(q.ad(two_p_power(q, *ps, pix)), ad_power(q, pix, 4));
  }
}

TEST(PStructure, PurelyEvenAlgebraHasVacuousOddChecks) {
  const SuperAlgebra g = entry("sl(3)");
  const auto v = verify_2_4_structure(g, *find_p_structure(g));
  EXPECT_TRUE(v.ok());
}

TEST(PStructure, MutatedPMapFailsOnlyAgainstOddVectors) {
  const auto [g, ps] = load_fixture("gl11-mutated-pmap.json");
  ASSERT_TRUE(ps);
  const PVerdict v = verify_2_4_structure(g, *ps);
  EXPECT_TRUE(v.even_ok);
  EXPECT_FALSE(v.odd_ok);
  EXPECT_FALSE(v.ok());
  EXPECT_EQ(v.failure_parity, liesuper::Parity::Odd);
  ASSERT_EQ(v.witness.size(), 2U);
  EXPECT_TRUE(g.is_even_vector(v.witness[0]));
  EXPECT_TRUE(g.is_odd_vector(v.witness[1]));
  // passing on the even part alone is not enough
  EXPECT_TRUE(verify_p_structure(g, *ps).ok());
  const auto [g2, ps2] = load_fixture("gl11-restricted.json");
  EXPECT_TRUE(verify_2_4_structure(g2, *ps2).ok());
}

TEST(PStructure, MutatedOddActionOfQueerificationIsRejected) {
  const auto [g, ps] = load_fixture("qsl3-mutated-odd.json");
  ASSERT_TRUE(ps);
  const PVerdict v = verify_2_4_structure(g, *ps);
  EXPECT_TRUE(v.even_ok);
  EXPECT_FALSE(v.odd_ok);
  EXPECT_EQ(v.failure_parity, liesuper::Parity::Odd);
  const auto [q, qps] = load_fixture("qsl3.json");
  EXPECT_TRUE(verify_2_4_structure(q, *qps).ok());
}

TEST(PStructure, MutatedEvenPMapIsRejectedWithEvenWitness) {
  const auto [g, ps] = load_fixture("qsl3-mutated-pmap.json");
  const PVerdict v = verify_2_4_structure(g, *ps);
  EXPECT_FALSE(v.even_ok);
  EXPECT_EQ(v.failure_parity, liesuper::Parity::Even);
}

TEST(Closure, RestrictedAlgebraAddsNothing) {
  const SuperAlgebra g = entry("sl(3)");
  const ClosureResult c = one_step_closure(g);
  EXPECT_TRUE(c.adds_nothing());
  EXPECT_EQ(c.algebra.dim(), 8U);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(c.operators[i], g.ad_basis(i));
}

TEST(Closure, NonRestrictedSimpleAlgebraGrows) {
  const SuperAlgebra g = witt_derived();
  ASSERT_EQ(g.dim(), 7U);
  const ClosureResult c = one_step_closure(g);
  EXPECT_FALSE(c.adds_nothing());
  EXPECT_EQ(c.algebra.dim(), 9U);
  EXPECT_TRUE(liesuper::validate(c.algebra).ok());
  // closed under commutators, each operator a derivation of g
  for (std::size_t a = 0; a < c.operators.size(); ++a) {
    EXPECT_TRUE(liesuper::is_derivation(g, c.operators[a], liesuper::Parity::Even));
    for (std::size_t b = 0; b < c.operators.size(); ++b) {
      const Matrix comm = c.operators[a] * c.operators[b] + c.operators[b] * c.operators[a];
      const auto coords = closure_coordinates(c, comm);
      ASSERT_TRUE(coords);
      EXPECT_EQ(*coords, c.algebra.basis_bracket(a, b));
    }
  }
  // the embedding sends e_i to ad(e_i)
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(*closure_coordinates(c, g.ad_basis(i)), c.embedding.column(i));
}

TEST(Closure, ContainsTheSquareOfEveryAdjointOperator) {
  // Generators are basis vectors and pairwise sums; every x then follows
  // because (ad x)^2 is a combination of (ad e_i)^2 and ad [e_i, e_j].
  const SuperAlgebra g = witt_derived();
  const ClosureResult c = one_step_closure(g);
  for (unsigned m = 1; m < 128; ++m) {
    Vector x(7, 0);
    for (std::size_t i = 0; i < 7; ++i) x[i] = Elem(m >> i & 1U);
    const Matrix a = g.ad(x);
    EXPECT_TRUE(closure_coordinates(c, a * a).has_value()) << m;
  }
}

TEST(Closure, OneStepClosureIsNotItselfClosed) {
  // Closing again adds x^[4]-type operators: the one-step closure of W'(1;3)
  // is not restricted, and its own closure is one dimension larger.
  const ClosureResult c = one_step_closure(witt_derived());
  std::size_t outside = 0;
  for (const auto& d : c.operators) outside += !closure_coordinates(c, d * d).has_value();
  EXPECT_EQ(outside, 2U);
  EXPECT_FALSE(find_p_structure(c.algebra).has_value());
  EXPECT_EQ(one_step_closure(c.algebra).algebra.dim(), 10U);
  // on a restricted input the operation is idempotent
  const ClosureResult r = one_step_closure(entry("sl(3)"));
  EXPECT_TRUE(one_step_closure(r.algebra).adds_nothing());
}

TEST(Closure, RefusesCenterOddPartAndOddCharacteristic) {
  EXPECT_THROW((void)one_step_closure(liesuper::abelian(Field(2), 2, 0)), std::invalid_argument);
  EXPECT_THROW((void)one_step_closure(entry("sl(2)")), std::invalid_argument);
  EXPECT_THROW((void)one_step_closure(entry("sl(2|1)")), std::invalid_argument);
  EXPECT_THROW((void)one_step_closure(entry("sl(2)/F3")), std::invalid_argument);
}
