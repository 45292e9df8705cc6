#include "nis2/liesuper/validate.hpp"

#include <sstream>

#include "nis2/liesuper/enumerate.hpp"

namespace nis2::liesuper {

namespace {

using gf::unit_vector;

class Checker {
 public:
  explicit Checker(const SuperAlgebra& g) : g_(g), f_(g.field()), n_(g.dim()), e_(g.dim_even()) {}

  AxiomCheck start(std::string id, std::string statement) const {
    AxiomCheck c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    return c;
  }

  // Records the failure; returns false so enumeration loops can stop.
  bool fail(AxiomCheck& c, std::vector<Vector> args, Vector lhs, Vector rhs, const std::string& lhs_text,
            const std::string& rhs_text) const {
    static const char* names[] = {"x", "y", "z"};
    std::ostringstream os;
    for (std::size_t i = 0; i < args.size(); ++i)
      os << (i ? ", " : "") << names[i] << " = " << format_vector(g_, args[i]);
    os << ": " << lhs_text << " = " << format_vector(g_, lhs) << " but " << rhs_text << " = "
       << format_vector(g_, rhs);
    c.passed = false;
    c.witness = std::move(args);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.detail = os.str();
    return false;
  }

  Vector br(const Vector& x, const Vector& y) const { return g_.bracket(x, y); }
  Vector u(std::size_t i) const { return unit_vector(n_, i); }

  // [x,x] = 0 on even x (quadratic).
  AxiomCheck alternating() const {
    auto c = start("alternating", "[x,x] = 0 for even x");
    bool ex = true;
    for_each_test_vector(f_, n_, 0, e_, 2, [&](const Vector& x) {
      Vector v = br(x, x);
      return gf::is_zero(v) || fail(c, {x}, v, Vector(n_, 0), "[x,x]", "0");
    }, &ex);
    c.exhaustive = ex;
    return c;
  }

  AxiomCheck antisymmetry() const {
    auto c = start("antisymmetry", "[x,y] = -(-1)^{p(x)p(y)} [y,x]");
    for (std::size_t i = 0; i < n_ && c.passed; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        const Elem s = f_.neg(f_.sign(bit(g_.parity(i)) * bit(g_.parity(j))));
        Vector l = g_.basis_bracket(i, j);
        Vector r = gf::scale(f_, s, g_.basis_bracket(j, i));
        if (l != r) {
          fail(c, {u(i), u(j)}, l, r, "[x,y]", "-(-1)^{p(x)p(y)}[y,x]");
          break;
        }
      }
    return c;
  }

  AxiomCheck polarization() const {
    auto c = start("polarization", "[x,y] = (x+y)^2 + x^2 + y^2 for odd x,y");
    for (std::size_t i = e_; i < n_ && c.passed; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        const Vector xy = gf::add(f_, u(i), u(j));
        Vector r = gf::add(f_, g_.square(xy), gf::add(f_, g_.square(u(i)), g_.square(u(j))));
        bool bad = false;
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          Vector l = g_.basis_bracket(a, b);
          if (l != r) {
            fail(c, {u(a), u(b)}, l, r, "[x,y]", "(x+y)^2 + x^2 + y^2");
            bad = true;
            break;
          }
        }
        if (bad) break;
      }
    return c;
  }

  // [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]] on basis triples within
  // the given index ranges.
  AxiomCheck jacobi(std::string id, std::string statement, std::size_t xl, std::size_t xh, std::size_t yl,
                    std::size_t yh, std::size_t zl, std::size_t zh) const {
    auto c = start(std::move(id), std::move(statement));
    for (std::size_t i = xl; i < xh; ++i)
      for (std::size_t j = yl; j < yh; ++j)
        for (std::size_t k = zl; k < zh; ++k) {
          const Vector x = u(i), y = u(j), z = u(k);
          Vector l = br(x, br(y, z));
          Vector r = br(br(x, y), z);
          const Elem s = f_.sign(bit(g_.parity(i)) * bit(g_.parity(j)));
          gf::axpy(f_, r, s, br(y, br(x, z)));
          if (l != r) {
            fail(c, {x, y, z}, l, r, "[x,[y,z]]", "[[x,y],z] + (-1)^{p(x)p(y)}[y,[x,z]]");
            return c;
          }
        }
    return c;
  }

  // [x^2,y] = [x,[x,y]] for x odd (quadratic) and y a basis vector of [yl,yh).
  AxiomCheck square_action(std::string id, std::string statement, std::size_t yl, std::size_t yh) const {
    auto c = start(std::move(id), std::move(statement));
    bool ex = true;
    for_each_test_vector(f_, n_, e_, n_, 2, [&](const Vector& x) {
      const Vector sq = g_.square(x);
      for (std::size_t j = yl; j < yh; ++j) {
        const Vector y = u(j);
        Vector l = br(sq, y);
        Vector r = br(x, br(x, y));
        if (l != r) return fail(c, {x, y}, l, r, "[x^2,y]", "[x,[x,y]]");
      }
      return true;
    }, &ex);
    c.exhaustive = ex;
    return c;
  }

  AxiomCheck square_self() const {
    auto c = start("square-self", "[x^2,x] = 0 for odd x");
    bool ex = true;
    for_each_test_vector(f_, n_, e_, n_, 3, [&](const Vector& x) {
      Vector l = br(g_.square(x), x);
      return gf::is_zero(l) || fail(c, {x}, l, Vector(n_, 0), "[x^2,x]", "0");
    }, &ex);
    c.exhaustive = ex;
    return c;
  }

  AxiomCheck jacobi_odd() const {
    auto c = start("jacobi-odd", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 for odd x,y,z");
    for (std::size_t i = e_; i < n_; ++i)
      for (std::size_t j = e_; j < n_; ++j)
        for (std::size_t k = e_; k < n_; ++k) {
          const Vector x = u(i), y = u(j), z = u(k);
          Vector l = gf::add(f_, br(x, br(y, z)), gf::add(f_, br(y, br(z, x)), br(z, br(x, y))));
          if (!gf::is_zero(l)) {
            fail(c, {x, y, z}, l, Vector(n_, 0), "[x,[y,z]] + [y,[z,x]] + [z,[x,y]]", "0");
            return c;
          }
        }
    return c;
  }

  AxiomCheck cubic_self() const {
    auto c = start("cubic-self", "[x,[x,x]] = 0 for odd x");
    bool ex = true;
    for_each_test_vector(f_, n_, e_, n_, 3, [&](const Vector& x) {
      Vector l = br(x, br(x, x));
      return gf::is_zero(l) || fail(c, {x}, l, Vector(n_, 0), "[x,[x,x]]", "0");
    }, &ex);
    c.exhaustive = ex;
    return c;
  }

 private:
  const SuperAlgebra& g_;
  gf::Field f_;
  std::size_t n_;
  std::size_t e_;
};

}  // namespace

bool ValidationReport::ok() const {
  if (!structural_errors.empty()) return false;
  for (const auto& a : axioms)
    if (!a.passed) return false;
  return true;
}

const AxiomCheck* ValidationReport::find(std::string_view id) const {
  for (const auto& a : axioms)
    if (a.id == id) return &a;
  return nullptr;
}

std::vector<std::string> ValidationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& a : axioms)
    if (!a.passed) out.push_back(a.id);
  return out;
}

bool ValidationReport::only_symmetry_fails() const {
  const auto f = failed();
  if (f.empty() || !structural_errors.empty()) return false;
  for (const auto& id : f)
    if (id != "alternating" && id != "antisymmetry") return false;
  return true;
}

ValidationReport validate(const SuperAlgebra& g) {
  ValidationReport rep;
  const std::size_t n = g.dim(), e = g.dim_even();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.bracket_coeff(i, j, k) && g.parity(k) != g.parity(i) + g.parity(j)) {
          std::ostringstream os;
          os << "bracket [" << g.label(i) << "," << g.label(j) << "] has a component on " << g.label(k)
             << " of the wrong parity";
          rep.structural_errors.push_back(os.str());
        }
  if (g.has_squaring_table())
    for (std::size_t i = e; i < n; ++i) {
      const Vector s = g.basis_square(i);
      for (std::size_t k = e; k < n; ++k)
        if (s[k]) rep.structural_errors.push_back("square of " + g.label(i) + " has an odd component on " +
                                                  g.label(k));
    }
  if (!rep.structural_errors.empty()) return rep;

  Checker c(g);
  rep.axioms.push_back(c.alternating());
  rep.axioms.push_back(c.antisymmetry());
  if (g.p() == 2) rep.axioms.push_back(c.polarization());
  rep.axioms.push_back(c.jacobi("jacobi-even", "Jacobi identity for even x,y,z", 0, e, 0, e, 0, e));
  rep.axioms.push_back(
      c.jacobi("module", "[[a,b],x] = [a,[b,x]] - [b,[a,x]] for even a,b and odd x", 0, e, 0, e, e, n));
  if (g.p() != 2)
    rep.axioms.push_back(c.jacobi("jacobi-super", "[x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)}[y,[x,z]]", 0, n, 0,
                                  n, 0, n));
  rep.axioms.push_back(c.square_action("square-even-action", "[x^2,y] = [x,[x,y]] for odd x, even y", 0, e));
  rep.axioms.push_back(c.square_self());
  rep.axioms.push_back(c.jacobi_odd());
  if (g.p() == 3) rep.axioms.push_back(c.cubic_self());
  if (g.p() == 2)
    rep.axioms.push_back(c.square_action("square-odd-action", "[x^2,y] = [x,[x,y]] for odd x,y", e, n));
  return rep;
}

}  // namespace nis2::liesuper
