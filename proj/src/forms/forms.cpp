#include "nis2/forms/forms.hpp"

#include <sstream>

#include "nis2/gf/linalg.hpp"
#include "nis2/gf/random.hpp"

namespace nis2::forms {

using liesuper::Parity;

namespace {

struct Unknowns {
  std::vector<long> index;  // n*n
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t n = 0;
  long at(std::size_t a, std::size_t b) const { return index[a * n + b]; }
};

class RowBuilder {
 public:
  RowBuilder(gf::Field f, std::size_t size) : f_(f), row_(size, 0) {}
  void add(long idx, Elem c) {
    if (idx < 0 || !c) return;
    row_[std::size_t(idx)] = f_.add(row_[std::size_t(idx)], c);
  }
  void flush(gf::RowSpace& rs) {
    if (!gf::is_zero(row_)) rs.insert(row_);
    std::fill(row_.begin(), row_.end(), 0);
  }

 private:
  gf::Field f_;
  Vector row_;
};

std::vector<BilinearForm> solve_parity(const SuperAlgebra& g, Parity par, bool strict) {
  const gf::Field f = g.field();
  const std::size_t n = g.dim();
  Unknowns u;
  u.n = n;
  u.index.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.parity(a) + g.parity(b) == par) {
        u.index[a * n + b] = long(u.pairs.size());
        u.pairs.emplace_back(a, b);
      }
  if (u.pairs.empty()) return {};
  gf::RowSpace rs(f, u.pairs.size());
  RowBuilder rb(f, u.pairs.size());
  const unsigned pb = liesuper::bit(par);

  // Symmetry: s_a F_ab = eps_ab s_b F_ba with s_a = (-1)^{p(B)p(a)}.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (u.at(a, b) < 0) continue;
      const bool ea = g.parity(a) == Parity::Even, eb = g.parity(b) == Parity::Even;
      Elem eps = 1;
      if (ea != eb) eps = f.sign(pb);
      else if (!ea) eps = f.neg(1);
      const Elem sa = f.sign(pb * liesuper::bit(g.parity(a)));
      const Elem sb = f.sign(pb * liesuper::bit(g.parity(b)));
      rb.add(u.at(a, b), sa);
      rb.add(u.at(b, a), f.neg(f.mul(eps, sb)));
      rb.flush(rs);
    }
  // Invariance: B([e_i, e_k], e_j) - B(e_i, [e_k, e_j]) = 0 on every ordered
  // triple; a parity shortcut would be wrong for ungraded tables.
  for (std::size_t i = 0; i < n && !rs.full(); ++i)
    for (std::size_t k = 0; k < n && !rs.full(); ++k)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) {
          rb.add(u.at(m, j), g.bracket_coeff(i, k, m));
          rb.add(u.at(i, m), f.neg(g.bracket_coeff(k, j, m)));
        }
        rb.flush(rs);
      }
  if (strict && g.p() == 2) {
    for (std::size_t i = g.dim_even(); i < n; ++i)
      for (std::size_t i2 = i; i2 < n; ++i2) {
        Vector x = gf::unit_vector(n, i);
        x[i2] = 1;
        const Vector sq = g.square(x);
        for (std::size_t j = 0; j < n; ++j) {
          const Vector xy = g.bracket(x, gf::unit_vector(n, j));
          for (std::size_t m = 0; m < n; ++m) rb.add(u.at(m, j), sq[m]);
          for (std::size_t a = 0; a < n; ++a)
            if (x[a])
              for (std::size_t m = 0; m < n; ++m) rb.add(u.at(a, m), xy[m]);
          rb.flush(rs);
        }
      }
  }
  std::vector<BilinearForm> out;
  for (const auto& sol : rs.nullspace()) {
    gf::Matrix v(f, n, n);
    for (std::size_t t = 0; t < sol.size(); ++t)
      if (sol[t]) v.set(u.pairs[t].first, u.pairs[t].second, sol[t]);
    out.emplace_back(std::move(v), g.dim_even());
  }
  return out;
}

Vector flatten(const gf::Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.get(i, j));
  return v;
}

}  // namespace

std::size_t FormSpace::even_nis_count() const {
  std::size_t c = 0;
  for (const auto& b : even_basis) c += b.is_nondegenerate();
  return c;
}

std::size_t FormSpace::odd_nis_count() const {
  std::size_t c = 0;
  for (const auto& b : odd_basis) c += b.is_nondegenerate();
  return c;
}

ComponentScan scan_component(const std::vector<BilinearForm>& basis, std::size_t dim_even, const FormOptions& opt) {
  ComponentScan s;
  s.dim = basis.size();
  if (basis.empty()) return s;
  const gf::Field f = basis.front().field();
  const std::size_t n = basis.front().dim();
  gf::RowSpace span(f, n * n);
  auto visit = [&](const Vector& c, std::size_t weight) {
    gf::Matrix m(f, n, n);
    for (std::size_t t = 0; t < c.size(); ++t)
      if (c[t]) m = m + c[t] * basis[t].values();
    BilinearForm b(m, dim_even);
    s.members += weight;
    if (b.is_nondegenerate()) {
      s.nondegenerate += weight;
      if (span.dim() < s.dim) span.insert(flatten(m));
    } else if (!s.degenerate_member) {
      s.degenerate_member = b;
    }
  };
  std::size_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < s.dim && small; ++i) {
    total *= f.p();
    small = total <= opt.scan_limit;
  }
  if (small) {
    // Normalized coefficient vectors (leading nonzero = 1); scaling keeps rank.
    for (std::size_t lead = 0; lead < s.dim; ++lead) {
      Vector c(s.dim, 0);
      c[lead] = 1;
      while (true) {
        visit(c, f.p() - 1);
        std::size_t k = lead + 1;
        while (k < s.dim && ++c[k] == f.p()) c[k++] = 0;
        if (k >= s.dim) break;
      }
    }
  } else {
    s.exact = false;
    gf::Rng rng(gf::default_seed());
    for (std::size_t t = 0; t < opt.scan_samples; ++t) {
      Vector c = gf::random_vector(f, s.dim, rng);
      if (!gf::is_zero(c)) visit(c, 1);
    }
  }
  s.nis_dim = span.dim();
  return s;
}

FormSpace invariant_symmetric_forms(const SuperAlgebra& g, const FormOptions& opt) {
  FormSpace fs;
  fs.even_basis = solve_parity(g, Parity::Even, opt.strict);
  fs.odd_basis = solve_parity(g, Parity::Odd, opt.strict);
  fs.even_scan = scan_component(fs.even_basis, g.dim_even(), opt);
  fs.odd_scan = scan_component(fs.odd_basis, g.dim_even(), opt);
  return fs;
}

bool is_invariant(const SuperAlgebra& g, const BilinearForm& b, bool strict) {
  const std::size_t n = g.dim();
  const auto& v = b.values();
  const gf::Field f = g.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        unsigned long l = 0, r = 0;
        for (std::size_t m = 0; m < n; ++m) {
          l += unsigned(g.bracket_coeff(i, k, m)) * v.get(m, j);
          r += unsigned(v.get(i, m)) * g.bracket_coeff(k, j, m);
        }
        if (l % f.p() != r % f.p()) return false;
      }
  if (strict && g.p() == 2)
    for (std::size_t i = g.dim_even(); i < n; ++i)
      for (std::size_t i2 = i; i2 < n; ++i2) {
        Vector x = gf::unit_vector(n, i);
        x[i2] = 1;
        const Vector sq = g.square(x);
        for (std::size_t j = 0; j < n; ++j) {
          const Vector y = gf::unit_vector(n, j);
          if (b(sq, y) != b(x, g.bracket(x, y))) return false;
        }
      }
  return true;
}

std::string NisReport::superdim_string() const {
  return std::to_string(superdimension.first) + "|" + std::to_string(superdimension.second);
}

NisReport nis_superdimension(const SuperAlgebra& g, const NisOptions& opt) {
  NisReport r;
  r.forms = invariant_symmetric_forms(g, opt.forms);
  r.simplicity = liesuper::is_simple(g);
  r.superdimension = r.forms.superdimension();
  const auto [a, b] = r.superdimension;
  if (a == 0 && b == 0) r.classification = "no NIS";
  else if (a == 1 && b == 0) r.classification = "even NIS";
  else if (a == 0 && b == 1) r.classification = "odd NIS";
  else if (a == 1 && b == 1) r.classification = "queerification candidate";
  else r.classification = "multiple NISes (field not closed)";
  r.perfect = liesuper::commutant(g).is_whole();
  if (!r.simplicity.simple) return r;

  if ((a > 0 || b > 0) && !r.perfect)
    throw TheoremViolation(ViolationKind::Prerequisite, "simple algebra has a NIS but [g,g] != g", std::nullopt, r);
  // Over F_2 the kernel of an IS form is only known to be an ideal when [g,g] = g.
  r.dichotomy_checked = g.p() != 2 || r.perfect;
  if (r.dichotomy_checked)
    for (const ComponentScan* s : {&r.forms.even_scan, &r.forms.odd_scan})
      if (s->degenerate_member)
        throw TheoremViolation(ViolationKind::Dichotomy,
                               "simple algebra has a nonzero degenerate homogeneous invariant symmetric form",
                               s->degenerate_member, r);
  if (a > 1 || b > 1) {
    r.field_not_closed = true;
    if (opt.throw_on_multiplicity)
      throw TheoremViolation(ViolationKind::Multiplicity,
                             "NIS superdimension " + r.superdim_string() + " exceeds 1 in a parity (field not closed)",
                             std::nullopt, r);
  }
  return r;
}

bool check_nis_prerequisite(const SuperAlgebra& g) { return liesuper::commutant(g).is_whole(); }

DegenerateBound degenerate_forms_lower_bound(const SuperAlgebra& g) {
  DegenerateBound out;
  const gf::Field f = g.field();
  const std::size_t n = g.dim();
  gf::RowSpace c(f, n);
  const liesuper::Subspace comm = liesuper::commutant(g);
  for (const auto& b : comm.basis()) c.insert(b);
  std::vector<bool> pivot(n, false);
  for (auto p : c.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) keep.push_back(i);
  out.k = keep.size();
  if (out.k == 0) return out;
  // Projection onto g/[g,g]: row t of P holds the keep[t]-coordinate of reduce(e_j).
  gf::Matrix proj(f, out.k, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector r = c.reduce(gf::unit_vector(n, j));
    for (std::size_t t = 0; t < out.k; ++t) proj.set(t, j, r[keep[t]]);
  }
  const gf::Matrix pt = proj.transpose();
  auto is_even = [&](std::size_t t) { return keep[t] < g.dim_even(); };
  for (std::size_t a = 0; a < out.k; ++a)
    for (std::size_t b = a; b < out.k; ++b) {
      const bool both_odd = !is_even(a) && !is_even(b);
      if (f.p() != 2 && both_odd && a == b) continue;  // B(v,v) = -B(v,v) for odd v
      gf::Matrix s(f, out.k, out.k);
      s.set(a, b, 1);
      if (a != b) s.set(b, a, (f.p() != 2 && both_odd) ? f.neg(1) : Elem(1));
      out.witnesses.emplace_back(pt * s * proj, g.dim_even());
    }
  out.bound = out.witnesses.size();
  return out;
}

QueerOperator queer_operator(const SuperAlgebra& g, const BilinearForm& w_even, const BilinearForm& w_odd) {
  if (g.p() != 2) throw std::invalid_argument("queer_operator: requires p = 2");
  if (w_even.parity() != FormParity::Even || w_even.is_zero())
    throw std::invalid_argument("queer_operator: first form must be a nonzero even form");
  if (w_odd.parity() != FormParity::Odd || w_odd.is_zero())
    throw std::invalid_argument("queer_operator: second form must be a nonzero odd form");
  const auto fe_inv = gf::inverse(w_even.values());
  if (!fe_inv || !w_odd.is_nondegenerate()) throw std::invalid_argument("queer_operator: degenerate form");

  const gf::Field f = g.field();
  const std::size_t n = g.dim(), e = g.dim_even();
  QueerOperator q{(w_odd.values() * *fe_inv).transpose(), 0, false, false, false, false, false, false, {}};
  const gf::Matrix& j = q.j;
  auto fail = [&](const std::string& s) {
    if (q.failure.empty()) q.failure = s;
  };
  q.invertible = gf::rank(j) == n;
  if (!q.invertible) fail("J is singular");
  q.swaps_parity = e == n - e;
  for (std::size_t a = 0; a < n && q.swaps_parity; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (j.get(a, b) && g.parity(a) == g.parity(b)) {
        q.swaps_parity = false;
        break;
      }
  if (!q.swaps_parity) fail("J does not swap the parity blocks");

  const gf::Matrix j2 = j * j;
  q.mu = e ? j2.get(0, 0) : Elem(1);
  q.square_is_scalar = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < e; ++b)
      if (j2.get(a, b) != (a == b ? q.mu : 0)) q.square_is_scalar = false;
  if (!q.square_is_scalar) fail("J^2 is not scalar on the even part");

  q.intertwines = q.odd_brackets = q.two_structure = true;
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < e; ++b) {
      const Vector ea = gf::unit_vector(n, a), eb = gf::unit_vector(n, b);
      const Vector ja = j.apply(ea);
      if (q.intertwines && g.bracket(ja, eb) != j.apply(g.basis_bracket(a, b))) {
        q.intertwines = false;
        fail("[J " + g.label(a) + ", " + g.label(b) + "] != J[" + g.label(a) + ", " + g.label(b) + "]");
      }
      if (q.odd_brackets && g.bracket(ja, j.apply(eb)) != gf::scale(f, q.mu, g.basis_bracket(a, b))) {
        q.odd_brackets = false;
        fail("[J " + g.label(a) + ", J " + g.label(b) + "] != mu [" + g.label(a) + ", " + g.label(b) + "]");
      }
    }
  for (std::size_t a = 0; a < e && q.two_structure; ++a)
    for (std::size_t a2 = a; a2 < e && q.two_structure; ++a2) {
      Vector x = gf::unit_vector(n, a);
      x[a2] = 1;
      const Vector jx2 = g.square(j.apply(x));
      for (std::size_t b = 0; b < e; ++b) {
        const Vector eb = gf::unit_vector(n, b);
        if (g.bracket(jx2, eb) != gf::scale(f, q.mu, g.bracket(x, g.bracket(x, eb)))) {
          q.two_structure = false;
          fail("a -> (Ja)^2 is not a 2-structure at a = " + liesuper::format_vector(g, x));
          break;
        }
      }
    }
  return q;
}

bool PencilScan::has_root() const {
  for (const auto& [l, d] : values)
    if (d == 0) return true;
  return false;
}

PencilScan pencil_scan(const BilinearForm& w1, const BilinearForm& w2) {
  const gf::Matrix b1 = w1.gram(), b2 = w2.gram();
  PencilScan s{gf::pencil_determinant(b1, b2), {}};
  const gf::Field f = w1.field();
  for (unsigned l = 0; l < f.p(); ++l) s.values.emplace_back(Elem(l), gf::det(b1 + Elem(l) * b2).value());
  return s;
}

}  // namespace nis2::forms
