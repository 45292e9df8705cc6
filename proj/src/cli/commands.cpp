#include "nis2/cli/commands.hpp"

#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nis2/build/catalog.hpp"
#include "nis2/build/queerify.hpp"
#include "nis2/build/tensor.hpp"
#include "nis2/cli/check_theorem.hpp"
#include "nis2/forms/forms.hpp"
#include "nis2/liesuper/structure.hpp"
#include "nis2/liesuper/validate.hpp"

namespace nis2::cli {

using liesuper::SuperAlgebra;
using nlohmann::ordered_json;

namespace {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const forms::TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

void check_format(const std::string& f) {
  if (f != "text" && f != "json") throw InputError("--format must be text or json");
}

std::string field_name(unsigned p) { return "F_" + std::to_string(p); }

ordered_json matrix_json(const gf::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(unsigned(m.get(i, j)));
    rows.push_back(r);
  }
  return rows;
}

void print_matrix(std::ostream& out, const gf::Matrix& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << unsigned(m.get(i, j));
    out << '\n';
  }
}

std::string poly_string(const gf::Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int d = p.degree(); d >= 0; --d) {
    const unsigned c = p.coeff(std::size_t(d));
    if (!c) continue;
    if (!s.empty()) s += " + ";
    if (d == 0 || c != 1) s += std::to_string(c);
    if (d >= 1) s += (c != 1 ? "*t" : "t");
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

std::optional<restricted::PStructure> verified_p_structure(const SuperAlgebra& g) {
  if (g.dim_even() == 0) return std::nullopt;
  auto ps = restricted::find_p_structure(g);
  if (!ps) return std::nullopt;
  if (!restricted::verify_2_4_structure(g, *ps).ok()) return std::nullopt;
  return ps;
}

}  // namespace

LoadedAlgebra load_algebra(const std::string& source, std::optional<unsigned> field) {
  static const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    const auto e = build::catalog_get(source.substr(prefix.size()));
    if (!e) throw InputError("unknown catalog entry " + source.substr(prefix.size()));
    if (field) return {to_algebra(to_document(e->algebra), field), std::nullopt};
    return {e->algebra, std::nullopt};
  }
  const AlgebraDocument doc = parse_document(read_file(source));
  SuperAlgebra g = to_algebra(doc, field);
  auto ps = to_p_structure(doc, g);
  return {std::move(g), std::move(ps)};
}

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_format(a.format);
    const LoadedAlgebra la = load_algebra(a.file, a.field);
    const SuperAlgebra& g = la.algebra;
    const auto rep = liesuper::validate(g);
    if (a.format == "json") {
      ordered_json j;
      j["command"] = "validate";
      j["p"] = g.p();
      j["dimEven"] = g.dim_even();
      j["dimOdd"] = g.dim_odd();
      j["ok"] = rep.ok();
      j["structuralErrors"] = rep.structural_errors;
      j["axioms"] = ordered_json::array();
      for (const auto& c : rep.axioms) {
        ordered_json w = ordered_json::array();
        for (const auto& v : c.witness) w.push_back(liesuper::format_vector(g, v));
        j["axioms"].push_back({{"id", c.id},
                               {"statement", c.statement},
                               {"passed", c.passed},
                               {"exhaustive", c.exhaustive},
                               {"witness", w},
                               {"detail", c.detail}});
      }
      out << j.dump(2) << '\n';
    } else {
      out << "validate: " << g.dim_even() << '|' << g.dim_odd() << " over " << field_name(g.p()) << '\n';
      for (const auto& e : rep.structural_errors) out << "  [ERROR] " << e << '\n';
      for (const auto& c : rep.axioms) {
        out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << std::left << std::setw(19) << c.id << c.statement;
        if (!c.exhaustive) out << " (sampled)";
        out << '\n';
        if (!c.passed) {
          out << "         witness (";
          for (std::size_t i = 0; i < c.witness.size(); ++i)
            out << (i ? ", " : "") << liesuper::format_vector(g, c.witness[i]);
          out << "): " << c.detail << '\n';
        }
      }
      if (rep.ok()) {
        out << "result: PASS\n";
      } else {
        out << "result: FAIL";
        for (const auto& id : rep.failed()) out << ' ' << id;
        if (!rep.structural_errors.empty()) out << " (parity)";
        out << '\n';
      }
    }
    return rep.ok() ? kPass : kFailure;
  });
}

int cmd_forms(const FormsArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    check_format(a.format);
    const SuperAlgebra g = load_algebra(a.file).algebra;
    const auto rep = liesuper::validate(g);
    if (!rep.ok()) {
      err << "input is not a Lie superalgebra; run validate for details\n";
      return kFailure;
    }
    forms::NisOptions opt;
    opt.forms.strict = a.strict;
    opt.throw_on_multiplicity = false;
    forms::NisReport r;
    try {
      r = forms::nis_superdimension(g, opt);
    } catch (const forms::TheoremViolation& v) {
      if (a.format == "json") {
        ordered_json j;
        j["command"] = "forms";
        j["violation"] = {{"kind", v.kind() == forms::ViolationKind::Dichotomy ? "dichotomy"
                                   : v.kind() == forms::ViolationKind::Prerequisite ? "prerequisite"
                                   : v.kind() == forms::ViolationKind::Multiplicity ? "multiplicity"
                                                                                     : "certificate"},
                          {"message", v.what()},
                          {"gram", v.form() ? matrix_json(v.form()->gram()) : ordered_json()}};
        out << j.dump(2) << '\n';
      } else {
        out << "THEOREM VIOLATION: " << v.what() << '\n';
        if (v.form()) {
          out << "violating form (Gram):\n";
          print_matrix(out, v.form()->gram(), "  ");
        }
      }
      return kViolation;
    }
    // A simple 1|1 result is confirmed by the queer-operator certificate.
    std::string certificate;
    if (r.simplicity.simple && r.superdimension == std::pair<std::size_t, std::size_t>{1, 1} && g.p() == 2) {
      auto first_nis = [](const std::vector<forms::BilinearForm>& b) -> const forms::BilinearForm* {
        for (const auto& w : b)
          if (w.is_nondegenerate()) return &w;
        return nullptr;
      };
      const auto* we = first_nis(r.forms.even_basis);
      const auto* wo = first_nis(r.forms.odd_basis);
      if (we && wo) {
        const auto q = forms::queer_operator(g, *we, *wo);
        if (!q.certificate()) {
          const std::string msg = "queer-operator certificate fails: " + q.failure;
          if (a.format == "json") {
            ordered_json j;
            j["command"] = "forms";
            j["violation"] = {{"kind", "certificate"}, {"message", msg}, {"gram", matrix_json(wo->gram())}};
            out << j.dump(2) << '\n';
          } else {
            out << "THEOREM VIOLATION: " << msg << '\n' << "violating form (Gram):\n";
            print_matrix(out, wo->gram(), "  ");
          }
          return kViolation;
        }
        certificate = "PASS";
        r.classification = "queerification";
      }
    }
    std::string dichotomy = "asserted";
    if (!r.simplicity.simple) dichotomy = "not applicable (not simple)";
    else if (!r.dichotomy_checked) dichotomy = "not applicable ([g,g] != g)";
    std::string sd = r.superdim_string();
    if (r.field_not_closed) sd += " (field not closed)";

    struct PencilRow {
      std::string parity;
      std::size_t i, j;
      forms::PencilScan scan;
    };
    std::vector<PencilRow> pencils;
    if (a.pencil)
      for (const auto& [name, basis] : {std::pair{"even", &r.forms.even_basis}, std::pair{"odd", &r.forms.odd_basis}})
        for (std::size_t i = 0; i < basis->size(); ++i)
          for (std::size_t j = i + 1; j < basis->size(); ++j)
            pencils.push_back({name, i, j, forms::pencil_scan((*basis)[i], (*basis)[j])});

    if (a.format == "json") {
      auto forms_json = [](const std::vector<forms::BilinearForm>& basis) {
        ordered_json arr = ordered_json::array();
        for (const auto& b : basis) arr.push_back({{"gram", matrix_json(b.gram())}, {"nondegenerate", b.is_nondegenerate()}});
        return arr;
      };
      auto scan_json = [](const forms::ComponentScan& s) {
        return ordered_json{{"dim", s.dim},
                            {"members", s.members},
                            {"nondegenerate", s.nondegenerate},
                            {"nisDim", s.nis_dim},
                            {"exact", s.exact}};
      };
      ordered_json j;
      j["command"] = "forms";
      j["p"] = g.p();
      j["dimEven"] = g.dim_even();
      j["dimOdd"] = g.dim_odd();
      j["strict"] = a.strict;
      j["simple"] = r.simplicity.simple;
      j["simplicityMethod"] = r.simplicity.method;
      j["probabilistic"] = r.simplicity.probabilistic;
      j["perfect"] = r.perfect;
      j["even"] = forms_json(r.forms.even_basis);
      j["odd"] = forms_json(r.forms.odd_basis);
      j["evenScan"] = scan_json(r.forms.even_scan);
      j["oddScan"] = scan_json(r.forms.odd_scan);
      j["dichotomy"] = dichotomy;
      j["superdimension"] = r.superdim_string();
      j["classification"] = r.classification;
      j["fieldNotClosed"] = r.field_not_closed;
      if (!certificate.empty()) j["certificate"] = certificate;
      if (a.pencil) {
        j["pencil"] = ordered_json::array();
        for (const auto& pr : pencils) {
          ordered_json vals = ordered_json::array();
          for (const auto& [l, d] : pr.scan.values) vals.push_back({unsigned(l), unsigned(d)});
          ordered_json coeffs = ordered_json::array();
          for (auto c : pr.scan.determinant.coeffs()) coeffs.push_back(unsigned(c));
          j["pencil"].push_back({{"parity", pr.parity},
                                 {"i", pr.i},
                                 {"j", pr.j},
                                 {"determinant", coeffs},
                                 {"values", vals},
                                 {"hasRoot", pr.scan.has_root()}});
        }
      }
      out << j.dump(2) << '\n';
      return kPass;
    }
    out << "algebra: " << g.dim_even() << '|' << g.dim_odd() << " over " << field_name(g.p())
        << (a.strict ? " (strict invariance)" : "") << '\n';
    out << "simple: " << (r.simplicity.simple ? "yes" : "no") << " (" << r.simplicity.method
        << (r.simplicity.probabilistic ? ", probabilistic, " + std::to_string(r.simplicity.trials) + " trials" : "")
        << ")\n";
    out << "[g,g] = g: " << (r.perfect ? "yes" : "no") << '\n';
    for (const auto& [name, basis] : {std::pair{"even", &r.forms.even_basis}, std::pair{"odd", &r.forms.odd_basis}}) {
      out << name << " IS forms: " << basis->size() << '\n';
      for (std::size_t i = 0; i < basis->size(); ++i) {
        out << "  " << name << '[' << i << "]: " << ((*basis)[i].is_nondegenerate() ? "nondegenerate" : "degenerate")
            << '\n';
        print_matrix(out, (*basis)[i].gram(), "    ");
      }
    }
    out << "dichotomy (zero or nondegenerate): " << dichotomy << '\n';
    for (const auto& pr : pencils) {
      out << "pencil " << pr.parity << '[' << pr.i << "] + t*" << pr.parity << '[' << pr.j
          << "]: det = " << poly_string(pr.scan.determinant) << ';';
      for (const auto& [l, d] : pr.scan.values) out << " t=" << unsigned(l) << ": " << unsigned(d) << ';';
      out << " root in " << field_name(g.p()) << ": " << (pr.scan.has_root() ? "yes" : "no") << '\n';
    }
    if (!certificate.empty()) out << "queer-operator certificate: " << certificate << '\n';
    out << "NIS superdimension: " << sd << "; classification: " << r.classification << '\n';
    return kPass;
  });
}

int cmd_catalog_list(const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json j;
    j["entries"] = ordered_json::array();
    for (const auto& e : build::catalog())
      j["entries"].push_back({{"name", e.name},
                              {"p", e.algebra.p()},
                              {"dimEven", e.algebra.dim_even()},
                              {"dimOdd", e.algebra.dim_odd()},
                              {"batch", e.in_batch},
                              {"description", e.description}});
    j["families"] = build::catalog_families();
    out << j.dump(2) << '\n';
    return kPass;
  }
  for (const auto& e : build::catalog()) {
    std::ostringstream sd;
    sd << e.algebra.dim_even() << '|' << e.algebra.dim_odd();
    out << std::left << std::setw(16) << e.name << std::setw(7) << sd.str() << std::setw(5) << field_name(e.algebra.p())
        << e.description << '\n';
  }
  out << "families:";
  for (const auto& f : build::catalog_families()) out << ' ' << f;
  out << " (suffix /F<p> for another prime)\n";
  return kPass;
}

int cmd_catalog_get(const std::string& name, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto e = build::catalog_get(name);
    if (!e) throw InputError("unknown catalog entry " + name);
    out << serialize_document(to_document(e->algebra, verified_p_structure(e->algebra)));
    return kPass;
  });
}

int cmd_queerify(const QueerifyArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadedAlgebra la = load_algebra(a.file);
    const SuperAlgebra& g = la.algebra;
    if (a.generalized) {
      out << serialize_document(to_document(build::generalized_queerify(g)));
      return kPass;
    }
    auto ps = la.p_structure ? la.p_structure : restricted::find_p_structure(g);
    if (!ps) {
      err << "error: no p-structure; the input is not restricted (try --generalized)\n";
      return kFailure;
    }
    const auto v = restricted::verify_p_structure(g, *ps);
    if (!v.ok()) {
      err << "error: supplied p-structure fails: " << v.failure << '\n';
      return kFailure;
    }
    const SuperAlgebra q = build::queerify(g, ps);
    restricted::PStructure lifted;
    for (const auto& m : ps->p_map) {
      gf::Vector w(q.dim(), 0);
      std::copy(m.begin(), m.end(), w.begin());
      lifted.p_map.push_back(std::move(w));
    }
    out << serialize_document(to_document(q, lifted));
    return kPass;
  });
}

int cmd_tensor(const TensorArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const LoadedAlgebra la = load_algebra(a.l_file);
    const SuperAlgebra& l = la.algebra;
    if (a.mode == "extend") {
      if (a.poly.empty()) throw InputError("--mode extend needs --poly");
      const gf::Field f = l.field();
      std::vector<gf::Elem> coeffs;
      for (auto c : a.poly) coeffs.push_back(f.reduce(long(c)));
      const gf::Poly p(f, coeffs);
      if (p.degree() < 2) throw InputError("--poly must have degree >= 2");
      gf::Vector phi(std::size_t(p.degree()), 0);
      if (a.phi.empty()) phi[0] = 1;
      for (std::size_t i = 0; i < a.phi.size() && i < phi.size(); ++i) phi[i] = f.reduce(long(a.phi[i]));
      const auto fs = forms::invariant_symmetric_forms(l);
      const forms::BilinearForm* omega = nullptr;
      for (const auto& b : fs.even_basis)
        if (b.is_nondegenerate()) omega = &b;
      if (!omega) {
        err << "error: no even NIS among the invariant form basis of the input\n";
        return kFailure;
      }
      if (!gf::is_irreducible(p)) throw InputError("--poly is reducible over " + field_name(f.p()));
      const auto ext = build::scalar_extension_nis(l, *omega, p, phi);
      err << "B_phi: invariant, symmetric, " << (ext.form.is_nondegenerate() ? "nondegenerate" : "degenerate") << '\n';
      out << serialize_document(to_document(ext.algebra));
      return kPass;
    }
    if (a.a_file.empty()) throw InputError("an associative algebra file is required for --mode " + a.mode);
    const build::AssocSuperAlgebra alg = parse_assoc(read_file(a.a_file));
    if (a.mode == "super") {
      out << serialize_document(to_document(build::tensor_supercommutative(l, alg)));
      return kPass;
    }
    if (a.mode == "comm24") {
      out << serialize_document(to_document(build::tensor_commutative_24(l, alg, la.p_structure)));
      return kPass;
    }
    throw InputError("--mode must be super, comm24 or extend");
  });
}

int cmd_restrict(const RestrictArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    check_format(a.format);
    const LoadedAlgebra la = load_algebra(a.file);
    const SuperAlgebra& g = la.algebra;
    const bool supplied = la.p_structure.has_value();
    auto ps = supplied ? la.p_structure : restricted::find_p_structure(g);
    ordered_json j;
    j["command"] = "restrict";
    j["p"] = g.p();
    j["found"] = ps.has_value();
    if (!ps) {
      if (a.format == "json") out << j.dump(2) << '\n';
      else out << "no p-structure: some (ad e_i)^" << g.p() << " on the even part is not inner\n";
      return kFailure;
    }
    const auto v = restricted::verify_2_4_structure(g, *ps);
    j["source"] = supplied ? "document" : "solved";
    j["ambiguityDim"] = ps->ambiguity.size();
    j["evenOk"] = v.even_ok;
    j["oddOk"] = v.odd_ok;
    j["twoPOk"] = v.two_p_ok;
    j["exhaustive"] = v.exhaustive;
    j["failure"] = v.failure;
    ordered_json map = ordered_json::object();
    for (std::size_t i = 0; i < ps->p_map.size(); ++i) map[g.label(i)] = liesuper::format_vector(g, ps->p_map[i]);
    j["pMap"] = map;
    if (a.format == "json") {
      out << j.dump(2) << '\n';
    } else {
      out << "p-structure: " << (supplied ? "from document" : "solved") << '\n';
      for (std::size_t i = 0; i < ps->p_map.size(); ++i)
        out << "  " << g.label(i) << "^[" << g.p() << "] = " << liesuper::format_vector(g, ps->p_map[i]) << '\n';
      if (ps->ambiguous()) out << "  (unique up to maps into center(g_ev), dim " << ps->ambiguity.size() << ")\n";
      out << "[x^[p], y] = (ad x)^p y, y even: " << (v.even_ok ? "PASS" : "FAIL") << '\n';
      out << "[x^[p], y] = (ad x)^p y, y odd: " << (v.odd_ok ? "PASS" : "FAIL") << '\n';
      out << "[x^[2p], y] = (ad x)^2p y, x odd: " << (v.two_p_ok ? "PASS" : "FAIL") << '\n';
      if (!v.ok()) out << "first failure: " << v.failure << '\n';
    }
    return v.ok() ? kPass : kFailure;
  });
}

int cmd_check_theorem(const CheckTheoremArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_format(a.format);
    std::vector<std::pair<std::string, SuperAlgebra>> inputs;
    if (a.catalog)
      for (const auto& e : build::catalog())
        if (e.in_batch) inputs.emplace_back(e.name, e.algebra);
    for (const auto& f : a.files) inputs.emplace_back(f, load_algebra(f).algebra);
    if (inputs.empty()) throw InputError("nothing to check: pass --catalog or files");
    const unsigned jobs = a.jobs ? a.jobs : std::max(1U, std::thread::hardware_concurrency());
    const auto rows = check_theorem_rows(inputs, jobs);
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : rows) (r.status == RowStatus::Pass ? pass : r.status == RowStatus::Fail ? fail : skip)++;
    if (a.format == "json") {
      ordered_json j;
      j["command"] = "check-theorem";
      j["rows"] = ordered_json::array();
      for (const auto& r : rows)
        j["rows"].push_back({{"name", r.name},
                             {"p", r.p},
                             {"superdim", r.superdim_of_algebra},
                             {"status", to_string(r.status)},
                             {"simple", r.simple},
                             {"probabilistic", r.simplicity_probabilistic},
                             {"perfect", r.perfect},
                             {"nisSuperdimension", r.nis_superdimension},
                             {"classification", r.classification},
                             {"certificate", r.certificate},
                             {"evenCore", r.even_core},
                             {"note", r.note},
                             {"seconds", r.seconds}});
      j["passed"] = pass;
      j["failed"] = fail;
      j["skipped"] = skip;
      out << j.dump(2) << '\n';
    } else {
      int name_w = 16;
      for (const auto& r : rows) name_w = std::max(name_w, int(r.name.size()) + 2);
      out << std::left << std::setw(name_w) << "algebra" << std::setw(7) << "sdim" << std::setw(6) << "field"
          << std::setw(7) << "simple" << std::setw(6) << "NIS" << std::setw(6) << "cert" << std::setw(6) << "row"
          << "notes\n";
      for (const auto& r : rows) {
        std::string notes = r.note;
        if (r.even_core != "-") notes += (notes.empty() ? "" : "; ") + std::string("even core: ") + r.even_core;
        if (r.status == RowStatus::Skip && !r.note.empty()) notes = "skipped: " + notes;
        out << std::left << std::setw(name_w) << r.name << std::setw(7) << r.superdim_of_algebra << std::setw(6)
            << field_name(r.p) << std::setw(7) << (r.simple ? (r.simplicity_probabilistic ? "yes*" : "yes") : "no")
            << std::setw(6) << r.nis_superdimension << std::setw(6) << r.certificate << std::setw(6)
            << to_string(r.status) << notes << '\n';
      }
      out << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    }
    return fail ? kViolation : kPass;
  });
}

}  // namespace nis2::cli
