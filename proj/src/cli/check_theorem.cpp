#include "nis2/cli/check_theorem.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "nis2/forms/forms.hpp"
#include "nis2/liesuper/structure.hpp"
#include "nis2/liesuper/validate.hpp"
#include "nis2/restricted/pstructure.hpp"

namespace nis2::cli {

using liesuper::SuperAlgebra;

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

std::string sdim(std::size_t a, std::size_t b) { return std::to_string(a) + "|" + std::to_string(b); }

const char* kind_name(forms::ViolationKind k) {
  switch (k) {
    case forms::ViolationKind::Dichotomy: return "dichotomy";
    case forms::ViolationKind::Multiplicity: return "multiplicity";
    case forms::ViolationKind::Prerequisite: return "NIS without [g,g] = g";
    case forms::ViolationKind::Certificate: return "certificate";
  }
  return "?";
}

// Even part as a Lie algebra, with its own check of restrictedness, simplicity and NIS.
std::string check_even_core(const SuperAlgebra& g, bool& ok) {
  std::vector<gf::Vector> basis;
  for (std::size_t i = 0; i < g.dim_even(); ++i) basis.push_back(gf::unit_vector(g.dim(), i));
  std::vector<std::string> labels(g.labels().begin(), g.labels().begin() + long(g.dim_even()));
  const SuperAlgebra core = liesuper::subalgebra_on_basis(g, basis, g.dim_even(), labels);
  std::string out;
  ok = true;
  const auto ps = restricted::find_p_structure(core);
  if (!ps || !restricted::verify_p_structure(core, *ps).ok()) {
    ok = false;
    out = "not restricted";
  } else {
    restricted::PStructure lifted;
    for (const auto& v : ps->p_map) {
      gf::Vector w(g.dim(), 0);
      std::copy(v.begin(), v.end(), w.begin());
      lifted.p_map.push_back(std::move(w));
    }
    const auto v = restricted::verify_2_4_structure(g, lifted);
    out = v.ok() ? "restricted (2|4 ok)" : "restricted (2|4 FAILS: " + v.failure + ")";
    ok = v.ok();
  }
  const auto simple = liesuper::is_simple(core);
  out += simple.simple ? ", simple" : ", NOT simple";
  ok = ok && simple.simple;
  forms::NisOptions opt;
  opt.throw_on_multiplicity = false;
  try {
    const auto r = forms::nis_superdimension(core, opt);
    const bool has = r.superdimension.first > 0;
    out += has ? ", NIS" : ", no NIS";
    ok = ok && has;
  } catch (const forms::TheoremViolation& e) {
    out += std::string(", violation: ") + e.what();
    ok = false;
  }
  return out;
}

void run_row(TheoremRow& row, const SuperAlgebra& g) {
  row.superdim_of_algebra = sdim(g.dim_even(), g.dim_odd());
  row.p = g.p();
  const auto rep = liesuper::validate(g);
  if (!rep.ok()) {
    std::string ids;
    for (const auto& id : rep.failed()) ids += (ids.empty() ? "" : ", ") + id;
    if (!rep.structural_errors.empty()) ids += (ids.empty() ? "" : ", ") + std::string("parity");
    row.status = RowStatus::Skip;
    row.note = "not a Lie superalgebra (fails " + ids + ")";
    return;
  }
  forms::NisOptions opt;
  opt.throw_on_multiplicity = false;
  forms::NisReport r;
  try {
    r = forms::nis_superdimension(g, opt);
  } catch (const forms::TheoremViolation& e) {
    row.status = RowStatus::Fail;
    row.simple = true;
    row.note = std::string(kind_name(e.kind())) + ": " + e.what();
    if (e.report()) row.nis_superdimension = e.report()->superdim_string();
    return;
  }
  row.simple = r.simplicity.simple;
  row.simplicity_probabilistic = r.simplicity.probabilistic;
  row.perfect = r.perfect;
  row.nis_superdimension = r.superdim_string();
  row.classification = r.classification;
  if (!r.simplicity.simple) {
    row.status = RowStatus::Skip;
    row.note = "not simple";
    return;
  }
  row.status = RowStatus::Pass;
  const auto [a, b] = r.superdimension;
  if (!r.perfect) {
    const auto bound = forms::degenerate_forms_lower_bound(g);
    row.note = "[g,g] != g (codim " + std::to_string(bound.k) + "), " + std::to_string(r.forms.dim()) +
               " degenerate IS forms; dichotomy not applicable";
  }
  if (a > 1 || b > 1) {
    const std::size_t d = liesuper::centroid(g).size();
    bool pencil_ok = true;
    for (const auto* basis : {&r.forms.even_basis, &r.forms.odd_basis})
      for (std::size_t i = 0; i < basis->size(); ++i)
        for (std::size_t j = i + 1; j < basis->size(); ++j)
          pencil_ok = pencil_ok && !forms::pencil_scan((*basis)[i], (*basis)[j]).has_root();
    if (d > 1 && a <= d && b <= d && pencil_ok) {
      row.note = "non-closed field multiplicity: centroid has dimension " + std::to_string(d) +
                 ", no pencil root in F_" + std::to_string(g.p());
    } else {
      row.status = RowStatus::Fail;
      row.note = "NIS superdimension " + r.superdim_string() + " outside {0|0, 1|0, 0|1, 1|1}";
    }
    return;
  }
  if (a == 1 && b == 1) {
    if (g.p() != 2) {
      row.note = "1|1 over odd p; certificate applies to p = 2 only";
      return;
    }
    const auto q = forms::queer_operator(g, r.forms.even_basis.front(), r.forms.odd_basis.front());
    row.certificate = q.certificate() ? "PASS" : "FAIL";
    bool core_ok = false;
    row.even_core = check_even_core(g, core_ok);
    if (!q.certificate()) {
      row.status = RowStatus::Fail;
      row.note = "certificate: " + q.failure;
    } else if (!core_ok) {
      row.status = RowStatus::Fail;
      row.note = "even core is not restricted simple with a NIS";
    }
  }
}

}  // namespace

TheoremRow check_theorem_row(const std::string& name, const SuperAlgebra& g) {
  TheoremRow row;
  row.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    run_row(row, g);
  } catch (const std::exception& e) {
    row.status = RowStatus::Fail;
    row.note = std::string("error: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<TheoremRow> check_theorem_rows(const std::vector<std::pair<std::string, SuperAlgebra>>& inputs,
                                           unsigned jobs) {
  std::vector<TheoremRow> rows(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) rows[i] = check_theorem_row(inputs[i].first, inputs[i].second);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, unsigned(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(rows.begin(), rows.end(), [](const TheoremRow& x, const TheoremRow& y) { return x.name < y.name; });
  return rows;
}

}  // namespace nis2::cli
