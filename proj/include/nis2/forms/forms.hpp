#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nis2/forms/bilinear_form.hpp"
#include "nis2/gf/poly.hpp"
#include "nis2/liesuper/structure.hpp"
#include "nis2/liesuper/superalgebra.hpp"

namespace nis2::forms {

using liesuper::SuperAlgebra;

/// Nondegeneracy census of one parity component of the IS-form space.
struct ComponentScan {
  std::size_t dim = 0;
  /// Nonzero members inspected (all p^dim - 1 of them when exact).
  std::size_t members = 0;
  std::size_t nondegenerate = 0;
  /// Dimension of the span of the nondegenerate members.
  std::size_t nis_dim = 0;
  bool exact = true;
  /// A nonzero degenerate member, if one was seen.
  std::optional<BilinearForm> degenerate_member;
};

struct FormSpace {
  std::vector<BilinearForm> even_basis;
  std::vector<BilinearForm> odd_basis;
  ComponentScan even_scan;
  ComponentScan odd_scan;
  /// Nondegenerate forms among the basis representatives.
  [[nodiscard]] std::size_t even_nis_count() const;
  [[nodiscard]] std::size_t odd_nis_count() const;
  /// NIS superdimension (a|b): dimensions of the spans of the NISes per parity.
  [[nodiscard]] std::pair<std::size_t, std::size_t> superdimension() const {
    return {even_scan.nis_dim, odd_scan.nis_dim};
  }
  [[nodiscard]] std::size_t dim() const { return even_basis.size() + odd_basis.size(); }
};

struct FormOptions {
  /// Also impose B(x^2, y) = B(x, [x, y]) for odd x (p = 2 only).
  bool strict = false;
  /// Exhaustive nondegeneracy scan when p^dim does not exceed this.
  std::size_t scan_limit = 1U << 16;
  std::size_t scan_samples = 4096;
};

/// Basis of the space of symmetric forms with B([x,z],y) = B(x,[z,y]) for all
/// x,y,z, split by parity. Invariance is imposed on all basis triples and
/// symmetry as u(B) = B.
[[nodiscard]] FormSpace invariant_symmetric_forms(const SuperAlgebra& g, const FormOptions& opt = {});

/// Invariance on basis triples, optionally with the squaring condition.
[[nodiscard]] bool is_invariant(const SuperAlgebra& g, const BilinearForm& b, bool strict = false);

/// Counts nondegenerate members of span(basis).
[[nodiscard]] ComponentScan scan_component(const std::vector<BilinearForm>& basis, std::size_t dim_even,
                                           const FormOptions& opt = {});

enum class ViolationKind { Dichotomy, Multiplicity, Prerequisite, Certificate };

struct NisReport {
  FormSpace forms;
  liesuper::SimplicityVerdict simplicity;
  std::pair<std::size_t, std::size_t> superdimension{0, 0};
  /// "no NIS", "even NIS", "odd NIS", "queerification candidate", or
  /// "multiple NISes (field not closed)".
  std::string classification;
  /// commutant(g) = g.
  bool perfect = false;
  /// The dichotomy zero-or-nondegenerate was asserted: g simple, and over
  /// F_2 also perfect (otherwise pullbacks from g/[g,g] are degenerate ISes).
  bool dichotomy_checked = false;
  /// A simple algebra has more than one independent NIS of some parity.
  bool field_not_closed = false;
  [[nodiscard]] std::string superdim_string() const;
};

class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(ViolationKind kind, const std::string& what, std::optional<BilinearForm> form = std::nullopt,
                   std::optional<NisReport> report = std::nullopt)
      : std::runtime_error(what), kind_(kind), form_(std::move(form)), report_(std::move(report)) {}
  [[nodiscard]] ViolationKind kind() const { return kind_; }
  [[nodiscard]] const std::optional<BilinearForm>& form() const { return form_; }
  [[nodiscard]] const std::optional<NisReport>& report() const { return report_; }

 private:
  ViolationKind kind_;
  std::optional<BilinearForm> form_;
  std::optional<NisReport> report_;
};

struct NisOptions {
  FormOptions forms;
  /// Throw TheoremViolation(Multiplicity) when a component of a simple
  /// algebra has dimension > 1. When false the report carries
  /// field_not_closed instead. Dichotomy failures always throw.
  bool throw_on_multiplicity = true;
};

/// NIS superdimension. For simple g: a NIS with [g,g] != g is a Prerequisite
/// violation, a nonzero degenerate member of a homogeneous component is a
/// Dichotomy violation (asserted when dichotomy_checked), and a NIS span of
/// dimension > 1 in one parity is a Multiplicity violation.
[[nodiscard]] NisReport nis_superdimension(const SuperAlgebra& g, const NisOptions& opt = {});

/// commutant(g) == g.
[[nodiscard]] bool check_nis_prerequisite(const SuperAlgebra& g);

struct DegenerateBound {
  std::size_t k = 0;      // codim of the commutant
  std::size_t bound = 0;  // dimension of symmetric forms on g/[g,g]
  std::vector<BilinearForm> witnesses;
};

/// Pulls back every symmetric form on g/[g,g]. Over F_2 the bound is
/// k(k+1)/2; for odd p the super-symmetric square of a k_e|k_o space.
[[nodiscard]] DegenerateBound degenerate_forms_lower_bound(const SuperAlgebra& g);

/// ½k(k+1).
[[nodiscard]] constexpr std::size_t symmetric_square_dim(std::size_t k) { return k * (k + 1) / 2; }

struct QueerOperator {
  gf::Matrix j;
  /// J^2 restricted to g_ev equals mu times the identity.
  Elem mu = 0;
  bool invertible = false;
  bool swaps_parity = false;
  bool square_is_scalar = false;
  bool intertwines = false;      // [Ja, b] = J[a, b]
  bool odd_brackets = false;     // [Ja, Jb] = mu [a, b]
  bool two_structure = false;    // a -> (Ja)^2 satisfies [(Ja)^2, b] = mu [a,[a,b]]
  /// Some (a, b) witnessing the first failing property.
  std::string failure;
  [[nodiscard]] bool certificate() const {
    return invertible && swaps_parity && square_is_scalar && intertwines && odd_brackets && two_structure;
  }
};

/// J with w_odd(x, y) = w_even(J x, y). Requires p = 2, w_even even and
/// nondegenerate, w_odd odd and nondegenerate (std::invalid_argument otherwise).
/// Certificate failures are reported in the result, not thrown.
[[nodiscard]] QueerOperator queer_operator(const SuperAlgebra& g, const BilinearForm& w_even,
                                           const BilinearForm& w_odd);

struct PencilScan {
  gf::Poly determinant;
  /// (lambda, det(B1 + lambda B2)) for every lambda in F_p.
  std::vector<std::pair<Elem, Elem>> values;
  [[nodiscard]] bool has_root() const;
};

/// Gram matrices are treated as plain matrices.
[[nodiscard]] PencilScan pencil_scan(const BilinearForm& w1, const BilinearForm& w2);

}  // namespace nis2::forms
