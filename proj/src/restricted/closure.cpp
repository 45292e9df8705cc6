#include <deque>
#include <stdexcept>

#include "nis2/gf/linalg.hpp"
#include "nis2/liesuper/structure.hpp"
#include "nis2/restricted/pstructure.hpp"

namespace nis2::restricted {

namespace {

Vector flatten(const gf::Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.get(i, j));
  return v;
}

}  // namespace

std::optional<Vector> closure_coordinates(const ClosureResult& c, const gf::Matrix& op) {
  std::vector<Vector> cols;
  for (const auto& m : c.operators) cols.push_back(flatten(m));
  const gf::Matrix a = gf::Matrix::from_columns(op.field(), op.rows() * op.cols(), cols);
  return gf::solve(a, flatten(op));
}

ClosureResult one_step_closure(const SuperAlgebra& g) {
  if (g.p() != 2) throw std::invalid_argument("one_step_closure: requires p = 2");
  if (g.dim_odd() != 0) throw std::invalid_argument("one_step_closure: algebra must be purely even");
  if (!liesuper::center(g).is_zero())
    throw std::invalid_argument("one_step_closure: nonzero center, ad is not an embedding");
  const gf::Field f = g.field();
  const std::size_t n = g.dim();

  std::vector<gf::Matrix> ops;
  gf::RowSpace span(f, n * n);
  std::deque<std::size_t> todo;
  auto push = [&](const gf::Matrix& m) {
    if (span.insert(flatten(m))) {
      ops.push_back(m);
      todo.push_back(ops.size() - 1);
    }
  };
  for (std::size_t i = 0; i < n; ++i) push(g.ad_basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector x = gf::unit_vector(n, i);
      x[j] = 1;
      const gf::Matrix a = g.ad(x);
      push(a * a);
    }
  // Close under commutators.
  while (!todo.empty()) {
    const std::size_t t = todo.front();
    todo.pop_front();
    for (std::size_t s = 0; s < ops.size(); ++s) {
      const gf::Matrix a = ops[t], b = ops[s];
      push(a * b - b * a);
    }
  }

  ClosureResult out{SuperAlgebra(f, ops.size(), 0), ops, gf::Matrix(f, ops.size(), n)};
  for (std::size_t i = 0; i < n; ++i) out.embedding.set(i, i, 1);
  std::vector<Vector> cols;
  for (const auto& m : ops) cols.push_back(flatten(m));
  const gf::Matrix basis = gf::Matrix::from_columns(f, n * n, cols);
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const auto c = gf::solve(basis, flatten(ops[i] * ops[j] - ops[j] * ops[i]));
      if (!c) throw std::logic_error("one_step_closure: commutator escaped the span");
      out.algebra.set_bracket(i, j, *c);
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ops.size(); ++i)
    labels.push_back(i < n ? "ad(" + g.label(i) + ")" : "D" + std::to_string(i - n + 1));
  out.algebra.set_labels(labels);
  return out;
}

}  // namespace nis2::restricted
