#include "nis2/forms/bilinear_form.hpp"

#include <stdexcept>

#include "nis2/gf/linalg.hpp"

namespace nis2::forms {

const char* to_string(FormParity p) {
  switch (p) {
    case FormParity::Even: return "even";
    case FormParity::Odd: return "odd";
    default: return "inhomogeneous";
  }
}

namespace {

unsigned parity_bit(FormParity p) {
  if (p == FormParity::Inhomogeneous) throw std::invalid_argument("form is not homogeneous");
  return p == FormParity::Odd ? 1U : 0U;
}

FormParity classify(const gf::Matrix& v, std::size_t e) {
  bool mixed = false, diag = false;
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j)
      if (v.get(i, j)) ((i < e) == (j < e) ? diag : mixed) = true;
  if (!mixed) return FormParity::Even;
  if (!diag) return FormParity::Odd;
  return FormParity::Inhomogeneous;
}

// Gram <-> values: multiply row i by (-1)^{p(B)p(v_i)}; an involution.
gf::Matrix sign_rows(const gf::Matrix& m, std::size_t e, FormParity parity) {
  if (m.field().is_binary() || parity_bit(parity) == 0) return m;
  gf::Matrix out = m;
  const gf::Field f = m.field();
  for (std::size_t i = e; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, f.neg(m.get(i, j)));
  return out;
}

}  // namespace

BilinearForm::BilinearForm(gf::Matrix values, std::size_t dim_even)
    : values_(std::move(values)), dim_even_(dim_even) {
  if (!values_.is_square() || dim_even > values_.rows())
    throw std::invalid_argument("BilinearForm: matrix must be square and the format must fit");
  parity_ = classify(values_, dim_even);
}

BilinearForm BilinearForm::from_gram(const gf::Matrix& gram, std::size_t dim_even, FormParity parity) {
  BilinearForm b(sign_rows(gram, dim_even, parity), dim_even);
  if (!b.is_zero() && b.parity_ != parity)
    throw std::invalid_argument("BilinearForm::from_gram: Gram matrix does not have the declared parity");
  return b;
}

gf::Matrix BilinearForm::gram() const { return sign_rows(values_, dim_even_, parity_); }

bool BilinearForm::is_nondegenerate() const { return gf::rank(values_) == dim(); }

Elem BilinearForm::operator()(const Vector& x, const Vector& y) const {
  const gf::Field f = field();
  const Vector vy = values_.apply(y);
  unsigned long acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += unsigned(x[i]) * vy[i];
  return Elem(acc % f.p());
}

gf::Matrix upset(const gf::Matrix& gram, std::size_t e, FormParity parity) {
  const gf::Field f = gram.field();
  const unsigned pb = parity_bit(parity);
  const std::size_t n = gram.rows();
  gf::Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem v = gram.get(j, i);
      const bool ei = i < e, ej = j < e;
      if (ei != ej) v = pb ? f.neg(v) : v;  // (-1)^{p(B)} on the off-diagonal blocks
      else if (!ei) v = f.neg(v);            // -U^t
      out.set(i, j, v);
    }
  return out;
}

gf::Matrix BilinearForm::upset_gram() const { return upset(gram(), dim_even_, parity_); }

bool BilinearForm::is_symmetric() const {
  if (parity_ == FormParity::Inhomogeneous) {
    // Symmetric iff both homogeneous components are.
    gf::Matrix ev(field(), dim(), dim()), od(field(), dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        ((i < dim_even_) == (j < dim_even_) ? ev : od).set(i, j, values_.get(i, j));
    return BilinearForm(ev, dim_even_).is_symmetric() && BilinearForm(od, dim_even_).is_symmetric();
  }
  return upset_gram() == gram();
}

BilinearForm operator+(const BilinearForm& a, const BilinearForm& b) {
  if (a.dim_even_ != b.dim_even_) throw std::invalid_argument("BilinearForm +: format mismatch");
  return BilinearForm(a.values_ + b.values_, a.dim_even_);
}

BilinearForm operator*(Elem s, const BilinearForm& a) { return BilinearForm(s * a.values_, a.dim_even_); }

BilinearForm pi_twist(const BilinearForm& b) {
  const gf::Field f = b.field();
  const std::size_t n = b.dim(), e = b.dim_even(), o = n - e;
  const unsigned pb = parity_bit(b.parity());
  auto pos = [&](std::size_t i) { return i < e ? o + i : i - e; };
  gf::Matrix v(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned px = i < e ? 0 : 1, py = j < e ? 0 : 1;
      v.set(pos(i), pos(j), f.mul(f.sign(pb + px + px * py), b.values().get(i, j)));
    }
  return BilinearForm(v, o);
}

}  // namespace nis2::forms
