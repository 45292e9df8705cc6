#include "nis2/gf/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace nis2::gf {

namespace {

using InverseTables = std::array<std::array<Elem, 256>, 252>;

const InverseTables& inverse_tables() {
  static const InverseTables tables = [] {
    InverseTables t{};
    for (unsigned p = 2; p < 252; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned a = 1; a < p; ++a) {
        for (unsigned b = 1; b < p; ++b) {
          if ((a * b) % p == 1) {
            t[p][a] = Elem(b);
            break;
          }
        }
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(unsigned p) {
  if (p > 251 || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime <= 251, got " +
                                std::to_string(p));
  p_ = std::uint8_t(p);
  inv_ = inverse_tables()[p].data();
}

Elem Field::pow(Elem a, unsigned long long e) const {
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1ULL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::reduce(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem(r);
}

void axpy(Field f, Vector& y, Elem a, const Vector& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i]) y[i] = f.add(y[i], f.mul(a, x[i]));
}

Vector add(Field f, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector sub(Field f, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vector scale(Field f, Elem a, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul(a, x[i]);
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

}  // namespace nis2::gf
