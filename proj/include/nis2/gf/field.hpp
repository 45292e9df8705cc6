#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace nis2::gf {

/// Residue in [0, p). The modulus travels separately (see Field).
using Elem = std::uint8_t;

/// Coordinate vector over a prime field; every entry is a reduced residue.
using Vector = std::vector<Elem>;

/// Arithmetic in the prime field F_p for primes p <= 251.
///
/// A Field is a small value (modulus plus a pointer into a shared, immutable
/// inverse table), so it is passed by value everywhere.
class Field {
 public:
  /// Throws std::invalid_argument unless p is a prime <= 251.
  explicit Field(unsigned p);

  [[nodiscard]] unsigned p() const { return p_; }
  [[nodiscard]] bool is_binary() const { return p_ == 2; }

  [[nodiscard]] Elem add(Elem a, Elem b) const {
    unsigned s = unsigned(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] Elem sub(Elem a, Elem b) const {
    return Elem(a >= b ? a - b : unsigned(a) + p_ - b);
  }
  [[nodiscard]] Elem neg(Elem a) const { return Elem(a == 0 ? 0 : p_ - a); }
  [[nodiscard]] Elem mul(Elem a, Elem b) const {
    return Elem((unsigned(a) * b) % p_);
  }
  /// Inverse of a nonzero element; inv(0) is 0.
  [[nodiscard]] Elem inv(Elem a) const { return inv_[a]; }
  [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  [[nodiscard]] Elem pow(Elem a, unsigned long long e) const;
  /// Reduces an arbitrary integer (possibly negative) into [0, p).
  [[nodiscard]] Elem reduce(long long v) const;
  /// (-1)^k as a field element.
  [[nodiscard]] Elem sign(unsigned k) const { return (k & 1U) ? neg(1) : Elem(1); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint8_t p_;
  const Elem* inv_;
};

[[nodiscard]] bool is_prime(unsigned n);

/// A field element bundled with its field, for the public value-returning API.
class FieldElem {
 public:
  FieldElem(Field f, Elem v) : field_(f), value_(f.reduce(v)) {}

  [[nodiscard]] Elem value() const { return value_; }
  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] bool is_zero() const { return value_ == 0; }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) {
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend bool operator==(FieldElem a, FieldElem b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, FieldElem a) {
    return os << unsigned(a.value_);
  }

 private:
  Field field_;
  Elem value_;
};

// Vector helpers over a field. Lengths must agree.
void axpy(Field f, Vector& y, Elem a, const Vector& x);  // y += a*x
[[nodiscard]] Vector add(Field f, const Vector& a, const Vector& b);
[[nodiscard]] Vector sub(Field f, const Vector& a, const Vector& b);
[[nodiscard]] Vector scale(Field f, Elem a, const Vector& x);
[[nodiscard]] bool is_zero(const Vector& v);
[[nodiscard]] Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace nis2::gf
