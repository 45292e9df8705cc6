#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "nis2/gf/kernels.hpp"
#include "nis2/gf/linalg.hpp"

namespace nis2::gf {

namespace {

std::vector<std::uint64_t> pack(const Vector& v, std::size_t words) {
  std::vector<std::uint64_t> w(words, 0);
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] & 1U) w[c >> 6] |= std::uint64_t{1} << (c & 63);
  return w;
}

Vector unpack(const std::vector<std::uint64_t>& w, std::size_t cols) {
  Vector v(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) v[c] = Elem((w[c >> 6] >> (c & 63)) & 1U);
  return v;
}

}  // namespace

RowSpace::RowSpace(Field f, std::size_t cols)
    : field_(f), cols_(cols), words_((cols + 63) / 64), pivot_row_(cols, -1),
      pivot_mask_(words_, 0) {}

void RowSpace::reduce_packed(std::vector<std::uint64_t>& w) const {
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < words_; ++i) {
    // Rows are fully reduced, so clearing one pivot never sets another.
    std::uint64_t hits = w[i] & pivot_mask_[i];
    while (hits) {
      const std::size_t col = i * 64 + std::size_t(std::countr_zero(hits));
      hits &= hits - 1;
      k.xor_words(w.data(), packed_[std::size_t(pivot_row_[col])].data(), words_);
    }
  }
}

void RowSpace::reduce_bytes(Vector& v) const {
  const auto& k = kernels::active();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c) k.axpy_mod(v.data(), bytes_[r].data(), field_.neg(c), field_.p(), cols_);
  }
}

bool RowSpace::insert(const Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace::insert: length mismatch");
  const auto& k = kernels::active();
  if (field_.is_binary()) {
    auto w = pack(v, words_);
    reduce_packed(w);
    std::size_t lead = cols_;
    for (std::size_t i = 0; i < words_; ++i) {
      if (w[i]) {
        lead = i * 64 + std::size_t(std::countr_zero(w[i]));
        break;
      }
    }
    if (lead == cols_) return false;
    const std::uint64_t bit = std::uint64_t{1} << (lead & 63);
    for (auto& row : packed_)
      if (row[lead >> 6] & bit) k.xor_words(row.data(), w.data(), words_);
    pivot_row_[lead] = long(packed_.size());
    pivot_mask_[lead >> 6] |= bit;
    pivots_.push_back(lead);
    packed_.push_back(std::move(w));
    return true;
  }
  Vector r = v;
  reduce_bytes(r);
  auto it = std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; });
  if (it == r.end()) return false;
  const std::size_t lead = std::size_t(it - r.begin());
  k.scale_mod(r.data(), field_.inv(r[lead]), field_.p(), cols_);
  for (auto& row : bytes_)
    if (Elem c = row[lead]) k.axpy_mod(row.data(), r.data(), field_.neg(c), field_.p(), cols_);
  pivot_row_[lead] = long(bytes_.size());
  pivots_.push_back(lead);
  bytes_.push_back(std::move(r));
  return true;
}

Vector RowSpace::reduce(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace::reduce: length mismatch");
  if (field_.is_binary()) {
    auto w = pack(v, words_);
    reduce_packed(w);
    return unpack(w, cols_);
  }
  Vector r = v;
  reduce_bytes(r);
  return r;
}

bool RowSpace::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::vector<std::size_t> RowSpace::pivots() const {
  std::vector<std::size_t> p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

std::optional<Vector> RowSpace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  const auto order = pivots();
  Vector coords(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) coords[i] = v[order[i]];
  return coords;
}

std::vector<Vector> RowSpace::basis() const {
  std::vector<Vector> out;
  out.reserve(pivots_.size());
  for (std::size_t col : pivots()) {
    const auto r = std::size_t(pivot_row_[col]);
    out.push_back(field_.is_binary() ? unpack(packed_[r], cols_) : bytes_[r]);
  }
  return out;
}

std::vector<Vector> RowSpace::nullspace() const {
  const auto rows = basis();
  const auto order = pivots();
  std::vector<Vector> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (pivot_row_[free] >= 0) continue;
    Vector v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) v[order[r]] = field_.neg(rows[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace nis2::gf
