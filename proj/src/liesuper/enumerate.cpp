#include "nis2/liesuper/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "nis2/gf/random.hpp"

namespace nis2::liesuper {

namespace {

unsigned value_count(gf::Field f, unsigned degree) { return std::min(degree, f.p() - 1); }

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

}  // namespace

std::size_t test_vector_count(gf::Field f, std::size_t m, unsigned degree) {
  const std::size_t v = value_count(f, degree);
  std::size_t total = 0, binom = 1, vpow = 1;
  for (std::size_t w = 1; w <= degree && w <= m; ++w) {
    binom = sat_mul(binom, m - w + 1) / w;
    vpow = sat_mul(vpow, v);
    const std::size_t t = sat_mul(binom, vpow);
    total = t > std::numeric_limits<std::size_t>::max() - total ? std::numeric_limits<std::size_t>::max()
                                                                 : total + t;
  }
  return total;
}

bool for_each_test_vector(gf::Field f, std::size_t n, std::size_t lo, std::size_t hi, unsigned degree,
                          const std::function<bool(const gf::Vector&)>& fn, bool* exhaustive,
                          std::size_t budget, std::size_t samples) {
  const std::size_t m = hi - lo;
  if (exhaustive) *exhaustive = true;
  if (test_vector_count(f, m, degree) > budget) {
    if (exhaustive) *exhaustive = false;
    gf::Rng rng(gf::default_seed());
    for (std::size_t s = 0; s < samples; ++s)
      if (!fn(gf::random_vector_on(f, n, lo, hi, rng))) return false;
    return true;
  }
  const unsigned v = value_count(f, degree);
  gf::Vector x(n, 0);
  std::vector<std::size_t> idx;
  for (std::size_t w = 1; w <= degree && w <= m; ++w) {
    idx.resize(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      std::vector<unsigned> val(w, 1);
      while (true) {
        for (std::size_t i = 0; i < w; ++i) x[lo + idx[i]] = gf::Elem(val[i]);
        const bool go = fn(x);
        for (std::size_t i = 0; i < w; ++i) x[lo + idx[i]] = 0;
        if (!go) return false;
        std::size_t k = 0;
        while (k < w && ++val[k] > v) val[k++] = 1;
        if (k == w) break;
      }
      // next combination
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == m - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace nis2::liesuper
