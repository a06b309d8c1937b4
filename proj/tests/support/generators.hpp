#ifndef TILED_TESTS_GENERATORS_HPP
#define TILED_TESTS_GENERATORS_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "tiled/exponent_matrix.hpp"

namespace testgen {

// Every valid exponent matrix equals the entrywise max of its own
// column-difference matrices c_i - c_j, so maxima of random difference
// matrices cover the whole space; entries stay within [-span, span].
inline tiled::ExponentMatrix random_valid_matrix(std::mt19937& rng, int n,
                                                 int span = 3) {
  std::uniform_int_distribution<int> count(1, n + 1);
  std::uniform_int_distribution<std::int64_t> coord(0, span);
  const int k = count(rng);
  tiled::IntMatrix mu(
      n, std::vector<std::int64_t>(n, std::numeric_limits<std::int64_t>::min()));
  for (int r = 0; r < k; ++r) {
    std::vector<std::int64_t> c(n);
    for (auto& v : c) v = coord(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mu[i][j] = std::max(mu[i][j], c[i] - c[j]);
  }
  return tiled::ExponentMatrix::validate(n, mu);
}

inline tiled::Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return tiled::Permutation::from_images(std::move(img));
}

inline tiled::MonomialMatrix random_monomial(std::mt19937& rng, int n,
                                             int span = 3) {
  std::uniform_int_distribution<std::int64_t> dist(-span, span);
  std::vector<std::int64_t> alpha(n);
  for (auto& v : alpha) v = dist(rng);
  return tiled::MonomialMatrix(random_permutation(rng, n), std::move(alpha));
}

} // namespace testgen

#endif
