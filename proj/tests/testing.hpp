#pragma once

// Seeded random generators for exact values, shared by the test suites.

#include <algorithm>
#include <random>

#include "lie2/exactla.hpp"

namespace lie2::testing {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, int span = 3, bool fractions = true) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, fractions ? 3 : 1);
  return frac(num(rng), den(rng));
}

/// Entries are zero with probability `zero_bias`, otherwise small rationals.
inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double zero_bias = 0.3) {
  std::bernoulli_distribution zero(zero_bias);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? Rat(0) : random_rat(rng);
  return m;
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_rat(rng);
  return v;
}

inline Tensor random_tensor(Rng& rng, std::vector<std::size_t> shape, double zero_bias = 0.3) {
  Tensor t(std::move(shape));
  std::bernoulli_distribution zero(zero_bias);
  for (auto& x : t.data()) x = zero(rng) ? Rat(0) : random_rat(rng);
  return t;
}

/// Random invertible n x n matrix (unit lower times unit upper triangular,
/// then a row permutation).
inline Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_rat(rng, 2, false);
      upper(j, i) = random_rat(rng, 2, false);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return select_rows(lower * upper, perm);
}

inline std::size_t random_dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace lie2::testing
