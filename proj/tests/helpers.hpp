#pragma once

// Shared test utilities: deterministic random generators over small
// rationals so every suite is reproducible bit-for-bit.

#include <cstdint>
#include <random>
#include <vector>

#include "plesken/lie_algebra.hpp"
#include "plesken/matrix.hpp"
#include "plesken/rational.hpp"

namespace plesken::testing {

using Rng = std::mt19937_64;

inline Rat random_rational(Rng& rng, int max_abs_num = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num_dist(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den_dist(1, max_den);
  return Rat(num_dist(rng), den_dist(rng));
}

inline Rat random_integer(Rng& rng, int max_abs = 9) {
  std::uniform_int_distribution<int> dist(-max_abs, max_abs);
  return Rat(dist(rng));
}

inline Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool integer = false) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = integer ? random_integer(rng) : random_rational(rng);
  return m;
}

inline Mat random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Mat m = random_matrix(rng, n, n, /*integer=*/true);
    if (is_invertible(m)) return m;
  }
}

inline std::vector<Rat> random_vector(Rng& rng, std::size_t n) {
  std::vector<Rat> v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

inline void set_bracket(std::vector<Rat>& tensor, std::size_t dim, std::size_t i, std::size_t j,
                        std::size_t k, const Rat& v) {
  tensor[(i * dim + j) * dim + k] = v;
  tensor[(j * dim + i) * dim + k] = -v;
}

/// Basis x, y, z with [x, y] = z.
inline AlgebraPtr heisenberg_algebra() {
  std::vector<Rat> t(27);
  set_bracket(t, 3, 0, 1, 2, 1);
  return make_algebra(LieAlgebra::from_structure({"x", "y", "z"}, std::move(t)));
}

/// Basis e, f, h with [e, f] = h, [h, e] = 2e, [h, f] = -2f.
inline AlgebraPtr sl2_algebra() {
  std::vector<Rat> t(27);
  set_bracket(t, 3, 0, 1, 2, 1);
  set_bracket(t, 3, 2, 0, 0, 2);
  set_bracket(t, 3, 2, 1, 1, -2);
  return make_algebra(LieAlgebra::from_structure({"e", "f", "h"}, std::move(t)));
}

} // namespace plesken::testing
