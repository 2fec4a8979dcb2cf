#pragma once

#include <random>
#include <vector>

#include "cayci/cayley.hpp"
#include "cayci/intlin.hpp"

namespace cayci::testing {

inline ConnectionSet make_set(std::initializer_list<std::initializer_list<long long>> vectors,
                              Mode mode = Mode::Undirected) {
  std::vector<IntVector> raw;
  Index n = 0;
  for (const auto& v : vectors) {
    raw.push_back(int_vector(v));
    n = static_cast<Index>(v.size());
  }
  return ConnectionSet::validate(std::move(raw), n, mode);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

/// Rejection-sampled unimodular matrix with entries in [lo, hi].
inline IntMatrix random_unimodular(std::mt19937_64& rng, Index n, int lo = -3, int hi = 3) {
  while (true) {
    IntMatrix m = random_matrix(rng, n, n, lo, hi);
    if (is_unimodular<Integer>(m)) return m;
  }
}

/// Vertex labels of ball(S, r), by value.
inline std::vector<Label> labels(const ConnectionSet& s, int radius) { return ball(s, radius).labels(); }

/// Determinant by permutation expansion.
inline Integer leibniz_det(const IntMatrix& a) {
  const Index n = a.rows();
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  Integer total = 0;
  do {
    int inversions = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (Index i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace cayci::testing
