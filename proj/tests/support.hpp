#pragma once

// Instance generators and brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qhn/linalg.hpp"
#include "qhn/quiver.hpp"
#include "qhn/rational.hpp"

namespace qhn::testing {

/// Every rows x cols matrix over F_p, in counting order.
inline std::vector<Matrix> all_matrices(PrimeField f, std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  const std::size_t cells = rows * cols;
  std::vector<int> digits(cells, 0);
  while (true) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < cells; ++i) m.set(i / cols, i % cols, digits[i]);
    out.push_back(std::move(m));
    std::size_t pos = 0;
    while (pos < cells && ++digits[pos] == f.p()) digits[pos++] = 0;
    if (pos == cells) break;
  }
  return out;
}

/// Calls `visit` on every representation of the h-arrow Kronecker quiver with
/// the given dimension vector.
inline void for_each_kronecker_rep(PrimeField f, std::size_t h, long long d0, long long d1,
                                   const std::function<void(const Representation&)>& visit) {
  const auto mats = all_matrices(f, static_cast<std::size_t>(d1), static_cast<std::size_t>(d0));
  std::vector<std::size_t> idx(h, 0);
  while (true) {
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < h; ++a) maps.push_back(mats[idx[a]]);
    visit(Representation(Quiver::kronecker(h), f, DimensionVector({d0, d1}), std::move(maps)));
    std::size_t pos = 0;
    while (pos < h && ++idx[pos] == mats.size()) idx[pos++] = 0;
    if (pos == h) break;
  }
}

inline Matrix random_matrix(PrimeField f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, f.p() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

/// Random representation of v0 -> v1 -> v2 with each dimension in [0, max_dim], not all zero.
inline Representation random_a3_rep(PrimeField f, long long max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dim(0, max_dim);
  std::vector<long long> d;
  do {
    d = {dim(rng), dim(rng), dim(rng)};
  } while (d[0] + d[1] + d[2] == 0);
  std::vector<Matrix> maps;
  maps.push_back(random_matrix(f, static_cast<std::size_t>(d[1]), static_cast<std::size_t>(d[0]), rng));
  maps.push_back(random_matrix(f, static_cast<std::size_t>(d[2]), static_cast<std::size_t>(d[1]), rng));
  return Representation(Quiver::path(3), f, DimensionVector(d), std::move(maps));
}

/// All vectors of F_p^n.
inline std::vector<std::vector<Residue>> all_vectors(PrimeField f, std::size_t n) {
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> x(n, 0);
  while (true) {
    out.push_back(x);
    std::size_t pos = 0;
    while (pos < n && ++x[pos] == f.p()) x[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

/// The set of vectors in the row span of m, by enumerating all combinations.
inline std::vector<std::vector<Residue>> span_by_enumeration(const Matrix& m) {
  const PrimeField f = m.field();
  std::vector<std::vector<Residue>> out;
  for (const auto& coeffs : all_vectors(f, m.rows())) {
    std::vector<Residue> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = f.add(v[c], f.mul(coeffs[r], m(r, c)));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Weighted least-squares projection of v onto the non-decreasing cone by
/// trying every partition into consecutive blocks (constant = weighted mean).
inline std::vector<Rational> block_partition_projection(const std::vector<Rational>& b,
                                                        const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  std::vector<Rational> best;
  Rational best_cost = -1;
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<Rational> gamma(n);
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool cut_after = i == n - 1 || ((cuts >> i) & 1u);
      if (!cut_after) continue;
      Rational mass = 0, weight = 0;
      for (std::size_t k = start; k <= i; ++k) {
        mass += b[k] * v[k];
        weight += b[k];
      }
      for (std::size_t k = start; k <= i; ++k) gamma[k] = mass / weight;
      start = i + 1;
    }
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < n; ++i) monotone = monotone && gamma[i] <= gamma[i + 1];
    if (!monotone) continue;
    Rational cost = 0;
    for (std::size_t i = 0; i < n; ++i) cost += b[i] * (v[i] - gamma[i]) * (v[i] - gamma[i]);
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best = gamma;
    }
  }
  return best;
}

/// Every (b, v) with b in {1,2}^n, v in {-3..3}^n, sum b v = 0, 1 <= n <= max_n.
inline void for_each_small_graph_data(
    std::size_t max_n,
    const std::function<void(const std::vector<Rational>&, const std::vector<Rational>&)>& visit) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<long long> b(n, 1), v(n, -3);
    for (std::uint32_t bmask = 0; bmask < (1u << n); ++bmask) {
      for (std::size_t i = 0; i < n; ++i) b[i] = (bmask >> i) & 1u ? 2 : 1;
      std::fill(v.begin(), v.end(), -3);
      while (true) {
        long long total = 0;
        for (std::size_t i = 0; i < n; ++i) total += b[i] * v[i];
        if (total == 0) visit(std::vector<Rational>(b.begin(), b.end()), std::vector<Rational>(v.begin(), v.end()));
        std::size_t pos = 0;
        while (pos < n && ++v[pos] == 4) v[pos++] = -3;
        if (pos == n) break;
      }
    }
  }
}

}  // namespace qhn::testing
