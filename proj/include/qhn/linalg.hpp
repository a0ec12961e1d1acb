#pragma once

// Dense linear algebra over small prime fields and the lattice of subspaces
// of F_p^n. Every subspace is stored through its canonical reduced row
// echelon basis, so set equality is byte equality of the basis entries.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhn/error.hpp"
#include "qhn/rational.hpp"

namespace qhn {

using Residue = std::uint8_t;

class PrimeField {
 public:
  static constexpr int kMaxPrime = 97;

  explicit PrimeField(int p) : p_(p) {
    if (p < 2 || p > kMaxPrime) {
      throw InvalidArgument("field characteristic " + std::to_string(p) +
                            " outside [2, " + std::to_string(kMaxPrime) + "]");
    }
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        throw InvalidArgument("field characteristic " + std::to_string(p) +
                              " is not prime");
      }
    }
  }

  int p() const noexcept { return p_; }

  Residue reduce(long long x) const noexcept {
    long long r = x % p_;
    if (r < 0) r += p_;
    return static_cast<Residue>(r);
  }

  Residue add(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((a + b) % p_);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((a + p_ - b) % p_);
  }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((a * b) % p_);
  }
  Residue neg(Residue a) const noexcept {
    return static_cast<Residue>((p_ - a) % p_);
  }

  /// Multiplicative inverse of a non-zero residue (Fermat).
  Residue inv(Residue a) const {
    if (a == 0) throw InvalidArgument("inverse of zero in F_p");
    int result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Residue>(result);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  int p_;
};

/// Row-major matrix of residues mod p.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  /// Entries are reduced mod p. `cols` is only consulted when `rows` is empty.
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<long long>>& rows,
                          std::size_t cols = 0) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw InvalidArgument("ragged matrix: row " + std::to_string(r) +
                              " has " + std::to_string(rows[r].size()) +
                              " entries, expected " + std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  static Matrix identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Residue>& entries() const noexcept { return entries_; }

  Residue operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, long long value) {
    entries_[r * cols_ + c] = field_.reduce(value);
  }

  std::span<const Residue> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Residue x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    return t;
  }

  /// Vertical concatenation; column counts must agree.
  Matrix stacked(const Matrix& below) const {
    if (below.cols_ != cols_ || !(below.field_ == field_)) {
      throw InvalidArgument("cannot stack matrices of different shape or field");
    }
    Matrix out(field_, rows_ + below.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
    std::copy(below.entries_.begin(), below.entries_.end(),
              out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
    return out;
  }

  std::vector<std::vector<long long>> to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw InvalidArgument("matrix product shape mismatch: " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  const PrimeField& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      long long acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

/// Image of a single vector under `m` (m * x).
inline std::vector<Residue> apply_to_vector(const Matrix& m,
                                            std::span<const Residue> x) {
  std::vector<Residue> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    long long acc = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) acc += m(i, k) * x[k];
    out[i] = m.field().reduce(acc);
  }
  return out;
}

/// Reduced row echelon form. Zero rows are kept, at the bottom.
inline Matrix rref(Matrix m) {
  const PrimeField f = m.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      auto a = m.row(pivot);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Residue scale = f.inv(m(lead, c));
    for (auto& x : m.row(lead)) x = f.mul(x, scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Residue factor = m(r, c);
      auto target = m.row(r);
      auto source = m.row(lead);
      for (std::size_t k = c; k < m.cols(); ++k) {
        target[k] = f.sub(target[k], f.mul(factor, source[k]));
      }
    }
    ++lead;
  }
  return m;
}

inline std::size_t rank(const Matrix& m) {
  const Matrix r = rref(m);
  std::size_t k = 0;
  while (k < r.rows() && !std::all_of(r.row(k).begin(), r.row(k).end(),
                                      [](Residue x) { return x == 0; })) {
    ++k;
  }
  return k;
}

/// rref with the zero rows dropped.
inline Matrix row_basis(const Matrix& m) {
  const Matrix r = rref(m);
  const std::size_t k = rank(r);
  Matrix out(m.field(), k, m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    std::copy(r.row(i).begin(), r.row(i).end(), out.row(i).begin());
  }
  return out;
}

/// A subspace of F_p^n held by its canonical RREF basis.
class Subspace {
 public:
  /// Row span of `generators`; the ambient dimension is generators.cols().
  static Subspace span(const Matrix& generators) {
    return Subspace(row_basis(generators));
  }

  static Subspace zero(PrimeField field, std::size_t ambient) {
    return Subspace(Matrix(field, 0, ambient));
  }

  static Subspace full(PrimeField field, std::size_t ambient) {
    return Subspace(Matrix::identity(field, ambient));
  }

  /// Wraps a basis that is already in canonical RREF with full row rank.
  static Subspace from_canonical_basis(Matrix basis) {
    if (!(row_basis(basis) == basis)) {
      throw InvalidArgument("basis is not in canonical reduced row echelon form");
    }
    return Subspace(std::move(basis));
  }

  const PrimeField& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  /// x minus its projection along the basis rows onto the pivot coordinates;
  /// zero iff x lies in the subspace.
  std::vector<Residue> reduce(std::span<const Residue> x) const {
    std::vector<Residue> out(x.begin(), x.end());
    const PrimeField f = field();
    for (std::size_t j = 0; j < dim(); ++j) {
      const Residue factor = out[pivots_[j]];
      if (factor == 0) continue;
      auto row = basis_.row(j);
      for (std::size_t c = 0; c < out.size(); ++c) {
        out[c] = f.sub(out[c], f.mul(factor, row[c]));
      }
    }
    return out;
  }

  bool contains_vector(std::span<const Residue> x) const {
    const auto r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](Residue v) { return v == 0; });
  }

  /// Coordinates of a member vector in the RREF basis (its pivot entries).
  std::vector<Residue> coordinates(std::span<const Residue> x) const {
    std::vector<Residue> out(dim());
    for (std::size_t j = 0; j < dim(); ++j) out[j] = x[pivots_[j]];
    return out;
  }

  /// Columns that are not pivots, in increasing order.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t j = 0;
    for (std::size_t c = 0; c < ambient(); ++c) {
      if (j < pivots_.size() && pivots_[j] == c) {
        ++j;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

  /// Canonical order: dimension, then lexicographic on the RREF entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.field().p() <=> b.field().p(); c != 0) return c;
    if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    const auto& x = a.basis_.entries();
    const auto& y = b.basis_.entries();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {
    pivots_.reserve(basis_.rows());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      std::size_t c = 0;
      while (basis_(r, c) == 0) ++c;
      pivots_.push_back(c);
    }
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

inline void require_compatible(const Subspace& a, const Subspace& b, const char* op) {
  if (!(a.field() == b.field()) || a.ambient() != b.ambient()) {
    throw InvalidArgument(std::string(op) + ": subspaces live in different spaces (F_" +
                          std::to_string(a.field().p()) + "^" + std::to_string(a.ambient()) +
                          " vs F_" + std::to_string(b.field().p()) + "^" +
                          std::to_string(b.ambient()) + ")");
  }
}

}  // namespace detail

/// Null space {x : m x = 0} inside F_p^{cols}.
inline Subspace kernel(const Matrix& m) {
  const Matrix r = row_basis(m);
  const Subspace row_space = Subspace::from_canonical_basis(r);
  const auto& piv = row_space.pivots();
  const auto free = row_space.free_columns();
  const PrimeField f = m.field();
  Matrix gens(f, free.size(), m.cols());
  for (std::size_t i = 0; i < free.size(); ++i) {
    gens.set(i, free[i], 1);
    for (std::size_t j = 0; j < piv.size(); ++j) {
      gens.set(i, piv[j], f.neg(r(j, free[i])));
    }
  }
  return Subspace::span(gens);
}

/// Column space inside F_p^{rows}.
inline Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  detail::require_compatible(a, b, "subspace_sum");
  return Subspace::span(a.basis().stacked(b.basis()));
}

/// Zassenhaus: reduce [[A, A], [B, 0]]; rows whose left half vanishes span
/// the intersection in their right half.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  detail::require_compatible(a, b, "subspace_intersect");
  const std::size_t n = a.ambient();
  const PrimeField f = a.field();
  Matrix z(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      z.set(i, c, a.basis()(i, c));
      z.set(i, n + c, a.basis()(i, c));
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t c = 0; c < n; ++c) z.set(a.dim() + i, c, b.basis()(i, c));
  }
  const Matrix r = rref(z);
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    auto row = r.row(i);
    if (std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n),
                    [](Residue x) { return x != 0; })) {
      continue;
    }
    rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(Matrix::from_rows(f, rows, n));
}

/// True iff b is a subset of a.
inline bool contains(const Subspace& a, const Subspace& b) {
  detail::require_compatible(a, b, "contains");
  if (b.dim() > a.dim()) return false;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!a.contains_vector(b.basis().row(i))) return false;
  }
  return true;
}

/// Image m(s) of a subspace s of F_p^{m.cols()}.
inline Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient() || !(m.field() == s.field())) {
    throw InvalidArgument("apply: matrix with " + std::to_string(m.cols()) +
                          " columns cannot act on F_p^" + std::to_string(s.ambient()));
  }
  return Subspace::span(s.basis() * m.transpose());
}

/// Exact q-binomial coefficient [n choose k]_p.
inline Integer gaussian_binomial(std::size_t n, std::size_t k, int p) {
  if (k > n) {
    throw InvalidArgument("gaussian_binomial: k=" + std::to_string(k) + " > n=" +
                          std::to_string(n));
  }
  const Integer q = p;
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(q, static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

/// Number of subspaces of F_p^n of any dimension.
inline Integer count_subspaces(std::size_t n, int p) {
  Integer total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, p);
  return total;
}

namespace detail {

// All dimension-k subspaces, generated by walking pivot patterns and filling
// the free entries of the RREF matrix.
inline void enumerate_dimension(std::size_t n, PrimeField field, std::size_t k,
                                std::vector<Subspace>& out) {
  const std::size_t first = out.size();
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = piv[r] + 1; c < n; ++c) {
        if (!std::binary_search(piv.begin(), piv.end(), c)) slots.emplace_back(r, c);
      }
    }
    std::vector<int> digits(slots.size(), 0);
    while (true) {
      Matrix m(field, k, n);
      for (std::size_t r = 0; r < k; ++r) m.set(r, piv[r], 1);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        m.set(slots[s].first, slots[s].second, digits[s]);
      }
      out.push_back(Subspace::from_canonical_basis(std::move(m)));
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == field.p()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    // next k-combination of {0..n-1}
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

}  // namespace detail

/// Every subspace of F_p^n of dimension k (all dimensions when k is empty),
/// each exactly once, ordered by dimension then by RREF entries.
inline std::vector<Subspace> enumerate_subspaces(std::size_t n, PrimeField field,
                                                 std::optional<std::size_t> k = std::nullopt) {
  if (k && *k > n) {
    throw InvalidArgument("enumerate_subspaces: dimension " + std::to_string(*k) +
                          " exceeds ambient " + std::to_string(n));
  }
  std::vector<Subspace> out;
  const std::size_t lo = k ? *k : 0;
  const std::size_t hi = k ? *k : n;
  for (std::size_t d = lo; d <= hi; ++d) detail::enumerate_dimension(n, field, d, out);
  return out;
}

}  // namespace qhn
