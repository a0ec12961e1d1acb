#pragma once

// Quiver representations over F_p, slope stability with respect to a pair of
// linear functions (theta, sigma), and the Harder-Narasimhan filtration.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qhn/error.hpp"
#include "qhn/linalg.hpp"
#include "qhn/rational.hpp"

namespace qhn {

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
        if (vertices_[i] == vertices_[j]) {
          throw InvalidArgument("duplicate vertex '" + vertices_[i] + "'");
        }
      }
    }
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].source >= vertices_.size() || arrows_[a].target >= vertices_.size()) {
        throw InvalidArgument("arrow " + std::to_string(a) + " references an undeclared vertex");
      }
    }
  }

  Quiver(std::vector<std::string> vertices,
         const std::vector<std::pair<std::string, std::string>>& arrows)
      : Quiver(vertices, resolve(vertices, arrows)) {}

  /// v0 -> v1 with `h` parallel arrows.
  static Quiver kronecker(std::size_t h = 1) {
    return Quiver({"v0", "v1"}, std::vector<Arrow>(h, Arrow{0, 1}));
  }

  /// v0 -> v1 -> ... -> v{n-1}.
  static Quiver path(std::size_t n) {
    std::vector<std::string> names;
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    return Quiver(std::move(names), std::move(arrows));
  }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == name) return i;
    }
    throw InvalidArgument("unknown vertex '" + name + "'");
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  static std::vector<Arrow> resolve(const std::vector<std::string>& vertices,
                                    const std::vector<std::pair<std::string, std::string>>& arrows) {
    auto find = [&](const std::string& name) {
      auto it = std::find(vertices.begin(), vertices.end(), name);
      if (it == vertices.end()) {
        throw InvalidArgument("arrow endpoint '" + name + "' is not a declared vertex");
      }
      return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<Arrow> out;
    for (const auto& [s, t] : arrows) out.push_back({find(s), find(t)});
    return out;
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Non-negative integer per vertex, in the quiver's vertex order.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<long long> values) : values_(std::move(values)) {
    for (long long v : values_) {
      if (v < 0) throw InvalidArgument("negative entry in dimension vector");
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  long long operator[](std::size_t i) const { return values_[i]; }
  const std::vector<long long>& values() const noexcept { return values_; }
  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](long long v) { return v == 0; });
  }
  long long total() const { return std::accumulate(values_.begin(), values_.end(), 0LL); }

  friend DimensionVector operator-(const DimensionVector& a, const DimensionVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("dimension vector size mismatch");
    std::vector<long long> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return DimensionVector(std::move(out));
  }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::vector<long long> values_;
};

/// Theta (any integers) and sigma (strictly positive integers), per vertex.
class StabilityParams {
 public:
  StabilityParams(std::vector<long long> theta, std::vector<long long> sigma)
      : theta_(std::move(theta)), sigma_(std::move(sigma)) {
    if (theta_.size() != sigma_.size()) {
      throw InvalidArgument("theta and sigma have different lengths");
    }
    for (long long s : sigma_) {
      if (s < 1) throw InvalidArgument("sigma must be strictly positive at every vertex");
    }
  }

  /// Theta = (1, 0, ..., 0), sigma = (1, ..., 1).
  static StabilityParams first_vertex(std::size_t n) {
    std::vector<long long> theta(n, 0);
    if (n) theta[0] = 1;
    return StabilityParams(std::move(theta), std::vector<long long>(n, 1));
  }

  const std::vector<long long>& theta() const noexcept { return theta_; }
  const std::vector<long long>& sigma() const noexcept { return sigma_; }
  std::size_t size() const noexcept { return theta_.size(); }

  friend bool operator==(const StabilityParams&, const StabilityParams&) = default;

 private:
  std::vector<long long> theta_;
  std::vector<long long> sigma_;
};

namespace detail {
inline void require_size(const DimensionVector& d, const StabilityParams& params) {
  if (d.size() != params.size()) {
    throw InvalidArgument("dimension vector has " + std::to_string(d.size()) +
                          " entries but stability parameters have " +
                          std::to_string(params.size()));
  }
}
}  // namespace detail

inline long long theta_of(const DimensionVector& d, const StabilityParams& params) {
  detail::require_size(d, params);
  long long total = 0;
  for (std::size_t v = 0; v < d.size(); ++v) total += params.theta()[v] * d[v];
  return total;
}

inline long long sigma_of(const DimensionVector& d, const StabilityParams& params) {
  detail::require_size(d, params);
  long long total = 0;
  for (std::size_t v = 0; v < d.size(); ++v) total += params.sigma()[v] * d[v];
  return total;
}

inline Rational slope(const DimensionVector& d, const StabilityParams& params) {
  if (d.is_zero()) throw InvalidArgument("slope of the zero dimension vector is undefined");
  return make_rational(theta_of(d, params), sigma_of(d, params));
}

/// theta' = a*theta + b*sigma with sigma unchanged; a >= 1.
inline StabilityParams reparam_theta(const StabilityParams& params, long long a, long long b) {
  if (a < 1) throw InvalidArgument("reparam_theta requires a >= 1");
  std::vector<long long> theta(params.size());
  for (std::size_t v = 0; v < params.size(); ++v) {
    theta[v] = a * params.theta()[v] + b * params.sigma()[v];
  }
  return StabilityParams(std::move(theta), params.sigma());
}

class Representation {
 public:
  /// maps[a] has shape dims[target(a)] x dims[source(a)].
  Representation(Quiver quiver, PrimeField field, DimensionVector dims, std::vector<Matrix> maps)
      : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != quiver_.vertex_count()) {
      throw InvalidArgument("dimension vector has " + std::to_string(dims_.size()) +
                            " entries for a quiver with " +
                            std::to_string(quiver_.vertex_count()) + " vertices");
    }
    if (maps_.size() != quiver_.arrows().size()) {
      throw InvalidArgument("expected " + std::to_string(quiver_.arrows().size()) +
                            " arrow matrices, got " + std::to_string(maps_.size()));
    }
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      const Arrow& arrow = quiver_.arrows()[a];
      const auto rows = static_cast<std::size_t>(dims_[arrow.target]);
      const auto cols = static_cast<std::size_t>(dims_[arrow.source]);
      if (maps_[a].rows() != rows || maps_[a].cols() != cols) {
        throw InvalidArgument("arrow " + std::to_string(a) + " matrix is " +
                              std::to_string(maps_[a].rows()) + "x" +
                              std::to_string(maps_[a].cols()) + ", expected " +
                              std::to_string(rows) + "x" + std::to_string(cols));
      }
      if (!(maps_[a].field() == field_)) {
        throw InvalidArgument("arrow " + std::to_string(a) + " matrix over a different field");
      }
    }
  }

  const Quiver& quiver() const noexcept { return quiver_; }
  const PrimeField& field() const noexcept { return field_; }
  const DimensionVector& dims() const noexcept { return dims_; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  std::size_t dim_at(std::size_t v) const { return static_cast<std::size_t>(dims_[v]); }
  bool is_zero() const { return dims_.is_zero(); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Quiver quiver_;
  PrimeField field_;
  DimensionVector dims_;
  std::vector<Matrix> maps_;
};

/// One subspace per vertex. Validity (arrow closure) is relative to a parent
/// representation and is checked by is_subrep.
struct Subrepresentation {
  std::vector<Subspace> spaces;

  DimensionVector dims() const {
    std::vector<long long> d;
    d.reserve(spaces.size());
    for (const auto& s : spaces) d.push_back(static_cast<long long>(s.dim()));
    return DimensionVector(std::move(d));
  }

  bool is_zero() const {
    return std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.is_zero(); });
  }

  friend bool operator==(const Subrepresentation&, const Subrepresentation&) = default;

  /// Dimension vector (lexicographic in vertex order), then RREF entries.
  friend std::strong_ordering operator<=>(const Subrepresentation& a,
                                          const Subrepresentation& b) {
    if (auto c = a.dims() <=> b.dims(); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::lexicographical_compare_three_way(a.spaces.begin(), a.spaces.end(),
                                                  b.spaces.begin(), b.spaces.end());
  }
};

inline Subrepresentation zero_subrep(const Representation& m) {
  Subrepresentation s;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
    s.spaces.push_back(Subspace::zero(m.field(), m.dim_at(v)));
  }
  return s;
}

inline Subrepresentation full_subrep(const Representation& m) {
  Subrepresentation s;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
    s.spaces.push_back(Subspace::full(m.field(), m.dim_at(v)));
  }
  return s;
}

/// b is contained in a at every vertex.
inline bool subrep_contains(const Subrepresentation& a, const Subrepresentation& b) {
  if (a.spaces.size() != b.spaces.size()) throw InvalidArgument("subrepresentation size mismatch");
  for (std::size_t v = 0; v < a.spaces.size(); ++v) {
    if (!contains(a.spaces[v], b.spaces[v])) return false;
  }
  return true;
}

/// True iff `spaces` has the right ambients and is closed under every arrow.
inline bool is_subrep(const Representation& m, const Subrepresentation& s) {
  if (s.spaces.size() != m.quiver().vertex_count()) return false;
  for (std::size_t v = 0; v < s.spaces.size(); ++v) {
    if (s.spaces[v].ambient() != m.dim_at(v) || !(s.spaces[v].field() == m.field())) return false;
  }
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& arrow = m.quiver().arrows()[a];
    if (!contains(s.spaces[arrow.target], apply(m.maps()[a], s.spaces[arrow.source]))) {
      return false;
    }
  }
  return true;
}

struct EnumerationOptions {
  std::uint64_t budget = 10'000'000;
};

/// Number of per-vertex subspace tuples an exhaustive search has to visit.
inline Integer candidate_count(const Representation& m) {
  Integer total = 1;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
    total *= count_subspaces(m.dim_at(v), m.field().p());
  }
  return total;
}

inline void check_budget(const Representation& m, const EnumerationOptions& options) {
  const Integer count = candidate_count(m);
  if (count > options.budget) {
    const std::uint64_t shown = count > Integer(UINT64_MAX) ? UINT64_MAX
                                                            : count.convert_to<std::uint64_t>();
    throw BudgetExceeded(shown, options.budget);
  }
}

/// Every subrepresentation (including 0 and M) exactly once, in canonical order.
inline std::vector<Subrepresentation> enumerate_subreps(const Representation& m,
                                                        const EnumerationOptions& options = {}) {
  check_budget(m, options);
  const std::size_t n = m.quiver().vertex_count();
  std::vector<std::vector<Subspace>> choices;
  for (std::size_t v = 0; v < n; ++v) {
    choices.push_back(enumerate_subspaces(m.dim_at(v), m.field()));
  }
  // arrows checked once both endpoints are assigned
  std::vector<std::vector<std::size_t>> ready(n);
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& arrow = m.quiver().arrows()[a];
    ready[std::max(arrow.source, arrow.target)].push_back(a);
  }

  std::vector<Subrepresentation> out;
  Subrepresentation current;
  current.spaces.reserve(n);
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      out.push_back(current);
      return;
    }
    for (const Subspace& s : choices[v]) {
      current.spaces.push_back(s);
      bool closed = true;
      for (std::size_t a : ready[v]) {
        const Arrow& arrow = m.quiver().arrows()[a];
        if (!contains(current.spaces[arrow.target],
                      apply(m.maps()[a], current.spaces[arrow.source]))) {
          closed = false;
          break;
        }
      }
      if (closed) self(self, v + 1);
      current.spaces.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Coordinates of `inner` with respect to the RREF basis of `outer`.
inline Subspace coordinates_in(const Subspace& inner, const Subspace& outer) {
  if (!contains(outer, inner)) throw InvalidArgument("coordinates_in: inner not contained in outer");
  Matrix rows(inner.field(), inner.dim(), outer.dim());
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    const auto coords = outer.coordinates(inner.basis().row(i));
    for (std::size_t j = 0; j < coords.size(); ++j) rows.set(i, j, coords[j]);
  }
  return Subspace::span(rows);
}

/// The subrepresentation `s` viewed as a representation in its own RREF coordinates.
inline Representation restrict_to(const Representation& m, const Subrepresentation& s) {
  if (!is_subrep(m, s)) throw InvalidArgument("restrict_to: not a subrepresentation");
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& arrow = m.quiver().arrows()[a];
    const Subspace& src = s.spaces[arrow.source];
    const Subspace& tgt = s.spaces[arrow.target];
    Matrix r(m.field(), tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const auto image_vec = apply_to_vector(m.maps()[a], src.basis().row(j));
      const auto coords = tgt.coordinates(image_vec);
      for (std::size_t i = 0; i < coords.size(); ++i) r.set(i, j, coords[i]);
    }
    maps.push_back(std::move(r));
  }
  return Representation(m.quiver(), m.field(), s.dims(), std::move(maps));
}

/// Quotient M/S. Coordinates at vertex v are the non-pivot coordinates of
/// S_v's RREF basis; projections[v] maps F_p^{d_v} onto them.
struct Quotient {
  Representation rep;
  std::vector<Matrix> projections;
  Subrepresentation kernel;
};

inline Quotient quotient(const Representation& m, const Subrepresentation& s) {
  if (!is_subrep(m, s)) throw InvalidArgument("quotient: not a subrepresentation");
  const PrimeField f = m.field();
  const std::size_t n = m.quiver().vertex_count();
  std::vector<Matrix> proj;
  std::vector<std::vector<std::size_t>> free(n);
  std::vector<long long> qdims(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Subspace& sv = s.spaces[v];
    free[v] = sv.free_columns();
    Matrix p(f, free[v].size(), m.dim_at(v));
    for (std::size_t r = 0; r < free[v].size(); ++r) {
      p.set(r, free[v][r], 1);
      for (std::size_t j = 0; j < sv.dim(); ++j) {
        p.set(r, sv.pivots()[j], f.neg(sv.basis()(j, free[v][r])));
      }
    }
    qdims[v] = static_cast<long long>(free[v].size());
    proj.push_back(std::move(p));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const Arrow& arrow = m.quiver().arrows()[a];
    const Matrix pm = proj[arrow.target] * m.maps()[a];
    Matrix q(f, free[arrow.target].size(), free[arrow.source].size());
    for (std::size_t c = 0; c < free[arrow.source].size(); ++c) {
      for (std::size_t r = 0; r < q.rows(); ++r) q.set(r, c, pm(r, free[arrow.source][c]));
    }
    maps.push_back(std::move(q));
  }
  return Quotient{Representation(m.quiver(), f, DimensionVector(std::move(qdims)), std::move(maps)),
                  std::move(proj), s};
}

/// Preimage in M of a subrepresentation of the quotient M/S.
inline Subrepresentation preimage(const Quotient& q, const Subrepresentation& u) {
  Subrepresentation out;
  for (std::size_t v = 0; v < u.spaces.size(); ++v) {
    const Subspace& kernel_v = q.kernel.spaces[v];
    const auto free = kernel_v.free_columns();
    const Subspace& uv = u.spaces[v];
    Matrix lifted(uv.field(), uv.dim(), kernel_v.ambient());
    for (std::size_t i = 0; i < uv.dim(); ++i) {
      for (std::size_t r = 0; r < free.size(); ++r) lifted.set(i, free[r], uv.basis()(i, r));
    }
    out.spaces.push_back(subspace_sum(kernel_v, Subspace::span(lifted)));
  }
  return out;
}

/// upper/lower as a representation in its own coordinates.
inline Representation subquotient(const Representation& m, const Subrepresentation& lower,
                                  const Subrepresentation& upper) {
  const Representation r = restrict_to(m, upper);
  Subrepresentation inner;
  for (std::size_t v = 0; v < upper.spaces.size(); ++v) {
    inner.spaces.push_back(coordinates_in(lower.spaces[v], upper.spaces[v]));
  }
  return quotient(r, inner).rep;
}

namespace detail {
inline void require_nonzero(const Representation& m, const char* op) {
  if (m.is_zero()) throw InvalidArgument(std::string(op) + ": zero representation");
}
inline void require_params(const Representation& m, const StabilityParams& params) {
  if (params.size() != m.quiver().vertex_count()) {
    throw InvalidArgument("stability parameters have " + std::to_string(params.size()) +
                          " entries for a quiver with " +
                          std::to_string(m.quiver().vertex_count()) + " vertices");
  }
}
}  // namespace detail

/// slope(S) <= slope(M) for every non-zero subrepresentation S.
inline bool is_semistable(const Representation& m, const StabilityParams& params,
                          const EnumerationOptions& options = {}) {
  detail::require_nonzero(m, "is_semistable");
  detail::require_params(m, params);
  const Rational mu = slope(m.dims(), params);
  for (const auto& s : enumerate_subreps(m, options)) {
    if (!s.is_zero() && slope(s.dims(), params) > mu) return false;
  }
  return true;
}

/// slope(S) < slope(M) for every proper non-zero subrepresentation S.
inline bool is_stable(const Representation& m, const StabilityParams& params,
                      const EnumerationOptions& options = {}) {
  detail::require_nonzero(m, "is_stable");
  detail::require_params(m, params);
  const Rational mu = slope(m.dims(), params);
  const DimensionVector full = m.dims();
  for (const auto& s : enumerate_subreps(m, options)) {
    if (s.is_zero() || s.dims() == full) continue;
    if (slope(s.dims(), params) >= mu) return false;
  }
  return true;
}

/// The non-zero subrepresentation of maximal slope and, among those, maximal
/// sigma. Two distinct candidates would contradict uniqueness and raise.
inline Subrepresentation max_destabilizing(const Representation& m, const StabilityParams& params,
                                           const EnumerationOptions& options = {}) {
  detail::require_nonzero(m, "max_destabilizing");
  detail::require_params(m, params);
  const auto subs = enumerate_subreps(m, options);
  const Subrepresentation* best = nullptr;
  Rational best_slope;
  long long best_sigma = 0;
  std::size_t ties = 0;
  for (const auto& s : subs) {
    if (s.is_zero()) continue;
    const auto d = s.dims();
    const Rational mu = slope(d, params);
    const long long sg = sigma_of(d, params);
    if (best == nullptr || mu > best_slope || (mu == best_slope && sg > best_sigma)) {
      best = &s;
      best_slope = mu;
      best_sigma = sg;
      ties = 1;
    } else if (mu == best_slope && sg == best_sigma) {
      ++ties;
    }
  }
  if (ties > 1) {
    throw TheoremContradiction("maximal destabilizing subrepresentation is not unique (" +
                               std::to_string(ties) + " candidates of slope " +
                               to_string(best_slope) + ")");
  }
  return *best;
}

/// 0 = M_0 < M_1 < ... < M_{t+1} = M; `steps` holds M_1 .. M_{t+1}.
struct Filtration {
  std::vector<Subrepresentation> steps;

  std::size_t length() const noexcept { return steps.size(); }

  /// Dimension vectors of the quotients M_i / M_{i-1}.
  std::vector<DimensionVector> quotient_dims() const {
    std::vector<DimensionVector> out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      out.push_back(i == 0 ? steps[0].dims() : steps[i].dims() - steps[i - 1].dims());
    }
    return out;
  }

  friend bool operator==(const Filtration&, const Filtration&) = default;
};

inline void validate_filtration(const Representation& m, const Filtration& f) {
  if (f.steps.empty()) throw InvalidArgument("filtration has no steps");
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    if (!is_subrep(m, f.steps[i])) {
      throw InvalidArgument("filtration step " + std::to_string(i + 1) +
                            " is not a subrepresentation");
    }
    const Subrepresentation& prev = i == 0 ? zero_subrep(m) : f.steps[i - 1];
    if (!subrep_contains(f.steps[i], prev) || f.steps[i] == prev) {
      throw InvalidArgument("filtration is not strictly increasing at step " +
                            std::to_string(i + 1));
    }
  }
  if (!(f.steps.back() == full_subrep(m))) {
    throw InvalidArgument("filtration does not end at the whole representation");
  }
}

/// Harder-Narasimhan filtration: maximal destabilizing subrepresentation,
/// then recursion on the quotient, lifted back by preimages.
inline Filtration hn_filtration(const Representation& m, const StabilityParams& params,
                                const EnumerationOptions& options = {}) {
  detail::require_nonzero(m, "hn_filtration");
  const Subrepresentation first = max_destabilizing(m, params, options);
  const Subrepresentation whole = full_subrep(m);
  if (first == whole) return Filtration{{whole}};
  const Quotient q = quotient(m, first);
  const Filtration rest = hn_filtration(q.rep, params, options);
  Filtration out{{first}};
  for (const auto& step : rest.steps) out.steps.push_back(preimage(q, step));
  return out;
}

struct HnReport {
  std::vector<Rational> quotient_slopes;
  std::vector<bool> strictly_descending;  // slope_i > slope_{i+1}, one per adjacent pair
  std::vector<bool> quotient_semistable;

  bool ok() const {
    return std::all_of(strictly_descending.begin(), strictly_descending.end(),
                       [](bool b) { return b; }) &&
           std::all_of(quotient_semistable.begin(), quotient_semistable.end(),
                       [](bool b) { return b; });
  }
};

inline HnReport check_hn_properties(const Representation& m, const Filtration& f,
                                    const StabilityParams& params,
                                    const EnumerationOptions& options = {}) {
  validate_filtration(m, f);
  HnReport report;
  const Subrepresentation zero = zero_subrep(m);
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const Subrepresentation& lower = i == 0 ? zero : f.steps[i - 1];
    const Representation piece = subquotient(m, lower, f.steps[i]);
    report.quotient_slopes.push_back(slope(piece.dims(), params));
    report.quotient_semistable.push_back(is_semistable(piece, params, options));
  }
  for (std::size_t i = 0; i + 1 < report.quotient_slopes.size(); ++i) {
    report.strictly_descending.push_back(report.quotient_slopes[i] > report.quotient_slopes[i + 1]);
  }
  return report;
}

struct SeesawReport {
  Rational sub_slope;
  Rational whole_slope;
  Rational quotient_slope;
  std::vector<std::string> violations;
};

/// For 0 -> X -> Y -> Z -> 0 with X = s, Y = m, Z = m/s: mu(X) < mu(Y) iff
/// mu(X) < mu(Z) iff mu(Y) < mu(Z), and likewise for = and >.
inline SeesawReport seesaw_check(const Representation& m, const Subrepresentation& s,
                                 const StabilityParams& params) {
  if (!is_subrep(m, s)) throw InvalidArgument("seesaw_check: not a subrepresentation");
  if (s.is_zero() || s == full_subrep(m)) {
    throw InvalidArgument("seesaw_check: subrepresentation must be proper and non-zero");
  }
  SeesawReport r;
  const DimensionVector dx = s.dims();
  r.sub_slope = slope(dx, params);
  r.whole_slope = slope(m.dims(), params);
  r.quotient_slope = slope(m.dims() - dx, params);
  auto cmp = [](const Rational& a, const Rational& b) { return a < b ? -1 : (a == b ? 0 : 1); };
  const int xy = cmp(r.sub_slope, r.whole_slope);
  const int xz = cmp(r.sub_slope, r.quotient_slope);
  const int yz = cmp(r.whole_slope, r.quotient_slope);
  if (xy != xz) r.violations.push_back("mu(X) vs mu(Y) disagrees with mu(X) vs mu(Z)");
  if (xz != yz) r.violations.push_back("mu(X) vs mu(Z) disagrees with mu(Y) vs mu(Z)");
  return r;
}

}  // namespace qhn
