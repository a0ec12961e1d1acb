#pragma once

// Kronecker modules V (x) H -> W and their intrinsic slope condition
// dim V' / dim W' <= dim V / dim W, compared with quiver stability for
// Theta = (1, 0), sigma = (1, 1) on the h-arrow Kronecker quiver.

#include <string>
#include <utility>
#include <vector>

#include "qhn/error.hpp"
#include "qhn/linalg.hpp"
#include "qhn/quiver.hpp"

namespace qhn {

class KroneckerModule {
 public:
  /// `maps` are the h components of the multiplication map, each dimW x dimV.
  KroneckerModule(PrimeField field, std::size_t dim_v, std::size_t dim_w, std::vector<Matrix> maps)
      : field_(field), dim_v_(dim_v), dim_w_(dim_w), maps_(std::move(maps)) {
    if (maps_.empty()) throw InvalidArgument("Kronecker module needs h >= 1 component maps");
    for (const auto& m : maps_) {
      if (m.rows() != dim_w_ || m.cols() != dim_v_ || !(m.field() == field_)) {
        throw InvalidArgument("Kronecker component map must be " + std::to_string(dim_w_) + "x" +
                              std::to_string(dim_v_) + " over F_" + std::to_string(field_.p()));
      }
    }
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim_v() const noexcept { return dim_v_; }
  std::size_t dim_w() const noexcept { return dim_w_; }
  std::size_t h() const noexcept { return maps_.size(); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

 private:
  PrimeField field_;
  std::size_t dim_v_;
  std::size_t dim_w_;
  std::vector<Matrix> maps_;
};

struct KroneckerSubmodule {
  Subspace v;
  Subspace w;
  friend bool operator==(const KroneckerSubmodule&, const KroneckerSubmodule&) = default;
};

inline Representation to_quiver_rep(const KroneckerModule& m) {
  return Representation(Quiver::kronecker(m.h()), m.field(),
                        DimensionVector({static_cast<long long>(m.dim_v()),
                                         static_cast<long long>(m.dim_w())}),
                        m.maps());
}

inline KroneckerSubmodule to_submodule(const Subrepresentation& s) {
  return {s.spaces.at(0), s.spaces.at(1)};
}

inline Subrepresentation to_subrep(const KroneckerSubmodule& s) { return {{s.v, s.w}}; }

/// Every (V', W') with each component map sending V' into W'.
inline std::vector<KroneckerSubmodule> enumerate_submodules(const KroneckerModule& m,
                                                            const EnumerationOptions& options = {}) {
  std::vector<KroneckerSubmodule> out;
  for (const auto& s : enumerate_subreps(to_quiver_rep(m), options)) out.push_back(to_submodule(s));
  return out;
}

inline bool is_submodule(const KroneckerModule& m, const KroneckerSubmodule& s) {
  for (const auto& a : m.maps()) {
    if (!contains(s.w, apply(a, s.v))) return false;
  }
  return true;
}

/// dim V' * dim W <= dim V * dim W' for every non-zero submodule. Requires dim W >= 1.
inline bool is_semistable_module(const KroneckerModule& m, const EnumerationOptions& options = {}) {
  if (m.dim_w() == 0) {
    throw InvalidArgument("is_semistable_module requires dim W >= 1");
  }
  const auto dv = static_cast<long long>(m.dim_v()), dw = static_cast<long long>(m.dim_w());
  for (const auto& s : enumerate_submodules(m, options)) {
    if (s.v.is_zero() && s.w.is_zero()) continue;
    if (static_cast<long long>(s.v.dim()) * dw > dv * static_cast<long long>(s.w.dim())) return false;
  }
  return true;
}

/// V'_a in V'_b and W'_b in W'_a.
inline bool is_subordinate(const KroneckerSubmodule& a, const KroneckerSubmodule& b) {
  return contains(b.v, a.v) && contains(a.w, b.w);
}

/// Subordinate to no submodule other than itself.
inline bool is_tight(const KroneckerSubmodule& a, const KroneckerModule& m,
                     const EnumerationOptions& options = {}) {
  if (!is_submodule(m, a)) throw InvalidArgument("is_tight: not a submodule");
  for (const auto& b : enumerate_submodules(m, options)) {
    if (!(b == a) && is_subordinate(a, b)) return false;
  }
  return true;
}

struct EquivalenceReport {
  bool module_semistable;
  bool quiver_semistable;
  bool agree() const noexcept { return module_semistable == quiver_semistable; }
};

inline EquivalenceReport equivalence_check(const KroneckerModule& m,
                                           const EnumerationOptions& options = {}) {
  if (m.dim_v() + m.dim_w() == 0) throw InvalidArgument("equivalence_check: zero module");
  return {is_semistable_module(m, options),
          is_semistable(to_quiver_rep(m), StabilityParams::first_vertex(2), options)};
}

}  // namespace qhn
