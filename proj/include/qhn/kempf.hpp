#pragma once

// Filtration graphs, the function mu_v(G) = (G, v) / |G| on the closed cone
// of non-decreasing vectors, its maximizer (the weighted isotonic projection,
// read off as the least concave majorant of the cumulative graph), and the
// exhaustive search for the weighted filtration maximizing the Kempf function.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhn/error.hpp"
#include "qhn/quiver.hpp"
#include "qhn/rational.hpp"

namespace qhn {

/// Weights b^1..b^{t+1} (strictly positive) and values v_1..v_{t+1} with
/// sum b^i v_i = 0.
class FiltrationGraph {
 public:
  FiltrationGraph(std::vector<Rational> weights, std::vector<Rational> values)
      : weights_(std::move(weights)), values_(std::move(values)) {
    if (weights_.empty() || weights_.size() != values_.size()) {
      throw InvalidArgument("filtration graph needs equally many (non-zero) weights and values");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (weights_[i] <= 0) throw InvalidArgument("filtration graph weight must be positive");
      total += weights_[i] * values_[i];
    }
    if (total != 0) {
      throw InvalidArgument("filtration graph violates sum b^i v_i = 0 (sum is " +
                            to_string(total) + ")");
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  /// b_0 = 0, b_i = b^1 + ... + b^i.
  std::vector<Rational> cumulative_weights() const {
    std::vector<Rational> out{0};
    for (const auto& b : weights_) out.push_back(out.back() + b);
    return out;
  }

  /// w_0 = 0, w_i = -(b^1 v_1 + ... + b^i v_i); w_{t+1} = 0.
  std::vector<Rational> heights() const {
    std::vector<Rational> out{0};
    for (std::size_t i = 0; i < size(); ++i) out.push_back(out.back() - weights_[i] * values_[i]);
    return out;
  }

  bool strictly_increasing() const {
    for (std::size_t i = 0; i + 1 < size(); ++i) {
      if (!(values_[i] < values_[i + 1])) return false;
    }
    return true;
  }

  friend bool operator==(const FiltrationGraph&, const FiltrationGraph&) = default;

 private:
  std::vector<Rational> weights_;
  std::vector<Rational> values_;
};

/// A point of the closed cone G_1 <= ... <= G_{t+1}.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> gamma) : gamma_(std::move(gamma)) {
    for (std::size_t i = 0; i + 1 < gamma_.size(); ++i) {
      if (gamma_[i] > gamma_[i + 1]) throw InvalidArgument("weight vector is not non-decreasing");
    }
  }

  static WeightVector zero(std::size_t n) { return WeightVector(std::vector<Rational>(n, 0)); }

  std::size_t size() const noexcept { return gamma_.size(); }
  const Rational& operator[](std::size_t i) const { return gamma_[i]; }
  const std::vector<Rational>& values() const noexcept { return gamma_; }

  bool is_zero() const {
    return std::all_of(gamma_.begin(), gamma_.end(), [](const Rational& g) { return g == 0; });
  }

  bool is_strict() const {
    for (std::size_t i = 0; i + 1 < gamma_.size(); ++i) {
      if (!(gamma_[i] < gamma_[i + 1])) return false;
    }
    return true;
  }

  WeightVector scaled(const Rational& c) const {
    if (c <= 0) throw InvalidArgument("weight vectors may only be scaled by positive factors");
    std::vector<Rational> out = gamma_;
    for (auto& g : out) g *= c;
    return WeightVector(std::move(out));
  }

  /// The primitive integer vector on the same ray.
  WeightVector normalized() const {
    if (is_zero()) return *this;
    Integer lcm = 1, gcd = 0;
    for (const auto& g : gamma_) lcm = boost::multiprecision::lcm(lcm, denominator_of(g));
    for (const auto& g : gamma_) {
      gcd = boost::multiprecision::gcd(gcd, boost::multiprecision::abs(numerator_of(g) * (lcm / denominator_of(g))));
    }
    return scaled(Rational(lcm, gcd));
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> gamma_;
};

/// The real number sign * sqrt(square).
struct ExactScore {
  int sign = 0;
  Rational square = 0;

  static ExactScore zero() { return {}; }

  /// numerator / sqrt(norm_squared), norm_squared > 0.
  static ExactScore ratio(const Rational& numerator, const Rational& norm_squared) {
    if (norm_squared <= 0) throw InvalidArgument("score with non-positive norm");
    return ExactScore{numerator.sign(), numerator * numerator / norm_squared};
  }

  friend bool operator==(const ExactScore& a, const ExactScore& b) {
    return a.sign == b.sign && a.square == b.square;
  }

  friend std::strong_ordering operator<=>(const ExactScore& a, const ExactScore& b) {
    if (a.sign != b.sign) return a.sign <=> b.sign;
    if (a.square == b.square) return std::strong_ordering::equal;
    const bool larger_square = a.square > b.square;
    if (a.sign >= 0) return larger_square ? std::strong_ordering::greater : std::strong_ordering::less;
    return larger_square ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

/// A maximal run [first, last] of indices pooled to one common value
/// mass / weight.
template <class Scalar>
struct Pool {
  Scalar mass;
  Scalar weight;
  std::size_t first;
  std::size_t last;
};

/// Weighted pool-adjacent-violators on values mass_i / weight_i (weights
/// positive): pools merge while their means decrease, so the pooled means are
/// non-decreasing. Means are compared by cross-multiplication, which keeps the
/// routine exact for integer scalars.
template <class Scalar>
std::vector<Pool<Scalar>> pool_adjacent_violators(std::span<const Scalar> mass,
                                                  std::span<const Scalar> weight) {
  std::vector<Pool<Scalar>> pools;
  pools.reserve(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i) {
    pools.push_back({mass[i], weight[i], i, i});
    while (pools.size() > 1) {
      const auto& cur = pools.back();
      const auto& prev = pools[pools.size() - 2];
      if (!(prev.mass * cur.weight > cur.mass * prev.weight)) break;
      Pool<Scalar> merged{prev.mass + cur.mass, prev.weight + cur.weight, prev.first, cur.last};
      pools.pop_back();
      pools.back() = std::move(merged);
    }
  }
  return pools;
}

/// mu_v(G) = (G, v) / |G| in the b-weighted inner product.
inline ExactScore mu_v(const WeightVector& gamma, const FiltrationGraph& g) {
  if (gamma.size() != g.size()) throw InvalidArgument("mu_v: length mismatch");
  if (gamma.is_zero()) throw InvalidArgument("mu_v: zero weight vector");
  Rational pairing = 0, norm = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    pairing += g.weights()[i] * gamma[i] * g.values()[i];
    norm += g.weights()[i] * gamma[i] * gamma[i];
  }
  return ExactScore::ratio(pairing, norm);
}

/// Slopes (negated) of the least concave majorant of the points (b_i, w_i),
/// i.e. the b-weighted projection of v onto the non-decreasing cone. Returns
/// the all-zero vector when the majorant is the flat line, in which case no
/// non-zero point of the cone pairs positively with v.
inline WeightVector convex_envelope(const FiltrationGraph& g) {
  std::vector<Rational> mass(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) mass[i] = g.weights()[i] * g.values()[i];
  const auto pools = pool_adjacent_violators<Rational>(mass, g.weights());
  std::vector<Rational> gamma(g.size());
  for (const auto& pool : pools) {
    const Rational mean = pool.mass / pool.weight;
    for (std::size_t i = pool.first; i <= pool.last; ++i) gamma[i] = mean;
  }
  return WeightVector(std::move(gamma));
}

/// Heights of the envelope: w~_0 = 0, w~_i = -(b^1 G_1 + ... + b^i G_i).
inline std::vector<Rational> envelope_heights(const FiltrationGraph& g, const WeightVector& gamma) {
  std::vector<Rational> out{0};
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(out.back() - g.weights()[i] * gamma[i]);
  return out;
}

/// b^i = sigma(M^i), v_i = Theta(M) - sigma(M) Theta(M^i) / sigma(M^i).
inline FiltrationGraph graph_of(const Filtration& f, const StabilityParams& params) {
  if (f.steps.empty()) throw InvalidArgument("graph_of: empty filtration");
  const DimensionVector whole = f.steps.back().dims();
  const long long theta_m = theta_of(whole, params);
  const long long sigma_m = sigma_of(whole, params);
  std::vector<Rational> b, v;
  for (const auto& d : f.quotient_dims()) {
    const long long s = sigma_of(d, params);
    if (s <= 0) throw Error("graph_of: quotient with non-positive sigma");
    b.emplace_back(s);
    v.push_back(Rational(theta_m) - Rational(sigma_m * theta_of(d, params), s));
  }
  return FiltrationGraph(std::move(b), std::move(v));
}

/// Theta(d) sigma_v - sigma(d) Theta_v per vertex; pairs to zero with d.
inline std::vector<long long> character_exponents(const DimensionVector& d,
                                                  const StabilityParams& params) {
  const long long t = theta_of(d, params), s = sigma_of(d, params);
  std::vector<long long> out(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) out[v] = t * params.sigma()[v] - s * params.theta()[v];
  return out;
}

namespace detail {
inline void require_weights(const Filtration& f, const WeightVector& gamma, const char* op) {
  if (gamma.size() != f.steps.size()) {
    throw InvalidArgument(std::string(op) + ": " + std::to_string(gamma.size()) +
                          " weights for a filtration of length " + std::to_string(f.steps.size()));
  }
}
}  // namespace detail

/// sum_i G_i [Theta(M) sigma(M^i) - sigma(M) Theta(M^i)].
inline Rational mu_chi(const Filtration& f, const WeightVector& gamma, const StabilityParams& params) {
  detail::require_weights(f, gamma, "mu_chi");
  const DimensionVector whole = f.steps.back().dims();
  const long long theta_m = theta_of(whole, params), sigma_m = sigma_of(whole, params);
  const auto quotients = f.quotient_dims();
  Rational total = 0;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    total += gamma[i] * (theta_m * sigma_of(quotients[i], params) -
                         sigma_m * theta_of(quotients[i], params));
  }
  return total;
}

/// The same pairing organised by vertex:
/// sum_v (Theta(M) sigma_v - sigma(M) Theta_v) * sum_i G_i dim M^i_v.
inline Rational mu_chi_per_vertex(const Filtration& f, const WeightVector& gamma,
                                  const StabilityParams& params) {
  detail::require_weights(f, gamma, "mu_chi_per_vertex");
  const auto exponents = character_exponents(f.steps.back().dims(), params);
  const auto quotients = f.quotient_dims();
  Rational total = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    Rational weighted_dim = 0;
    for (std::size_t i = 0; i < quotients.size(); ++i) weighted_dim += gamma[i] * quotients[i][v];
    total += exponents[v] * weighted_dim;
  }
  return total;
}

/// K(M., G) = mu_chi / sqrt(sum_i sigma(M^i) G_i^2).
inline ExactScore kempf_function(const Filtration& f, const WeightVector& gamma,
                                 const StabilityParams& params) {
  detail::require_weights(f, gamma, "kempf_function");
  if (gamma.is_zero()) throw InvalidArgument("kempf_function: zero weight vector");
  const auto quotients = f.quotient_dims();
  Rational norm = 0;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    norm += sigma_of(quotients[i], params) * gamma[i] * gamma[i];
  }
  const ExactScore score = ExactScore::ratio(mu_chi(f, gamma, params), norm);
#ifndef NDEBUG
  if (!(score == mu_v(gamma, graph_of(f, params)))) {
    throw Error("kempf_function disagrees with mu_v on the filtration graph");
  }
#endif
  return score;
}

struct OptimalWeights {
  WeightVector weights;  // zero vector when no positive witness exists
  ExactScore score;
};

inline OptimalWeights optimal_weights(const Filtration& f, const StabilityParams& params) {
  const FiltrationGraph g = graph_of(f, params);
  WeightVector gamma = convex_envelope(g);
  ExactScore score = gamma.is_zero() ? ExactScore::zero() : mu_v(gamma, g);
  return {std::move(gamma), score};
}

struct KempfOptions {
  EnumerationOptions enumeration;
  /// Only explore chains whose quotient slopes strictly decrease (the only
  /// shape a maximizer can have). Skips the coarsening cross-check.
  bool heuristic_prune = false;
};

struct KempfResult {
  Filtration filtration;
  WeightVector weights;  // primitive integer representative
  ExactScore score;
  FiltrationGraph graph;
  std::uint64_t chains_scored = 0;
};

/// The subrepresentation lattice with its strict-containment relation.
struct SubrepLattice {
  std::vector<Subrepresentation> elements;  // canonical order: zero first, whole last
  std::vector<std::vector<std::size_t>> above;  // indices strictly containing each element

  static SubrepLattice build(const Representation& m, const EnumerationOptions& options) {
    SubrepLattice lattice;
    lattice.elements = enumerate_subreps(m, options);
    const std::size_t n = lattice.elements.size();
    std::vector<DimensionVector> dims;
    for (const auto& s : lattice.elements) dims.push_back(s.dims());
    lattice.above.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        bool smaller = true;
        for (std::size_t v = 0; v < dims[i].size() && smaller; ++v) smaller = dims[i][v] <= dims[j][v];
        if (smaller && dims[i] != dims[j] &&
            subrep_contains(lattice.elements[j], lattice.elements[i])) {
          lattice.above[i].push_back(j);
        }
      }
    }
    return lattice;
  }

  std::size_t top() const { return elements.size() - 1; }
};

namespace detail {

// Integer data of one chain: quotient Theta and sigma per step.
struct ChainScorer {
  long long theta_m;
  long long sigma_m;
  std::vector<long long> theta_q;
  std::vector<long long> sigma_q;

  // score^2 of the optimal weights; 0 when the envelope is flat.
  Rational score_square(bool& strict) const {
    std::vector<__int128> mass(theta_q.size()), weight(theta_q.size());
    for (std::size_t i = 0; i < theta_q.size(); ++i) {
      mass[i] = static_cast<__int128>(theta_m) * sigma_q[i] - static_cast<__int128>(sigma_m) * theta_q[i];
      weight[i] = sigma_q[i];
    }
    const auto pools = pool_adjacent_violators<__int128>(mass, weight);
    strict = pools.size() == mass.size();
    for (std::size_t k = 0; strict && k + 1 < pools.size(); ++k) {
      // equal neighbouring means also collapse G
      strict = pools[k].mass * pools[k + 1].weight < pools[k + 1].mass * pools[k].weight;
    }
    Rational total = 0;
    for (const auto& pool : pools) {
      const auto m = static_cast<long long>(pool.mass);
      total += Rational(Integer(m) * m, static_cast<long long>(pool.weight));
    }
    return total;
  }
};

inline Filtration chain_filtration(const SubrepLattice& lattice, const std::vector<std::size_t>& chain) {
  Filtration f;
  for (std::size_t idx : chain) f.steps.push_back(lattice.elements[idx]);
  return f;
}

// Drops M_i whenever G_i = G_{i+1}.
inline Filtration coarsen(const Filtration& f, const WeightVector& gamma) {
  Filtration out;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    if (i + 1 < f.steps.size() && gamma[i] == gamma[i + 1]) continue;
    out.steps.push_back(f.steps[i]);
  }
  return out;
}

// Depth-first walk over chains 0 < M_1 < ... < M_{t+1} = M. `visit` returns
// false to stop the walk.
template <class Visit>
void for_each_chain(const SubrepLattice& lattice, const StabilityParams& params, bool prune,
                    Visit&& visit) {
  const std::size_t top = lattice.top();
  std::vector<DimensionVector> dims;
  for (const auto& s : lattice.elements) dims.push_back(s.dims());
  ChainScorer scorer{theta_of(dims[top], params), sigma_of(dims[top], params), {}, {}};
  std::vector<std::size_t> chain;
  bool stop = false;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t next : lattice.above[from]) {
      if (stop) return;
      const DimensionVector q = dims[next] - dims[from];
      const long long tq = theta_of(q, params), sq = sigma_of(q, params);
      if (prune && !scorer.theta_q.empty()) {
        // quotient slopes must strictly decrease
        const __int128 lhs = static_cast<__int128>(scorer.theta_q.back()) * sq;
        const __int128 rhs = static_cast<__int128>(tq) * scorer.sigma_q.back();
        if (!(lhs > rhs)) continue;
      }
      chain.push_back(next);
      scorer.theta_q.push_back(tq);
      scorer.sigma_q.push_back(sq);
      if (next == top) {
        if (!visit(chain, scorer)) stop = true;
      } else {
        self(self, next);
      }
      chain.pop_back();
      scorer.theta_q.pop_back();
      scorer.sigma_q.pop_back();
    }
  };
  extend(extend, 0);
}

}  // namespace detail

/// Decides semistability through the numerical criterion alone: M is
/// semistable iff no chain admits weights with positive Kempf function.
inline bool kempf_semistability(const Representation& m, const StabilityParams& params,
                                const KempfOptions& options = {}) {
  detail::require_nonzero(m, "kempf_semistability");
  detail::require_params(m, params);
  const SubrepLattice lattice = SubrepLattice::build(m, options.enumeration);
  bool semistable = true;
  detail::for_each_chain(lattice, params, options.heuristic_prune,
                         [&](const std::vector<std::size_t>&, const detail::ChainScorer& s) {
                           bool strict = false;
                           if (s.score_square(strict) > 0) semistable = false;
                           return semistable;
                         });
  return semistable;
}

/// The weighted filtration maximizing the Kempf function over every chain of
/// subrepresentations ending at M. Requires M unstable.
inline KempfResult kempf_filtration(const Representation& m, const StabilityParams& params,
                                    const KempfOptions& options = {}) {
  detail::require_nonzero(m, "kempf_filtration");
  if (is_semistable(m, params, options.enumeration)) {
    throw InvalidArgument("kempf_filtration: representation is semistable, no Kempf filtration");
  }
  const SubrepLattice lattice = SubrepLattice::build(m, options.enumeration);

  Rational best = 0;
  std::vector<std::vector<std::size_t>> strict_best;
  std::vector<std::vector<std::size_t>> collapsed_best;
  std::uint64_t scored = 0;
  detail::for_each_chain(lattice, params, options.heuristic_prune,
                         [&](const std::vector<std::size_t>& chain, const detail::ChainScorer& s) {
                           ++scored;
                           bool strict = false;
                           const Rational sq = s.score_square(strict);
                           if (sq <= 0 || sq < best) return true;
                           if (sq > best) {
                             best = sq;
                             strict_best.clear();
                             collapsed_best.clear();
                           }
                           (strict ? strict_best : collapsed_best).push_back(chain);
                           return true;
                         });

  if (strict_best.empty()) {
    throw TheoremContradiction("no chain with strictly increasing optimal weights attains the "
                               "maximal Kempf value");
  }
  if (strict_best.size() > 1) {
    throw TheoremContradiction("Kempf maximizer is not unique: " + std::to_string(strict_best.size()) +
                               " chains with strictly increasing weights attain score^2 = " +
                               to_string(best));
  }
  Filtration winner = detail::chain_filtration(lattice, strict_best.front());
  for (const auto& chain : collapsed_best) {
    const Filtration f = detail::chain_filtration(lattice, chain);
    if (!(detail::coarsen(f, optimal_weights(f, params).weights) == winner)) {
      throw TheoremContradiction("a maximizing chain with collapsed weights does not coarsen to "
                                 "the strict Kempf maximizer");
    }
  }

  OptimalWeights opt = optimal_weights(winner, params);
  if (opt.score.sign <= 0 || opt.score.square != best || !opt.weights.is_strict()) {
    throw Error("kempf_filtration: envelope recomputation disagrees with the chain search");
  }
  FiltrationGraph graph = graph_of(winner, params);
  return KempfResult{std::move(winner), opt.weights.normalized(), opt.score, std::move(graph), scored};
}

struct RefinementViolation {
  std::size_t position;  // W is inserted between M_{position} and M_{position+1} (M_0 = 0)
  Subrepresentation inserted;
  std::string reason;
};

/// For every W strictly between consecutive steps of `result.filtration`:
/// the new value v'(W / M_i) is at least v(M_{i+1} / M_i), and the refined
/// chain never scores above the original.
inline std::vector<RefinementViolation> refinement_check(const Representation& m,
                                                         const StabilityParams& params,
                                                         const KempfResult& result,
                                                         const EnumerationOptions& options = {}) {
  std::vector<RefinementViolation> out;
  const auto subs = enumerate_subreps(m, options);
  const Filtration& f = result.filtration;
  const FiltrationGraph base = graph_of(f, params);
  const Subrepresentation zero = zero_subrep(m);
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const Subrepresentation& lower = i == 0 ? zero : f.steps[i - 1];
    const Subrepresentation& upper = f.steps[i];
    for (const auto& w : subs) {
      if (w == lower || w == upper || !subrep_contains(w, lower) || !subrep_contains(upper, w)) continue;
      Filtration refined;
      refined.steps.insert(refined.steps.end(), f.steps.begin(), f.steps.begin() + static_cast<std::ptrdiff_t>(i));
      refined.steps.push_back(w);
      refined.steps.insert(refined.steps.end(), f.steps.begin() + static_cast<std::ptrdiff_t>(i), f.steps.end());
      const FiltrationGraph g = graph_of(refined, params);
      if (g.values()[i] < base.values()[i]) {
        out.push_back({i, w, "v' = " + to_string(g.values()[i]) + " < v = " + to_string(base.values()[i])});
      }
      if (optimal_weights(refined, params).score > result.score) {
        out.push_back({i, w, "refined chain scores above the Kempf filtration"});
      }
    }
  }
  return out;
}

}  // namespace qhn
