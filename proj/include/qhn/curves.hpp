#pragma once

// Closed-form calculators for the curve examples: split bundles on P^1,
// rank 2 tensors and their coverings, and the rank 3 weight optimization.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhn/error.hpp"
#include "qhn/rational.hpp"

namespace qhn {

/// O(a_1)^{b_1} + ... + O(a_s)^{b_s} with a_1 > a_2 > ... > a_s.
class SplitBundle {
 public:
  struct Block {
    long long degree;
    long long multiplicity;
    friend bool operator==(const Block&, const Block&) = default;
  };

  explicit SplitBundle(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InvalidArgument("split bundle needs at least one block");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i].multiplicity < 1) throw InvalidArgument("block multiplicity must be >= 1");
      if (i > 0 && !(blocks_[i - 1].degree > blocks_[i].degree)) {
        throw InvalidArgument("block degrees must be strictly decreasing");
      }
    }
  }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  long long degree() const {
    long long d = 0;
    for (const auto& b : blocks_) d += b.degree * b.multiplicity;
    return d;
  }
  long long rank() const {
    long long r = 0;
    for (const auto& b : blocks_) r += b.multiplicity;
    return r;
  }

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  std::vector<Block> blocks_;
};

/// deg / rk, the average of the degrees counted with multiplicity.
inline Rational p1_slope(const SplitBundle& e) { return Rational(e.degree(), e.rank()); }

/// E_i = O(a_1)^{b_1} + ... + O(a_i)^{b_i}, i = 1..s.
inline std::vector<SplitBundle> p1_hn(const SplitBundle& e) {
  std::vector<SplitBundle> out;
  std::vector<SplitBundle::Block> prefix;
  for (const auto& b : e.blocks()) {
    prefix.push_back(b);
    out.emplace_back(prefix);
  }
  return out;
}

/// Slopes of the quotients E_i / E_{i-1} = O(a_i)^{b_i}.
inline std::vector<Rational> p1_quotient_slopes(const SplitBundle& e) {
  std::vector<Rational> out;
  for (const auto& b : e.blocks()) out.emplace_back(b.degree);
  return out;
}

/// 2 deg L - deg E + tau (s - 2 eps(L)).
inline Rational rank2_value(long long deg_l, long long deg_e, long long s, long long eps_l,
                            const Rational& tau) {
  if (s < 1) throw InvalidArgument("rank2_value: s must be positive");
  if (eps_l < 0 || eps_l > s) throw InvalidArgument("rank2_value: eps(L) outside [0, s]");
  if (tau <= 0) throw InvalidArgument("rank2_value: tau must be positive");
  return Rational(2 * deg_l - deg_e) + tau * (s - 2 * eps_l);
}

struct Rank2Candidate {
  long long deg;
  long long eps;
  friend bool operator==(const Rank2Candidate&, const Rank2Candidate&) = default;
};

struct Rank2Verdict {
  Rank2Candidate best;
  Rational value;
  bool unstable;   // maximal value > 0
  bool ambiguous;  // another distinct candidate attains the same maximum
};

inline Rank2Verdict rank2_best(const std::vector<Rank2Candidate>& candidates, long long deg_e,
                               long long s, const Rational& tau) {
  if (candidates.empty()) throw InvalidArgument("rank2_best: empty candidate list");
  Rank2Verdict r{candidates.front(), rank2_value(candidates.front().deg, deg_e, s,
                                                 candidates.front().eps, tau),
                 false, false};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Rational value = rank2_value(candidates[i].deg, deg_e, s, candidates[i].eps, tau);
    if (value > r.value) {
      r.best = candidates[i];
      r.value = value;
      r.ambiguous = false;
    } else if (value == r.value && !(candidates[i] == r.best)) {
      r.ambiguous = true;
    }
  }
  r.unstable = r.value > 0;
  return r;
}

/// -2 C_0.D - e + tau (s - 2 eps(D)); the covering is unstable iff positive.
inline Rational covering_value(long long c0_dot_d, long long e, long long s, long long eps_d,
                               const Rational& tau) {
  if (s < 1) throw InvalidArgument("covering_value: s must be positive");
  if (eps_d < 0 || eps_d > s) throw InvalidArgument("covering_value: eps(D) outside [0, s]");
  if (tau <= 0) throw InvalidArgument("covering_value: tau must be positive");
  return Rational(-2 * c0_dot_d - e) + tau * (s - 2 * eps_d);
}

struct Rank3Slopes {
  std::array<long long, 3> v;
  Rational tau;
};

enum class Rank3Case { OneThree, TwoTwo, Neither };

inline std::string to_string(Rank3Case c) {
  switch (c) {
    case Rank3Case::OneThree: return "(1,3)";
    case Rank3Case::TwoTwo: return "(2,2)";
    case Rank3Case::Neither: return "neither";
  }
  return "?";
}

struct Rank3Weights {
  Rank3Case label;
  std::array<Rational, 3> x;  // (v1 + tau, v2 - 2 tau, v3 + tau)
  std::array<Rational, 3> y;  // (v1 - 2 tau, v2 + 4 tau, v3 - 2 tau)
  std::optional<std::array<Rational, 3>> gamma;  // normalized to gamma_3 = 1
};

/// Chooses the multi-index from the discriminants v1 + v3 + 2 tau <= 0 and
/// v1 + v3 - 4 tau >= 0 and returns the proportional weight vector.
inline Rank3Weights rank3_weights(const Rank3Slopes& s) {
  const auto [v1, v2, v3] = s.v;
  if (v1 + v2 + v3 != 0) throw InvalidArgument("rank3_weights: v1 + v2 + v3 must be 0");
  if (s.tau <= 0) throw InvalidArgument("rank3_weights: tau must be positive");
  const Rational& tau = s.tau;
  Rank3Weights r{Rank3Case::Neither,
                 {Rational(v1) + tau, Rational(v2) - 2 * tau, Rational(v3) + tau},
                 {Rational(v1) - 2 * tau, Rational(v2) + 4 * tau, Rational(v3) - 2 * tau},
                 std::nullopt};
  const Rational ends = Rational(v1 + v3);
  const std::array<Rational, 3>* chosen = nullptr;
  if (ends + 2 * tau <= 0) {
    r.label = Rank3Case::OneThree;
    chosen = &r.x;
  } else if (ends - 4 * tau >= 0) {
    r.label = Rank3Case::TwoTwo;
    chosen = &r.y;
  }
  if (chosen) {
    const Rational& den = (*chosen)[2];
    if (den == 0) {
      throw InvalidArgument("rank3_weights: degenerate input, third coordinate of the " +
                            to_string(r.label) + " vector vanishes");
    }
    r.gamma = std::array<Rational, 3>{(*chosen)[0] / den, (*chosen)[1] / den, Rational(1)};
  }
  return r;
}

}  // namespace qhn
