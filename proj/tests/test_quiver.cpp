#include <gtest/gtest.h>

#include "qhn/quiver.hpp"
#include "support.hpp"

namespace qhn {
namespace {

const PrimeField F2{2};

Representation kronecker_1x1(int alpha) {
  return Representation(Quiver::kronecker(1), F2, DimensionVector({1, 1}),
                        {Matrix::from_rows(F2, {{alpha}})});
}

Subrepresentation sub(PrimeField f, std::vector<std::vector<std::vector<long long>>> per_vertex,
                      std::vector<std::size_t> ambients) {
  Subrepresentation s;
  for (std::size_t v = 0; v < per_vertex.size(); ++v) {
    s.spaces.push_back(Subspace::span(Matrix::from_rows(f, per_vertex[v], ambients[v])));
  }
  return s;
}

const StabilityParams kFirst = StabilityParams::first_vertex(2);

TEST(Quiver, RejectsBadInput) {
  EXPECT_THROW(Quiver({"a", "a"}, std::vector<Arrow>{}), InvalidArgument);
  EXPECT_THROW(Quiver({"a"}, std::vector<Arrow>{{0, 1}}), InvalidArgument);
  EXPECT_THROW(StabilityParams({1, 0}, {1, 0}), InvalidArgument);
  EXPECT_THROW(Representation(Quiver::kronecker(1), F2, DimensionVector({1, 1}), {Matrix(F2, 2, 1)}),
               InvalidArgument);
}

TEST(ThetaSigma, Examples) {
  EXPECT_EQ(theta_of(DimensionVector({0, 0}), kFirst), 0);
  EXPECT_EQ(theta_of(DimensionVector({3}), StabilityParams({2}, {1})), 6);
  EXPECT_EQ(theta_of(DimensionVector({2, 1}), kFirst), 2);
  EXPECT_EQ(sigma_of(DimensionVector({2, 1}), kFirst), 3);
}

TEST(Slope, Examples) {
  for (long long d = 1; d <= 4; ++d) EXPECT_EQ(slope(DimensionVector({d}), StabilityParams({1}, {1})), 1);
  EXPECT_EQ(slope(DimensionVector({1, 0}), kFirst), 1);
  EXPECT_EQ(slope(DimensionVector({1, 1}), kFirst), Rational(1, 2));
  EXPECT_THROW(slope(DimensionVector({0, 0}), kFirst), InvalidArgument);
}

TEST(IsSubrep, Examples) {
  const Representation m = kronecker_1x1(1);
  EXPECT_TRUE(is_subrep(m, zero_subrep(m)));
  EXPECT_TRUE(is_subrep(m, full_subrep(m)));
  EXPECT_FALSE(is_subrep(m, sub(F2, {{{1}}, {}}, {1, 1})));
}

TEST(EnumerateSubreps, Examples) {
  const Representation point(Quiver({"v"}, std::vector<Arrow>{}), F2, DimensionVector({2}), {});
  EXPECT_EQ(enumerate_subreps(point).size(), 5u);

  const auto zero_map = enumerate_subreps(kronecker_1x1(0));
  ASSERT_EQ(zero_map.size(), 4u);
  // dimension-vector order: (0,0), (0,1), (1,0), (1,1)
  EXPECT_EQ(zero_map[0].dims(), DimensionVector({0, 0}));
  EXPECT_EQ(zero_map[1].dims(), DimensionVector({0, 1}));
  EXPECT_EQ(zero_map[2].dims(), DimensionVector({1, 0}));
  EXPECT_EQ(zero_map[3].dims(), DimensionVector({1, 1}));

  const auto identity = enumerate_subreps(kronecker_1x1(1));
  ASSERT_EQ(identity.size(), 3u);
  for (const auto& s : identity) EXPECT_NE(s.dims(), DimensionVector({1, 0}));
}

TEST(EnumerateSubreps, BudgetExceeded) {
  const Representation big(Quiver({"v"}, std::vector<Arrow>{}), PrimeField(3), DimensionVector({4}), {});
  EXPECT_THROW(enumerate_subreps(big, EnumerationOptions{10}), BudgetExceeded);
  try {
    enumerate_subreps(big, EnumerationOptions{10});
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
  }
}

// Oracle: filter all per-vertex subspace tuples by vector-level closure.
std::vector<Subrepresentation> subreps_by_brute_force(const Representation& m) {
  std::vector<std::vector<Subspace>> per_vertex;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
    per_vertex.push_back(enumerate_subspaces(m.dim_at(v), m.field()));
  }
  std::vector<Subrepresentation> out;
  Subrepresentation cur;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == per_vertex.size()) {
      bool closed = true;
      for (std::size_t a = 0; a < m.maps().size() && closed; ++a) {
        const Arrow& arrow = m.quiver().arrows()[a];
        for (const auto& x : testing::span_by_enumeration(cur.spaces[arrow.source].basis())) {
          if (!cur.spaces[arrow.target].contains_vector(apply_to_vector(m.maps()[a], x))) {
            closed = false;
            break;
          }
        }
      }
      if (closed) out.push_back(cur);
      return;
    }
    for (const auto& s : per_vertex[v]) {
      cur.spaces.push_back(s);
      rec(v + 1);
      cur.spaces.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(EnumerateSubreps, MatchesBruteForceOnKroneckerF2) {
  for (std::size_t h : {1u, 2u}) {
    for (long long d0 = 0; d0 <= 2; ++d0) {
      for (long long d1 = 0; d1 <= 2; ++d1) {
        if (h == 2 && d0 * d1 > 2) continue;
        testing::for_each_kronecker_rep(F2, h, d0, d1, [&](const Representation& m) {
          ASSERT_EQ(enumerate_subreps(m), subreps_by_brute_force(m));
        });
      }
    }
  }
}

TEST(EnumerateSubreps, MatchesBruteForceOnRandomA3) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    const Representation m = testing::random_a3_rep(PrimeField(3), 2, rng);
    ASSERT_EQ(enumerate_subreps(m), subreps_by_brute_force(m));
  }
}

TEST(Quotient, Examples) {
  const Representation m = kronecker_1x1(0);
  const Quotient by_zero = quotient(m, zero_subrep(m));
  EXPECT_EQ(by_zero.rep, m);
  for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ(by_zero.projections[v], Matrix::identity(F2, 1));
  EXPECT_TRUE(quotient(m, full_subrep(m)).rep.is_zero());
  EXPECT_EQ(quotient(m, sub(F2, {{{1}}, {}}, {1, 1})).rep.dims(), DimensionVector({0, 1}));
  EXPECT_THROW(quotient(kronecker_1x1(1), sub(F2, {{{1}}, {}}, {1, 1})), InvalidArgument);
}

TEST(Quotient, PreimageIsAnInclusionPreservingBijection) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Representation m = testing::random_a3_rep(PrimeField(3), 2, rng);
    const auto subs = enumerate_subreps(m);
    for (const auto& s : subs) {
      const Quotient q = quotient(m, s);
      std::vector<Subrepresentation> lifted;
      for (const auto& u : enumerate_subreps(q.rep)) {
        const Subrepresentation p = preimage(q, u);
        ASSERT_TRUE(is_subrep(m, p));
        ASSERT_TRUE(subrep_contains(p, s));
        std::vector<long long> expected;
        for (std::size_t v = 0; v < s.spaces.size(); ++v) expected.push_back(s.dims()[v] + u.dims()[v]);
        ASSERT_EQ(p.dims(), DimensionVector(expected));
        lifted.push_back(p);
      }
      std::vector<Subrepresentation> above;
      for (const auto& t : subs) {
        if (subrep_contains(t, s)) above.push_back(t);
      }
      std::sort(lifted.begin(), lifted.end());
      ASSERT_EQ(lifted, above);
    }
  }
}

TEST(Semistability, Examples) {
  const Representation point(Quiver({"v"}, std::vector<Arrow>{}), F2, DimensionVector({2}), {});
  EXPECT_TRUE(is_semistable(point, StabilityParams({3}, {2})));
  EXPECT_FALSE(is_semistable(kronecker_1x1(0), kFirst));
  EXPECT_TRUE(is_semistable(kronecker_1x1(1), kFirst));
  EXPECT_TRUE(is_stable(kronecker_1x1(1), kFirst));
  EXPECT_FALSE(is_stable(point, StabilityParams({3}, {2})));
  const Representation zero(Quiver::kronecker(1), F2, DimensionVector({0, 0}), {Matrix(F2, 0, 0)});
  EXPECT_THROW(is_semistable(zero, kFirst), InvalidArgument);
  EXPECT_THROW(max_destabilizing(zero, kFirst), InvalidArgument);
  EXPECT_THROW(hn_filtration(zero, kFirst), InvalidArgument);
}

TEST(MaxDestabilizing, Examples) {
  const Representation ss = kronecker_1x1(1);
  EXPECT_EQ(max_destabilizing(ss, kFirst), full_subrep(ss));
  EXPECT_EQ(max_destabilizing(kronecker_1x1(0), kFirst), sub(F2, {{{1}}, {}}, {1, 1}));

  const Representation m(Quiver::kronecker(1), F2, DimensionVector({2, 1}), {Matrix::from_rows(F2, {{1, 0}})});
  const Subrepresentation md = max_destabilizing(m, kFirst);
  EXPECT_EQ(md, sub(F2, {{{0, 1}}, {}}, {2, 1}));
  EXPECT_EQ(slope(md.dims(), kFirst), 1);
  // oracle: maximum slope over the enumeration, then maximum sigma
  Rational best = -100;
  for (const auto& s : enumerate_subreps(m)) {
    if (!s.is_zero()) best = std::max(best, slope(s.dims(), kFirst));
  }
  EXPECT_EQ(best, 1);
}

TEST(HnFiltration, Examples) {
  const Representation ss = kronecker_1x1(1);
  EXPECT_EQ(hn_filtration(ss, kFirst), Filtration{{full_subrep(ss)}});

  const Representation m = kronecker_1x1(0);
  const Filtration f = hn_filtration(m, kFirst);
  ASSERT_EQ(f.steps.size(), 2u);
  EXPECT_EQ(f.steps[0], sub(F2, {{{1}}, {}}, {1, 1}));
  EXPECT_EQ(f.steps[1], full_subrep(m));
  const HnReport r = check_hn_properties(m, f, kFirst);
  EXPECT_EQ(r.quotient_slopes, (std::vector<Rational>{1, 0}));
  EXPECT_TRUE(r.ok());

  const Representation loop(Quiver({"v"}, std::vector<Arrow>{{0, 0}}), F2, DimensionVector({2}),
                            {Matrix::from_rows(F2, {{0, 1}, {0, 0}})});
  const StabilityParams one({1}, {1});
  EXPECT_TRUE(is_semistable(loop, one));
  const Filtration lf = hn_filtration(loop, one);
  EXPECT_EQ(lf, Filtration{{full_subrep(loop)}});
  EXPECT_TRUE(check_hn_properties(loop, lf, one).ok());
  EXPECT_EQ(check_hn_properties(ss, hn_filtration(ss, kFirst), kFirst).quotient_slopes,
            (std::vector<Rational>{Rational(1, 2)}));
}

TEST(CheckHnProperties, FlagsNonHnChains) {
  // 0 < (0,k) < M has ascending quotient slopes 0 < 1
  const Representation m = kronecker_1x1(0);
  const Filtration bad{{sub(F2, {{}, {{1}}}, {1, 1}), full_subrep(m)}};
  const HnReport r = check_hn_properties(m, bad, kFirst);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.strictly_descending, (std::vector<bool>{false}));
  EXPECT_THROW(check_hn_properties(m, Filtration{{sub(F2, {{}, {{1}}}, {1, 1})}}, kFirst), InvalidArgument);
}

TEST(Seesaw, Examples) {
  const Representation m = kronecker_1x1(0);
  const SeesawReport r = seesaw_check(m, sub(F2, {{{1}}, {}}, {1, 1}), kFirst);
  EXPECT_EQ(r.sub_slope, 1);
  EXPECT_EQ(r.whole_slope, Rational(1, 2));
  EXPECT_EQ(r.quotient_slope, 0);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_THROW(seesaw_check(m, full_subrep(m), kFirst), InvalidArgument);
  EXPECT_THROW(seesaw_check(m, zero_subrep(m), kFirst), InvalidArgument);
}

TEST(Reparam, Examples) {
  EXPECT_EQ(reparam_theta(kFirst, 1, 0), kFirst);
  EXPECT_EQ(reparam_theta(kFirst, 2, 3).theta(), (std::vector<long long>{5, 3}));
  EXPECT_EQ(reparam_theta(kFirst, 2, 3).sigma(), kFirst.sigma());
  EXPECT_THROW(reparam_theta(kFirst, 0, 1), InvalidArgument);
}

// Exhaustive Kronecker suite over F_2, dims <= (2,2), Theta in {-2..2}^2, sigma in {1,2}^2.
template <class Check>
void for_each_kronecker_instance(Check&& check) {
  for (long long d0 = 0; d0 <= 2; ++d0) {
    for (long long d1 = 0; d1 <= 2; ++d1) {
      if (d0 + d1 == 0) continue;
      testing::for_each_kronecker_rep(F2, 1, d0, d1, [&](const Representation& m) {
        for (long long t0 = -2; t0 <= 2; ++t0)
          for (long long t1 = -2; t1 <= 2; ++t1)
            for (long long s0 = 1; s0 <= 2; ++s0)
              for (long long s1 = 1; s1 <= 2; ++s1) check(m, StabilityParams({t0, t1}, {s0, s1}));
      });
    }
  }
}

TEST(QuiverProperties, UniquenessMaximalityHnAxiomsAndSemistableTop) {
  std::size_t instances = 0;
  for_each_kronecker_instance([&](const Representation& m, const StabilityParams& params) {
    ++instances;
    const Subrepresentation md = max_destabilizing(m, params);
    Rational best;
    bool first = true;
    for (const auto& s : enumerate_subreps(m)) {
      if (s.is_zero()) continue;
      const Rational mu = slope(s.dims(), params);
      if (first || mu > best) best = mu;
      first = false;
    }
    ASSERT_EQ(slope(md.dims(), params), best);
    ASSERT_EQ(md == full_subrep(m), is_semistable(m, params));
    const Filtration f = hn_filtration(m, params);
    ASSERT_EQ(f.steps.front(), md);
    ASSERT_TRUE(check_hn_properties(m, f, params).ok());
  });
  // 30 representations x 100 parameter choices
  EXPECT_EQ(instances, 3000u);
}

TEST(QuiverProperties, SeesawExhaustive) {
  for_each_kronecker_instance([&](const Representation& m, const StabilityParams& params) {
    for (const auto& s : enumerate_subreps(m)) {
      if (s.is_zero() || s == full_subrep(m)) continue;
      ASSERT_TRUE(seesaw_check(m, s, params).violations.empty());
    }
  });
}

TEST(QuiverProperties, ReparameterizationInvariance) {
  for_each_kronecker_instance([&](const Representation& m, const StabilityParams& params) {
    const bool ss = is_semistable(m, params);
    const Filtration f = hn_filtration(m, params);
    for (auto [a, b] : {std::pair{2LL, 3LL}, {1LL, -2LL}, {3LL, -1LL}}) {
      const StabilityParams p2 = reparam_theta(params, a, b);
      ASSERT_EQ(is_semistable(m, p2), ss);
      ASSERT_EQ(hn_filtration(m, p2), f);
      for (const auto& s : enumerate_subreps(m)) {
        if (!s.is_zero()) {
          ASSERT_EQ(slope(s.dims(), p2), a * slope(s.dims(), params) + b);
        }
      }
    }
  });
}

}  // namespace
}  // namespace qhn
