#include <set>

#include <gtest/gtest.h>

#include "atlas/oracles.hpp"
#include "support.hpp"

namespace atlas {
namespace {

using test::lattice;
using test::siegel;
using test::word_tau;

std::vector<int> length_profile(const AffineWeylGroup& group,
                                const std::vector<ExtAffineElement>& xs) {
  std::vector<int> out;
  for (const auto& x : xs) {
    std::size_t len = static_cast<std::size_t>(group.length(x));
    if (out.size() <= len)
      out.resize(len + 1, 0);
    ++out[len];
  }
  return out;
}

using ElementSet = std::set<ExtAffineElement>;

ElementSet as_set(const std::vector<ExtAffineElement>& xs) { return {xs.begin(), xs.end()}; }

ExtAffineElement coset_minimum_brute(const AffineWeylGroup& group,
                                     const std::vector<ExtAffineElement>& wk,
                                     const ExtAffineElement& x) {
  ExtAffineElement best = x;
  for (const auto& u : wk) {
    auto y = group.multiply(u, x);
    if (group.length(y) < group.length(best))
      best = y;
  }
  return best;
}

// Values established by the downward-closure oracle below, then frozen.
TEST(Admissible, FrozenSizesAndProfiles) {
  const std::vector<std::vector<int>> profiles{
      {1, 2},
      {1, 3, 5, 4},
      {1, 4, 9, 17, 22, 18, 8},
      {1, 5, 14, 31, 59, 93, 121, 131, 106, 56, 16},
  };
  const std::size_t sizes[] = {3, 13, 79, 633};
  for (int g = 1; g <= 4; ++g) {
    const auto& ctx = siegel(g);
    EXPECT_EQ(ctx.adm().size(), sizes[g - 1]);
    EXPECT_EQ(length_profile(ctx.group(), ctx.adm().elements), profiles[g - 1]);
  }
}

TEST(Admissible, MatchesDownwardClosureOracle) {
  for (int g = 1; g <= 3; ++g) {
    const auto& ctx = siegel(g);
    EXPECT_EQ(oracle::adm_by_downward_closure(ctx.group(), ctx.adm()), ctx.adm().elements)
        << "g = " << g;
  }
}

TEST(Admissible, GenusOneElements) {
  const auto& ctx = siegel(1);
  const auto& group = ctx.group();
  ElementSet expected{ctx.tau(), group.translation(lattice(group, {1, 0})),
                      group.translation(lattice(group, {0, 1}))};
  EXPECT_EQ(as_set(ctx.adm().elements), expected);
  EXPECT_TRUE(ctx.adm().contains(word_tau(ctx, {1})));
  EXPECT_TRUE(ctx.adm().contains(group.multiply(ctx.tau(), group.simple_reflection(1))));
}

TEST(Admissible, ZeroCocharacter) {
  const auto& group = siegel(2).group();
  AdmissibleSet adm = admissible_set(group, IntVector(group.datum().rank(), 0));
  EXPECT_EQ(adm.elements, std::vector<ExtAffineElement>{group.identity()});
  EXPECT_EQ(adm.tau, group.identity());
}

TEST(Admissible, MaximalElementsAreTheTranslations) {
  for (int g = 1; g <= 4; ++g) {
    const auto& ctx = siegel(g);
    const auto& group = ctx.group();
    const auto& adm = ctx.adm();
    EXPECT_EQ(adm.maximal.size(), std::size_t{1} << g);
    const int top = g * (g + 1) / 2;
    EXPECT_EQ(group.pair_with_two_rho(NewtonPoint{to_rational(ctx.mu())}), top);
    ElementSet orbit;
    for (const auto& lambda : group.weyl_orbit(ctx.mu()))
      orbit.insert(group.translation(lambda));
    EXPECT_EQ(as_set(adm.maximal), orbit);
    ElementSet longest;
    for (const auto& x : adm.elements) {
      EXPECT_EQ(group.omega_part(x), ctx.tau());
      if (group.length(x) == top)
        longest.insert(x);
    }
    EXPECT_EQ(longest, orbit);
  }
}

TEST(Admissible, DownwardClosedUnderSimpleDescents) {
  for (int g = 1; g <= 4; ++g) {
    const auto& ctx = siegel(g);
    const auto& group = ctx.group();
    for (const auto& x : ctx.adm().elements) {
      auto rd = group.reduced_word(x);
      // Deleting any single letter of a reduced word gives an element below x.
      for (std::size_t i = 0; i < rd.word.size(); ++i) {
        std::vector<int> w = rd.word;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        EXPECT_TRUE(ctx.adm().contains(group.evaluate(w, rd.omega)));
      }
    }
  }
}

TEST(Admissible, KwExamples) {
  const auto& c1 = siegel(1);
  EXPECT_EQ(as_set(kw_elements(c1.group(), c1.adm(), c1.hyperspecial())),
            (ElementSet{c1.tau(), c1.group().multiply(c1.tau(), c1.group().simple_reflection(1))}));
  const auto& c2 = siegel(2);
  EXPECT_EQ(kw_elements(c2.group(), c2.adm(), c2.hyperspecial()),
            (std::vector<ExtAffineElement>{c2.tau(), word_tau(c2, {0}), word_tau(c2, {0, 1}),
                                           word_tau(c2, {0, 1, 0})}));
  for (int g = 1; g <= 4; ++g) {
    const auto& ctx = siegel(g);
    EXPECT_EQ(kw_elements(ctx.group(), ctx.adm(), ctx.iwahori()), ctx.adm().elements);
    EXPECT_EQ(kw_elements(ctx.group(), ctx.adm(), ctx.hyperspecial()).size(), std::size_t{1} << g);
  }
}

TEST(Admissible, KwIdentityHoldsForEveryLevel) {
  for (int g = 1; g <= 3; ++g) {
    const auto& ctx = siegel(g);
    for (const auto& k : all_parahoric_labels(ctx.group()))
      EXPECT_NO_THROW(kw_elements(ctx.group(), ctx.adm(), k, true))
          << "g = " << g << ", K = " << k.nodes().to_string();
  }
}

TEST(Admissible, KwElementsAreUniqueCosetMinima) {
  for (int g = 1; g <= 3; ++g) {
    const auto& ctx = siegel(g);
    const auto& group = ctx.group();
    for (const auto& k : all_parahoric_labels(group)) {
      const auto wk = group.parabolic_subgroup(k.nodes());
      const auto kw = kw_elements(group, ctx.adm(), k);
      const ElementSet kw_set = as_set(kw);
      std::set<ExtAffineElement> minima;
      for (const auto& x : kw) {
        EXPECT_EQ(coset_minimum_brute(group, wk, x), x);
        minima.insert(coset_minimum_brute(group, wk, x));
      }
      EXPECT_EQ(minima.size(), kw.size());
      for (const auto& x : ctx.adm().elements) {
        auto m = coset_minimum_brute(group, wk, x);
        if (ctx.adm().contains(m))
          EXPECT_TRUE(kw_set.count(m)) << k.nodes().to_string();
      }
    }
  }
}

TEST(Admissible, LengthAdditivityOnMinimalRepresentatives) {
  for (int g = 1; g <= 3; ++g) {
    const auto& ctx = siegel(g);
    const auto& group = ctx.group();
    for (const auto& k : all_parahoric_labels(group)) {
      const auto wk = group.parabolic_subgroup(k.nodes());
      for (const auto& x : kw_elements(group, ctx.adm(), k)) {
        EXPECT_TRUE(is_left_minimal(group, x, k.nodes()));
        for (const auto& u : wk)
          EXPECT_EQ(group.length(group.multiply(u, x)), group.length(u) + group.length(x));
      }
    }
  }
}

TEST(Admissible, VariantsAtIwahoriLevel) {
  const auto& ctx = siegel(2);
  AdmVariants v = adm_variants(ctx.group(), ctx.adm(), ctx.iwahori());
  EXPECT_EQ(as_set(v.adm_k), as_set(ctx.adm().elements));
  EXPECT_EQ(as_set(v.double_coset_reps), as_set(ctx.adm().elements));
}

TEST(Admissible, DoubleCosetRepresentativesByBruteForce) {
  for (int g = 1; g <= 3; ++g) {
    const auto& ctx = siegel(g);
    const auto& group = ctx.group();
    for (const auto& k : all_parahoric_labels(group)) {
      const auto wk = group.parabolic_subgroup(k.nodes());
      ElementSet closure, minima;
      for (const auto& x : ctx.adm().elements) {
        ExtAffineElement best = x;
        for (const auto& u : wk)
          for (const auto& v : wk) {
            auto y = group.multiply(group.multiply(u, x), v);
            closure.insert(y);
            if (group.length(y) < group.length(best))
              best = y;
          }
        minima.insert(best);
        EXPECT_EQ(double_coset_minimum(group, x, k.nodes()), best);
      }
      AdmVariants v = adm_variants(group, ctx.adm(), k);
      EXPECT_EQ(as_set(v.adm_k), closure);
      EXPECT_EQ(as_set(v.double_coset_reps), minima);
      for (const auto& x : ctx.adm().elements)
        EXPECT_TRUE(closure.count(x));
    }
  }
  const auto& c2 = siegel(2);
  EXPECT_EQ(adm_variants(c2.group(), c2.adm(), c2.hyperspecial()).double_coset_reps.size(), 1u);
}

// Independent count: symmetric Newton polygons of height 2g and dimension g
// are fixed by their part of slope < 1/2, giving 2, 3, 5, 8 for g = 1..4.
TEST(Admissible, StraightClassCounts) {
  const std::size_t expected[] = {2, 3, 5, 8};
  for (int g = 1; g <= 4; ++g)
    EXPECT_EQ(straight_classes(siegel(g).group(), siegel(g).adm()).size(), expected[g - 1]);
}

TEST(Admissible, StraightClassNewtonPoints) {
  auto newton_points = [](int g) {
    const auto& group = siegel(g).group();
    std::vector<RationalVector> out;
    for (const auto& c : straight_classes(group, siegel(g).adm()))
      out.push_back(group.datum().to_ambient(c.newton.coords));
    return out;
  };
  const Rational h(1, 2);
  EXPECT_EQ(newton_points(1), (std::vector<RationalVector>{{h, h}, {1, 0}}));
  EXPECT_EQ(newton_points(2),
            (std::vector<RationalVector>{{h, h, h, h}, {1, h, h, 0}, {1, 1, 0, 0}}));
}

TEST(Admissible, StraightClassInvariants) {
  for (int g = 1; g <= 4; ++g) {
    const auto& ctx = siegel(g);
    const auto& group = ctx.group();
    const auto classes = straight_classes(group, ctx.adm());
    const NewtonPoint mu_bar = group.mu_bar(ctx.mu());
    std::set<std::pair<NewtonPoint, Pi1Class>, std::less<>> keys;
    std::size_t members = 0;
    for (const auto& c : classes) {
      keys.insert({c.newton, c.kottwitz});
      EXPECT_EQ(c.kottwitz, group.kottwitz(ctx.mu()));
      EXPECT_TRUE(group.newton_leq(c.newton, mu_bar));
      EXPECT_TRUE(group.is_sigma_straight(c.representative));
      for (const auto& x : c.members) {
        EXPECT_EQ(group.newton_vector(x), c.newton);
        EXPECT_EQ(group.kottwitz(x), c.kottwitz);
      }
      members += c.members.size();
    }
    EXPECT_EQ(keys.size(), classes.size());
    std::size_t straight = 0;
    for (const auto& x : ctx.adm().elements)
      straight += group.is_sigma_straight(x);
    EXPECT_EQ(members, straight);

    ASSERT_FALSE(classes.empty());
    EXPECT_TRUE(classes.front().basic);
    EXPECT_EQ(classes.front().representative, ctx.tau());
    for (std::size_t i = 1; i < classes.size(); ++i) {
      EXPECT_FALSE(classes[i].basic);
      EXPECT_TRUE(group.newton_leq(classes.front().newton, classes[i].newton));
      EXPECT_FALSE(group.newton_leq(classes[i].newton, classes.front().newton));
    }
  }
}

TEST(Admissible, StraightClassesMatchConjugationSearch) {
  for (int g = 1; g <= 2; ++g) {
    const auto& ctx = siegel(g);
    const auto& group = ctx.group();
    std::vector<ExtAffineElement> straight;
    std::vector<int> by_invariants;
    const auto classes = straight_classes(group, ctx.adm());
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (const auto& x : classes[i].members) {
        straight.push_back(x);
        by_invariants.push_back(static_cast<int>(i));
      }
    auto by_search = oracle::straight_conjugacy_classes(
        group, straight, 4, {group.identity(), ctx.tau(), group.inverse(ctx.tau())});
    for (std::size_t i = 0; i < straight.size(); ++i)
      for (std::size_t j = 0; j < straight.size(); ++j)
        EXPECT_EQ(by_search[i] == by_search[j], by_invariants[i] == by_invariants[j]);
  }
}

}  // namespace
}  // namespace atlas
