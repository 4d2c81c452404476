#include <gtest/gtest.h>

#include <random>

#include "topolab/enumerate.hpp"
#include "topolab/fixtures.hpp"
#include "topolab/operators.hpp"

using namespace topolab;

namespace {

PointSet S(std::initializer_list<std::size_t> p) { return PointSet::of(p); }

const std::vector<FiniteSpace>& spaces_up_to_four() {
  static const std::vector<FiniteSpace> all = [] {
    std::vector<FiniteSpace> out;
    for (std::size_t n = 0; n <= 4; ++n)
      for (auto& s : enumerate_topologies(n)) out.push_back(std::move(s));
    return out;
  }();
  return all;
}

// Lattice definitions: union of semi-open subsets, intersection of semi-closed supersets.
PointSet oracle_semi_interior(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for_each_subset(a, [&](PointSet b) {
    if (b.subset_of(s.closure(s.interior(b)))) out = out | b;
  });
  return out;
}

PointSet oracle_semi_closure(const FiniteSpace& s, PointSet a) {
  PointSet out = s.full();
  for_each_subset(s.full() - a, [&](PointSet extra) {
    const PointSet b = a | extra;
    if (s.interior(s.closure(b)).subset_of(b)) out = out & b;
  });
  return out;
}

}  // namespace

TEST(CoreOperator, Examples) {
  const auto sierp = fixture("SIERP");
  EXPECT_EQ(core_operator(sierp, S({1}), OperatorKind::SemiInterior), PointSet{});
  EXPECT_EQ(core_operator(sierp, S({0}), OperatorKind::SemiClosure), S({0, 1}));
  EXPECT_EQ(core_operator(sierp, S({0}), OperatorKind::Boundary), S({1}));
  for (const auto& s : spaces_up_to_four()) EXPECT_EQ(core_operator(s, PointSet{}, OperatorKind::Closure), PointSet{});
  EXPECT_THROW(core_operator(sierp, S({2}), OperatorKind::Interior), Error);
}

TEST(CoreOperator, SemiOperatorsMatchLatticeDefinitions) {
  for (const auto& s : spaces_up_to_four()) {
    for_each_subset(s.size(), [&](PointSet a) {
      ASSERT_EQ(semi_interior(s, a), oracle_semi_interior(s, a)) << s.to_string() << " " << a.to_string();
      ASSERT_EQ(semi_closure(s, a), oracle_semi_closure(s, a)) << s.to_string() << " " << a.to_string();
    });
  }
}

TEST(CoreOperator, InteriorAndClosureFromOpens) {
  for (const auto& s : spaces_up_to_four()) {
    for_each_subset(s.size(), [&](PointSet a) {
      PointSet in;
      for (auto u : s.opens())
        if (u.subset_of(a)) in = in | u;
      PointSet cl = s.full();
      for (auto f : s.closed_sets())
        if (a.subset_of(f)) cl = cl & f;
      ASSERT_EQ(s.interior(a), in);
      ASSERT_EQ(s.closure(a), cl);
    });
  }
}

TEST(SetFlags, Examples) {
  const auto f = set_flags(fixture("SIERP"), S({1}));
  EXPECT_TRUE(f.nowhere_dense);
  EXPECT_TRUE(f.hsg_closed);
  EXPECT_TRUE(f.sg_closed);
  EXPECT_TRUE(f.semi_closed);
  EXPECT_FALSE(f.open);

  const auto g = set_flags(fixture("DOUBLEPT3"), S({0, 1}));
  EXPECT_FALSE(g.sg_closed);
  EXPECT_TRUE(g.open);

  for (const auto& s : spaces_up_to_four()) {
    const auto w = set_flags(s, s.full());
    EXPECT_TRUE(w.open && w.closed && w.dense && w.sg_closed && w.sg_open);
  }
}

TEST(SetFlags, ImplicationsHoldExhaustively) {
  for (const auto& s : spaces_up_to_four()) {
    for_each_subset(s.size(), [&](PointSet a) {
      const auto f = set_flags(s, a);
      const auto c = set_flags(s, a.complement(s.size()));
      const std::string where = s.to_string() + " A=" + a.to_string();
      EXPECT_TRUE(!f.open || f.semi_open) << where;
      EXPECT_TRUE(!f.semi_open || f.beta_open) << where;
      EXPECT_TRUE(!f.open || f.preopen) << where;
      EXPECT_TRUE(!f.semi_closed || f.sg_closed) << where;
      EXPECT_TRUE(!f.sg_closed || c.beta_open) << where;
      EXPECT_TRUE(!f.nowhere_dense || f.hsg_closed) << where;
      EXPECT_TRUE(!f.hsg_closed || f.sg_closed) << where;
      EXPECT_EQ(f.regular_open, f.alpha_open && f.sg_closed) << where;
      EXPECT_EQ(f.sg_open, c.sg_closed) << where;
    });
  }
}

TEST(SgClosed, DefinitionExamples) {
  const auto sierp = fixture("SIERP");
  EXPECT_FALSE(is_sg_closed_def(sierp, S({0})));
  EXPECT_TRUE(is_sg_closed_def(sierp, S({1})));
  for (const auto& s : spaces_up_to_four()) EXPECT_TRUE(is_sg_closed_def(s, PointSet{}));
}

TEST(SgClosed, HereditaryDefinitionExamples) {
  EXPECT_TRUE(is_hsg_closed_def(fixture("CONE3"), S({1, 2})));
  EXPECT_FALSE(is_hsg_closed_def(fixture("PP3"), S({1})));
  for (const auto& s : spaces_up_to_four()) EXPECT_TRUE(is_hsg_closed_def(s, PointSet{}));
}

TEST(SgClosed, CharacterizationsAgreeWithDefinitionExhaustively) {
  std::size_t checked = 0;
  for (const auto& s : spaces_up_to_four()) {
    const PointSet x1 = nowhere_dense_points(s);
    for_each_subset(s.size(), [&](PointSet a) {
      const bool def = is_sg_closed_def(s, a);
      const bool via_scl = (x1 & semi_closure(s, a)).subset_of(a);
      const bool via_int_cl = (x1 & s.interior(s.closure(a))).subset_of(a);
      ASSERT_EQ(def, set_flags(s, a).sg_closed);
      ASSERT_EQ(def, via_scl);
      ASSERT_EQ(def, via_int_cl);
      ASSERT_EQ(is_hsg_closed_def(s, a), (x1 & s.interior(s.closure(a))).empty());
      ++checked;
    });
  }
  EXPECT_EQ(checked, 1u * 1 + 1 * 2 + 4 * 4 + 29 * 8 + 355 * 16);
}

TEST(SgClosed, ArbitraryIntersectionsStaySgClosed) {
  for (const auto& s : spaces_up_to_four()) {
    std::vector<PointSet> sg;
    for_each_subset(s.size(), [&](PointSet a) {
      if (is_sg_closed(s, a)) sg.push_back(a);
    });
    const std::size_t k = sg.size();
    auto check = [&](std::uint64_t pick) {
      PointSet meet = s.full();
      for (std::size_t i = 0; i < k; ++i)
        if ((pick >> i) & 1U) meet = meet & sg[i];
      ASSERT_TRUE(is_sg_closed_def(s, meet)) << s.to_string();
    };
    if (k <= 12) {
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) check(pick);
    } else {
      std::mt19937_64 rng(0x5eed);
      for (int i = 0; i < 4096; ++i) check(rng() & ((std::uint64_t{1} << k) - 1));
    }
  }
}

TEST(SgClosed, AdditivityWithClosedAndOpenSets) {
  for (const auto& s : spaces_up_to_four()) {
    for_each_subset(s.size(), [&](PointSet a) {
      for (auto u : s.opens()) {
        const PointSet f = u.complement(s.size());
        if (is_sg_closed(s, a)) {
          ASSERT_TRUE(is_sg_closed(s, a | f));
        }
        if (is_sg_open(s, a)) {
          ASSERT_TRUE(is_sg_open(s, a & u));
        }
      }
    });
  }
}

TEST(DerivedTopology, Examples) {
  EXPECT_EQ(derived_topology(fixture("CONE3"), DerivedKind::Alpha),
            validate_topology(3, {PointSet{}, S({0}), S({0, 1}), S({0, 2}), S({0, 1, 2})}));
  EXPECT_EQ(derived_topology(fixture("SIERP"), DerivedKind::Delta), indiscrete_space(2));
  EXPECT_EQ(derived_topology(discrete_space(3), DerivedKind::Alpha), discrete_space(3));
}

TEST(DerivedTopology, AlphaIsAnIdempotentExpansion) {
  for (const auto& s : spaces_up_to_four()) {
    const auto alpha = derived_topology(s, DerivedKind::Alpha);
    EXPECT_NO_THROW(validate_topology(s.size(), alpha.opens()));
    for (auto u : s.opens()) EXPECT_TRUE(alpha.is_open(u));
    EXPECT_EQ(derived_topology(alpha, DerivedKind::Alpha), alpha);
    // Alpha-open sets are exactly those inside Int Cl Int.
    for_each_subset(s.size(), [&](PointSet a) { EXPECT_EQ(alpha.is_open(a), is_alpha_open(s, a)); });
    // Delta-open sets are the unions of regular-open sets.
    const auto delta = derived_topology(s, DerivedKind::Delta);
    for_each_subset(s.size(), [&](PointSet a) { EXPECT_EQ(delta.is_open(a), set_flags(s, a).delta_open); });
  }
}

TEST(ExpandByIdeal, Examples) {
  const auto cone = fixture("CONE3");
  EXPECT_EQ(expand_by_ideal(cone, {}), cone);
  EXPECT_EQ(expand_by_ideal(cone, {{PointSet{}}}), cone);
  EXPECT_EQ(expand_by_ideal(cone, {{S({1, 2})}}),
            validate_topology(3, {PointSet{}, S({0}), S({0, 1}), S({0, 2}), S({0, 1, 2})}));
  EXPECT_EQ(expand_by_ideal(discrete_space(2), {{S({0})}}), discrete_space(2));
  EXPECT_THROW(expand_by_ideal(cone, {{S({4})}}), Error);
}

TEST(ExpandByIdeal, IsTheMinimalExpansion) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = enumerate_topologies(n);
    for (const auto& s : all) {
      for_each_subset(n, [&](PointSet gen) {
        const IdealSpec ideal{{gen}};
        const auto expanded = expand_by_ideal(s, ideal);
        // Oracle: meet of every topology containing s in which every ideal member is closed.
        std::vector<bool> meet(std::size_t{1} << n, true);
        bool any = false;
        for (const auto& t : all) {
          bool ok = true;
          for (auto u : s.opens()) ok = ok && t.is_open(u);
          for_each_subset(gen, [&](PointSet m) { ok = ok && t.is_closed(m); });
          if (!ok) continue;
          any = true;
          for_each_subset(n, [&](PointSet a) { meet[a.bits()] = meet[a.bits()] && t.is_open(a); });
        }
        ASSERT_TRUE(any);
        for_each_subset(n, [&](PointSet a) { ASSERT_EQ(expanded.is_open(a), meet[a.bits()]); });
      });
    }
  }
}

TEST(PerfectNowhereDense, Examples) {
  EXPECT_EQ(perfect_nowhere_dense_sets(fixture("CONE3")), (std::vector<PointSet>{S({1, 2})}));
  EXPECT_TRUE(perfect_nowhere_dense_sets(discrete_space(3)).empty());
  EXPECT_TRUE(perfect_nowhere_dense_sets(fixture("SIERP")).empty());
}
