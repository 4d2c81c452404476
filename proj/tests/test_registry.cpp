#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "topolab/json_io.hpp"
#include "topolab/mine.hpp"
#include "topolab/registry.hpp"

using namespace topolab;

namespace {

PointSet S(std::initializer_list<std::size_t> p) { return PointSet::of(p); }

// Oracles below work from the open-set list only.
PointSet full_of(const FiniteSpace& s) { return PointSet::full(s.size()); }

PointSet oracle_interior(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for (auto u : s.opens())
    if (u.subset_of(a)) out = out | u;
  return out;
}

PointSet oracle_closure(const FiniteSpace& s, PointSet a) {
  PointSet out = full_of(s);
  for (auto u : s.opens())
    if (!u.intersects(a)) out = out & u.complement(s.size());
  return out;
}

bool oracle_semi_open(const FiniteSpace& s, PointSet u) {
  for (auto o : s.opens())
    if (o.subset_of(u) && u.subset_of(oracle_closure(s, o))) return true;
  return false;
}

PointSet oracle_semi_closure(const FiniteSpace& s, PointSet a) {
  PointSet out = full_of(s);
  for_each_subset(s.size(), [&](PointSet f) {
    if (a.subset_of(f) && oracle_semi_open(s, f.complement(s.size()))) out = out & f;
  });
  return out;
}

bool oracle_sg_closed(const FiniteSpace& s, PointSet a) {
  const PointSet scl = oracle_semi_closure(s, a);
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet u) {
    if (a.subset_of(u) && oracle_semi_open(s, u) && !scl.subset_of(u)) ok = false;
  });
  return ok;
}

bool oracle_hsg_closed(const FiniteSpace& s, PointSet a) {
  bool ok = true;
  for_each_subset(a, [&](PointSet b) { ok = ok && oracle_sg_closed(s, b); });
  return ok;
}

bool oracle_nowhere_dense(const FiniteSpace& s, PointSet a) {
  return oracle_interior(s, oracle_closure(s, a)).empty();
}

bool oracle_scattered_set(const FiniteSpace& s, PointSet a) {
  bool ok = true;
  for_each_subset(a, [&](PointSet b) {
    if (b.empty()) return;
    bool has_isolated = false;
    for (auto x : b.points())
      for (auto u : s.opens())
        if ((u & b) == PointSet::singleton(x)) has_isolated = true;
    ok = ok && has_isolated;
  });
  return ok;
}

bool oracle_n_scattered(const FiniteSpace& s) {
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet a) {
    if (oracle_nowhere_dense(s, a) && !oracle_scattered_set(s, a)) ok = false;
  });
  return ok;
}

std::string masked_json(const VerifyOptions& o) { return verification_json(verify(o), false).dump(); }

}  // namespace

TEST(Registry, IdsAreExactlyTheNumberedChecks) {
  std::vector<std::string> expected;
  for (int i = 1; i <= 33; ++i) expected.push_back("T" + std::to_string(i));
  for (int i = 1; i <= 6; ++i) expected.push_back("S" + std::to_string(i));
  std::vector<std::string> ids;
  for (const auto& c : theorem_registry()) {
    ids.emplace_back(c.id);
    EXPECT_FALSE(c.statement.empty());
    EXPECT_EQ(c.scope == CheckScope::FiniteExhaustive, c.finite != nullptr) << c.id;
    EXPECT_EQ(c.scope != CheckScope::FiniteExhaustive, c.global != nullptr) << c.id;
  }
  EXPECT_EQ(ids, expected);
  EXPECT_EQ(find_check("T28").scope, CheckScope::Fixture);
  EXPECT_EQ(find_check("S3").scope, CheckScope::Symbolic);
}

TEST(Registry, CoverageMapCrossReferencesRegistry) {
  std::set<std::string> covered;
  for (const auto& entry : coverage_map()) {
    EXPECT_TRUE(!entry.checks.empty() || !entry.note.empty()) << entry.topic;
    std::stringstream in{std::string(entry.checks)};
    for (std::string id; std::getline(in, id, ',');) {
      EXPECT_NO_THROW(find_check(id)) << id;
      covered.insert(id);
    }
  }
  for (const auto& c : theorem_registry()) EXPECT_TRUE(covered.count(std::string(c.id))) << c.id;
}

TEST(Verify, AllChecksButTheFalseClaimPassUpToFour) {
  VerifyOptions o;
  o.n_max = 4;
  const auto r = verify(o);
  EXPECT_EQ(r.spaces_examined, 1u + 1 + 4 + 29 + 355);
  for (const auto& c : r.checks) {
    if (c.id == "T8") continue;
    EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " " << c.witness;
  }
  // DISC(2) has no nowhere dense singleton, so X1 is empty and every subset
  // is hsg-closed, yet it is not indiscrete. It is the first such space:
  // on fewer points indiscrete and discrete coincide.
  const auto& t8 = r.outcome("T8");
  EXPECT_EQ(t8.status, CheckStatus::Fail);
  EXPECT_EQ(t8.witness.rfind(discrete_space(2).to_string() + ":", 0), 0u) << t8.witness;
  const auto disc2 = discrete_space(2);
  EXPECT_TRUE(oracle_hsg_closed(disc2, full_of(disc2)));
  EXPECT_FALSE(r.all_passed());
}

TEST(Verify, SelectedIdsAndErrors) {
  VerifyOptions o;
  o.n_max = 2;
  o.ids = {"T6", "T2", "T6"};
  const auto r = verify(o);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].id, "T6");
  EXPECT_EQ(r.checks[1].id, "T2");
  EXPECT_TRUE(r.all_passed());

  o.ids = {"T34"};
  try {
    verify(o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownCheckId);
  }
  o.ids = {};
  o.n_max = 6;
  try {
    verify(o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundTooLarge);
  }
  o.n_max = 0;
  EXPECT_THROW(verify(o), Error);
}

TEST(Verify, FiniteOnlySkipsFixedTargets) {
  VerifyOptions o;
  o.n_max = 2;
  o.finite_only = true;
  o.ids = {"T1", "T28", "S1"};
  const auto r = verify(o);
  EXPECT_EQ(r.outcome("T1").status, CheckStatus::Pass);
  EXPECT_EQ(r.outcome("T28").status, CheckStatus::Skipped);
  EXPECT_EQ(r.outcome("S1").status, CheckStatus::Skipped);
  EXPECT_TRUE(r.all_passed());
}

TEST(Verify, ReportIndependentOfWorkerCount) {
  VerifyOptions o;
  o.n_max = 4;
  const std::string one = masked_json(o);
  o.workers = 3;
  EXPECT_EQ(masked_json(o), one);
  o.workers = 7;
  EXPECT_EQ(masked_json(o), one);
  EXPECT_EQ(one.find("wall_seconds"), std::string::npos);
  EXPECT_NE(verification_json(verify(o), true).dump().find("wall_seconds"), std::string::npos);
}

TEST(Verify, RegistryAgreesWithOraclesOnSmallSpaces) {
  // The checks encode true statements, so the oracles must agree wherever the
  // registry passes.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : enumerate_topologies(n)) {
      const PointSet x1 = [&] {
        PointSet out;
        for (std::size_t x = 0; x < n; ++x)
          if (oracle_nowhere_dense(s, PointSet::singleton(x))) out = out | PointSet::singleton(x);
        return out;
      }();
      for_each_subset(n, [&](PointSet a) {
        const bool sg = oracle_sg_closed(s, a);
        ASSERT_EQ(sg, (x1 & oracle_interior(s, oracle_closure(s, a))).subset_of(a));
        ASSERT_EQ(oracle_hsg_closed(s, a), (x1 & oracle_interior(s, oracle_closure(s, a))).empty());
        for_each_subset(n, [&](PointSet b) {
          if (sg && oracle_sg_closed(s, b)) ASSERT_TRUE(oracle_sg_closed(s, a & b));
        });
      });
    }
  }
}

TEST(IntermediateTopology, FixtureSearchFindsStrictlyIntermediateSigma) {
  const auto tau = fixture("T28FIX6");
  const auto r = checks::intermediate_topology_search(tau);
  ASSERT_TRUE(r.hypotheses);
  ASSERT_TRUE(r.sigma.has_value());
  EXPECT_FALSE(oracle_n_scattered(tau));
  EXPECT_TRUE(oracle_n_scattered(*r.sigma));
  // alpha-open sets are exactly the sets inside int cl int of themselves.
  auto alpha_open = [&](PointSet a) {
    return a.subset_of(oracle_interior(tau, oracle_closure(tau, oracle_interior(tau, a))));
  };
  for (auto u : tau.opens()) EXPECT_TRUE(r.sigma->is_open(u));
  for (auto v : r.sigma->opens()) EXPECT_TRUE(alpha_open(v));
  EXPECT_NE(*r.sigma, tau);
  bool strictly_below_alpha = false;
  for_each_subset(6, [&](PointSet a) {
    if (alpha_open(a) && !r.sigma->is_open(a)) strictly_below_alpha = true;
  });
  EXPECT_TRUE(strictly_below_alpha);
}

TEST(MineParser, AcceptsFlatConjunctions) {
  const auto e = parse_expression(" sg_closed(A) & !sg_closed( A | B ) & T0 & open(A&B)");
  ASSERT_EQ(e.atoms.size(), 4u);
  EXPECT_TRUE(e.atoms[1].negated);
  EXPECT_EQ(e.atoms[1].operand, Operand::AUnionB);
  EXPECT_FALSE(e.atoms[2].operand.has_value());
  EXPECT_EQ(e.atoms[3].operand, Operand::AIntersectB);
  EXPECT_EQ(e.to_string(), "sg_closed(A) & !sg_closed(A|B) & T0 & open(A&B)");
}

TEST(MineParser, RejectsMalformedGoals) {
  for (const char* bad : {"", "open(A) &", "bogus(A)", "open(C)", "open(A", "open A)", "T7", "!", "open(A))"}) {
    try {
      parse_expression(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedGoal) << bad;
    }
  }
  EXPECT_THROW(mine("no-such-goal", 3), Error);
}

TEST(Mine, SgUnionFailureIsMinimalAtThreePoints) {
  EXPECT_FALSE(mine("sg-union-failure", 2).witness.has_value());
  const auto r = mine("sg-union-failure", 5);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.rechecked);
  const auto& c = *r.witness;
  EXPECT_EQ(c.space, fixture("DOUBLEPT3"));
  EXPECT_EQ(c.a, S({0}));
  EXPECT_EQ(c.b, S({1}));
  EXPECT_TRUE(oracle_sg_closed(c.space, *c.a));
  EXPECT_TRUE(oracle_sg_closed(c.space, *c.b));
  EXPECT_FALSE(oracle_sg_closed(c.space, *c.a | *c.b));
}

TEST(Mine, SgOpenAndPreopenAreIndependent) {
  auto preopen = [](const FiniteSpace& s, PointSet a) { return a.subset_of(oracle_interior(s, oracle_closure(s, a))); };
  auto sg_open = [](const FiniteSpace& s, PointSet a) { return oracle_sg_closed(s, a.complement(s.size())); };
  const auto first = mine("sg-open-not-preopen", 3);
  ASSERT_TRUE(first.witness && first.rechecked);
  EXPECT_TRUE(sg_open(first.witness->space, *first.witness->a));
  EXPECT_FALSE(preopen(first.witness->space, *first.witness->a));
  const auto second = mine("preopen-not-sg-open", 3);
  ASSERT_TRUE(second.witness && second.rechecked);
  EXPECT_TRUE(preopen(second.witness->space, *second.witness->a));
  EXPECT_FALSE(sg_open(second.witness->space, *second.witness->a));
}

TEST(Mine, HsgClosedNotNowhereDenseOnTwoPoints) {
  const auto r = mine("hsg-not-nowhere-dense", 4);
  ASSERT_TRUE(r.witness && r.rechecked);
  EXPECT_EQ(r.witness->space, indiscrete_space(2));
  EXPECT_EQ(r.witness->a, S({0}));
  EXPECT_TRUE(oracle_hsg_closed(r.witness->space, *r.witness->a));
  EXPECT_FALSE(oracle_nowhere_dense(r.witness->space, *r.witness->a));
}

TEST(Mine, SpaceLevelGoalsAndFreeExpressions) {
  const auto all_hsg = mine("all-hsg-not-indiscrete", 3);
  ASSERT_TRUE(all_hsg.witness && all_hsg.rechecked);
  EXPECT_EQ(all_hsg.witness->space, discrete_space(2));

  const auto ns = mine("n-scattered-not-hsg-scattered", 3);
  ASSERT_TRUE(ns.witness);
  EXPECT_TRUE(oracle_n_scattered(ns.witness->space));

  const auto free = mine("T0 & !T1 & nowhere_dense(A)", 3);
  ASSERT_TRUE(free.witness && free.rechecked);
  EXPECT_EQ(free.witness->space, fixture("SIERP"));
  EXPECT_EQ(free.witness->a, S({1}));

  EXPECT_FALSE(mine("T1 & !discrete", 5).witness.has_value());
  try {
    mine("sg-union-failure", 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundTooLarge);
  }
}

TEST(Mine, EveryNamedGoalCertificateRechecks) {
  for (const auto& g : named_goals()) {
    const auto r = mine(g.id, 3);
    ASSERT_TRUE(r.witness.has_value()) << g.id;
    EXPECT_TRUE(r.rechecked) << g.id;
    for (const auto& [atom, holds] : r.witness->atoms) EXPECT_TRUE(holds) << g.id << " " << atom;
  }
}

TEST(Mine, BitopBaireButNotUtterly) {
  const auto r = mine("baire-not-utterly-nondegenerate", 3);
  ASSERT_TRUE(r.witness && r.rechecked);
  const auto& c = *r.witness;
  ASSERT_TRUE(c.second && c.open_set);
  for (const auto* t : {&c.space, &*c.second}) {
    EXPECT_GT(t->opens().size(), 2u);
    EXPECT_LT(t->opens().size(), std::size_t{1} << t->size());
  }
  // Oracle: no nonempty tau1-open set is a union of (1,2)-rare points, and the
  // certificate's cover consists of (1,2)-sg-closed sets filling the open set.
  const auto& t1 = c.space;
  const auto& t2 = *c.second;
  for (auto u : t1.opens()) {
    if (u.empty()) continue;
    bool all_rare = true;
    for (auto x : u.points())
      all_rare = all_rare && oracle_interior(t2, oracle_closure(t1, PointSet::singleton(x))).empty();
    EXPECT_FALSE(all_rare);
  }
  PointSet covered;
  for (auto piece : c.sg_cover) {
    const PointSet core = oracle_interior(t2, oracle_closure(t1, piece));
    for_each_subset(t1.size(), [&](PointSet u) {
      if (piece.subset_of(u) && oracle_semi_open(t1, u)) EXPECT_TRUE(core.subset_of(u));
    });
    covered = covered | piece;
  }
  EXPECT_EQ(covered, *c.open_set);
  EXPECT_THROW(mine("baire-not-utterly", 5), Error);
}

TEST(Mine, OutputIsDeterministic) {
  for (const auto& g : named_goals()) EXPECT_EQ(mine_json(mine(g.id, 3)).dump(), mine_json(mine(g.id, 3)).dump());
}

TEST(JsonIo, ParsesNamedSpaces) {
  const auto s = parse_space_json(R"({"points": ["p","a","b"], "opens": [[],["a","b"],["p","a","b"]]})");
  EXPECT_EQ(s.space, validate_topology(3, {PointSet{}, S({1, 2}), S({0, 1, 2})}));
  EXPECT_EQ(s.set_of({"a", "p"}), S({0, 1}));
  EXPECT_EQ(s.names(S({0, 2})), (std::vector<std::string>{"p", "b"}));

  auto code_of = [](const std::string& text) -> std::optional<ErrorCode> {
    try {
      parse_space_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  EXPECT_EQ(code_of("{"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"points": ["a"]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"points": ["a","a"], "opens": []})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"points": ["a"], "opens": [[], ["z"]]})"), ErrorCode::OutOfRangePoint);
  EXPECT_EQ(code_of(R"({"points": ["a","b"], "opens": [[],["a"],["b"]]})"), ErrorCode::NotClosedUnderUnion);
  EXPECT_EQ(code_of(R"({"points": ["a","b"], "opens": [["a"]]})"), ErrorCode::MissingEmptyOrFull);
}
