// One PASS/FAIL line per acceptance criterion. Exits nonzero when a criterion
// fails that is not listed in kKnownUnattainable.
#include <chrono>
#include <iostream>
#include <set>
#include <string>

#include "topolab/topolab.hpp"

using namespace topolab;

namespace {

// Criterion 3 asks T8 to pass, but its literal statement is false (DISC(2)).
const std::set<int> kKnownUnattainable{3};

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Oracles from the open-set list only.
PointSet o_interior(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for (auto u : s.opens())
    if (u.subset_of(a)) out = out | u;
  return out;
}

PointSet o_closure(const FiniteSpace& s, PointSet a) {
  PointSet out = PointSet::full(s.size());
  for (auto u : s.opens())
    if (!u.intersects(a)) out = out & u.complement(s.size());
  return out;
}

bool o_semi_open(const FiniteSpace& s, PointSet u) {
  for (auto o : s.opens())
    if (o.subset_of(u) && u.subset_of(o_closure(s, o))) return true;
  return false;
}

PointSet o_semi_closure(const FiniteSpace& s, PointSet a) {
  PointSet out = PointSet::full(s.size());
  for_each_subset(s.size(), [&](PointSet f) {
    if (a.subset_of(f) && o_semi_open(s, f.complement(s.size()))) out = out & f;
  });
  return out;
}

bool o_sg_closed(const FiniteSpace& s, PointSet a) {
  const PointSet scl = o_semi_closure(s, a);
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet u) {
    if (a.subset_of(u) && o_semi_open(s, u) && !scl.subset_of(u)) ok = false;
  });
  return ok;
}

bool o_hsg_closed(const FiniteSpace& s, PointSet a) {
  bool ok = true;
  for_each_subset(a, [&](PointSet b) { ok = ok && o_sg_closed(s, b); });
  return ok;
}

PointSet o_x1(const FiniteSpace& s) {
  PointSet out;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (o_interior(s, o_closure(s, PointSet::singleton(x))).empty()) out = out | PointSet::singleton(x);
  return out;
}

bool is_topology(std::size_t n, const std::vector<PointSet>& family) {
  std::set<Mask> members;
  for (auto u : family) members.insert(u.bits());
  if (!members.count(0) || !members.count(PointSet::full(n).bits())) return false;
  for (auto a : members)
    for (auto b : members)
      if (!members.count(a | b) || !members.count(a & b)) return false;
  return true;
}

std::set<std::vector<Mask>> as_sets(const std::vector<FiniteSpace>& spaces) {
  std::set<std::vector<Mask>> out;
  for (const auto& s : spaces) {
    std::vector<Mask> opens;
    for (auto u : s.opens()) opens.push_back(u.bits());
    out.insert(opens);
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const std::size_t expected[] = {1, 1, 4, 29};
  for (std::size_t n = 0; n <= 3; ++n) {
    const std::size_t subsets = std::size_t{1} << n;
    std::size_t count = 0;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
      std::vector<PointSet> family;
      for (std::size_t m = 0; m < subsets; ++m)
        if ((fam >> m) & 1U) family.emplace_back(static_cast<Mask>(m));
      if (is_topology(n, family)) ++count;
    }
    o.require(count == expected[n] && enumerate_topologies(n).size() == count,
              "brute-force count mismatch at n=" + std::to_string(n));
  }
  // n=4: every family containing {} and X, filtered for closure.
  std::set<std::vector<Mask>> brute;
  for (std::uint32_t fam = 0; fam < (1U << 14); ++fam) {
    std::vector<PointSet> family{PointSet{}, PointSet::full(4)};
    for (std::size_t m = 1; m < 15; ++m)
      if ((fam >> (m - 1)) & 1U) family.emplace_back(static_cast<Mask>(m));
    if (!is_topology(4, family)) continue;
    std::vector<Mask> opens;
    for (auto u : family) opens.push_back(u.bits());
    std::sort(opens.begin(), opens.end());
    brute.insert(opens);
  }
  o.require(brute == as_sets(enumerate_topologies(4)) && brute.size() == 355, "n=4 closure result differs");

  auto timed = [](std::size_t n) {
    const auto t = std::chrono::steady_clock::now();
    VerifyOptions v;
    v.n_max = n;
    verify(v);
    return seconds_since(t);
  };
  const double t4 = timed(4), t5 = timed(5);
  o.require(t4 < 60, "n=4 suite took " + std::to_string(t4) + " s");
  o.require(t5 < 600, "n=5 suite took " + std::to_string(t5) + " s");
  if (o.pass) o.detail = "counts 1,1,4,29,355; suite n=4 " + std::to_string(t4) + " s, n=5 " + std::to_string(t5) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate_topologies(n)) {
      const PointSet x1 = o_x1(s);
      for_each_subset(n, [&](PointSet a) {
        ++pairs;
        const bool def = is_sg_closed_def(s, a);
        const bool via_scl = (x1 & o_semi_closure(s, a)).subset_of(a);
        const PointSet icl = o_interior(s, o_closure(s, a));
        o.require(def == via_scl && def == (x1 & icl).subset_of(a), "sg discrepancy on " + s.to_string());
        o.require(is_hsg_closed_def(s, a) == (x1 & icl).empty(), "hsg discrepancy on " + s.to_string());
      });
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (space, subset) pairs, zero discrepancies";
  return o;
}

Outcome criterion3() {
  Outcome o;
  VerifyOptions v;
  v.n_max = 4;
  v.finite_only = true;
  const auto r = verify(v);
  std::string failed;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Skipped) continue;
    if (c.status == CheckStatus::Fail) failed += (failed.empty() ? "" : ", ") + c.id + " (" + c.witness + ")";
  }
  o.require(failed.empty(), "failed: " + failed);
  if (o.pass) o.detail = "all finite checks pass on " + std::to_string(r.spaces_examined) + " spaces";
  return o;
}

Outcome criterion4() {
  Outcome o;
  o.require(!mine("sg-union-failure", 2).witness, "sg-union witness below three points");
  const auto u = mine("sg-union-failure", 3);
  o.require(u.witness && u.rechecked && u.witness->space.size() == 3, "no sg-union witness at n=3");
  if (u.witness) {
    const auto& c = *u.witness;
    o.require(o_sg_closed(c.space, *c.a) && o_sg_closed(c.space, *c.b) && !o_sg_closed(c.space, *c.a | *c.b),
              "sg-union certificate fails the oracle");
  }
  const auto so = mine("sg-open-not-preopen", 3), po = mine("preopen-not-sg-open", 3);
  o.require(so.witness && so.rechecked && po.witness && po.rechecked, "independence witnesses missing");
  if (so.witness && po.witness) {
    auto preopen = [](const FiniteSpace& s, PointSet a) { return a.subset_of(o_interior(s, o_closure(s, a))); };
    auto sg_open = [](const FiniteSpace& s, PointSet a) { return o_sg_closed(s, a.complement(s.size())); };
    o.require(sg_open(so.witness->space, *so.witness->a) && !preopen(so.witness->space, *so.witness->a),
              "sg-open-not-preopen certificate fails the oracle");
    o.require(preopen(po.witness->space, *po.witness->a) && !sg_open(po.witness->space, *po.witness->a),
              "preopen-not-sg-open certificate fails the oracle");
  }
  const auto h = mine("hsg-not-nowhere-dense", 2);
  o.require(h.witness && h.rechecked, "no hsg-not-nowhere-dense witness at n=2");
  if (h.witness) {
    const auto& c = *h.witness;
    o.require(o_hsg_closed(c.space, *c.a) && !o_interior(c.space, o_closure(c.space, *c.a)).empty(),
              "hsg certificate fails the oracle");
  }
  if (o.pass)
    o.detail = "sg-union on " + u.witness->space.to_string() + " A=" + u.witness->a->to_string() +
               " B=" + u.witness->b->to_string() + ", none for n<=2; hsg on " + h.witness->space.to_string();
  return o;
}

Outcome criterion5() {
  Outcome o;
  VerifyOptions v;
  v.n_max = 1;
  v.ids = {"S1", "S2", "S3", "S4", "S5", "S6"};
  const auto r = verify(v);
  for (const auto& c : r.checks) o.require(c.status == CheckStatus::Pass, c.id + " failed: " + c.witness);
  std::size_t compared = 0;
  for (auto f : kSymbolicFamilies) {
    const SymbolicSpace s{f};
    for (std::size_t n = 4; n <= 8; ++n) {
      const auto t = truncate(s, n);
      for (const auto& a : comparison_domain(s, n)) {
        const auto sym = sym_set_flags(s, a);
        const auto fin = set_flags(t.space, embed(s, a, n));
        for (const auto& field : kSetFlagFields) {
          if (!(t.faithful.*field.member)) continue;
          ++compared;
          o.require(sym.*field.member == fin.*field.member,
                    std::string(s.name()) + " n=" + std::to_string(n) + " " + a.to_string(s) + " " +
                        std::string(field.name));
        }
      }
    }
  }
  if (o.pass) o.detail = "S1-S6 pass; " + std::to_string(compared) + " faithful flag comparisons agree for n=4..8";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto r = checks::intermediate_topology_search(fixture("T28FIX6"));
  o.require(r.hypotheses, "hypotheses do not hold on T28FIX6");
  o.require(r.sigma.has_value(), "no intermediate N-scattered topology");
  if (o.pass) o.detail = "sigma = " + r.sigma->to_string();
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto spaces = enumerate_topologies(3);
  std::size_t pairs = 0;
  for (const auto& t1 : spaces) {
    for (const auto& t2 : spaces) {
      const BitopSpace b(t1, t2);
      ++pairs;
      for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
        for_each_subset(3, [&](PointSet a) {
          const auto f = bitop_set_flags(b, i, j, a);
          o.require(!f.rare || f.sg_closed, "rare but not sg-closed");
          o.require(!f.meager || f.sg_meager, "meager but not sg-meager");
        });
      }
      const auto r = bitop_space_report(b);
      o.require((!r.utterly_12 || r.baire_12) && (!r.utterly_21 || r.baire_21), "utterly Baire but not Baire");
    }
  }
  const auto ind = bitop_space_report(BitopSpace(indiscrete_space(3), indiscrete_space(3)));
  o.require(ind.baire_12 && !ind.utterly_12, "indiscrete pair is not a Baire-but-not-utterly witness");
  if (o.pass)
    o.detail = std::to_string(pairs) + " pairs; witness INDISC(3) x INDISC(3): (1,2)-Baire, not utterly (1,2)-Baire";
  return o;
}

Outcome criterion8() {
  Outcome o;
  VerifyOptions v;
  v.n_max = 4;
  const std::string first = verification_json(verify(v), false).dump();
  o.require(verification_json(verify(v), false).dump() == first, "verify differs between runs");
  for (unsigned workers : {2u, 4u, 8u}) {
    v.workers = workers;
    o.require(verification_json(verify(v), false).dump() == first,
              "verify differs with " + std::to_string(workers) + " workers");
  }
  for (const auto& g : named_goals()) {
    const std::size_t n = g.bitop == BitopGoal::None ? 4 : 3;
    o.require(mine_json(mine(g.id, n)).dump() == mine_json(mine(g.id, n)).dump(),
              "mine differs between runs for " + std::string(g.id));
  }
  if (o.pass) o.detail = "verify (1,2,4,8 workers) and all mine goals byte-identical";
  return o;
}

}  // namespace

int main() {
  Outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                             criterion5, criterion6, criterion7, criterion8};
  int unexpected = 0;
  for (int k = 1; k <= 8; ++k) {
    const Outcome o = criteria[k - 1]();
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail;
    if (!o.pass && kKnownUnattainable.count(k)) std::cout << "  [known unattainable]";
    std::cout << std::endl;
    if (!o.pass && !kKnownUnattainable.count(k)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
