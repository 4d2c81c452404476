#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "topolab/classes.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/fixtures.hpp"
#include "topolab/symbolic.hpp"

namespace topolab {

enum class CheckScope { FiniteExhaustive, Fixture, Symbolic };

inline std::string_view to_string(CheckScope scope) {
  switch (scope) {
    case CheckScope::FiniteExhaustive: return "finite_exhaustive";
    case CheckScope::Fixture: return "fixture";
    case CheckScope::Symbolic: return "symbolic";
  }
  return "";
}

/// Everything the finite checks share for one space: X1, the flags of every
/// subset (fast characterizations), and the space report on demand.
class SpaceContext {
 public:
  explicit SpaceContext(const FiniteSpace& s) : space(s), x1(nowhere_dense_points(s)) {
    flags.reserve(std::size_t{1} << s.size());
    for_each_subset(s.size(), [&](PointSet a) { flags.push_back(set_flags(s, a, x1)); });
  }

  const FiniteSpace& space;
  const PointSet x1;
  std::vector<SetFlags> flags;

  std::size_t n() const { return space.size(); }
  const SetFlags& at(PointSet a) const { return flags[a.bits()]; }
  const SpaceReport& report() {
    if (!report_) report_ = space_report(space);
    return *report_;
  }

 private:
  std::optional<SpaceReport> report_;
};

/// A failed check explains itself; nullopt means the check holds.
using Finding = std::optional<std::string>;

struct TheoremCheck {
  std::string_view id;
  std::string_view statement;
  CheckScope scope;
  Finding (*finite)(SpaceContext&) = nullptr;  // FiniteExhaustive
  Finding (*global)() = nullptr;               // Fixture, Symbolic
};

namespace checks {

inline std::string set_str(std::string_view name, PointSet a) { return std::string(name) + "=" + a.to_string(); }

inline bool sg_open_def(const FiniteSpace& s, PointSet a) { return is_sg_closed_def(s, a.complement(s.size())); }

/// First subset (ascending) where `bad` holds, rendered by `show`.
template <class Bad>
Finding first_bad_subset(std::size_t n, Bad bad, std::string_view name = "A") {
  Finding out;
  for_each_subset(n, [&](PointSet a) {
    if (!out && bad(a)) out = set_str(name, a);
  });
  return out;
}

inline Finding t1(SpaceContext& c) {
  // On a finite ground, closure under arbitrary intersections is closure
  // under pairwise intersections plus the empty intersection X.
  const auto& s = c.space;
  if (!is_sg_closed_def(s, s.full())) return "X is not sg-closed";
  Finding out;
  for_each_subset(c.n(), [&](PointSet a) {
    if (out || !c.at(a).sg_closed) return;
    for_each_subset(c.n(), [&](PointSet b) {
      if (!out && a <= b && c.at(b).sg_closed && !is_sg_closed_def(s, a & b))
        out = set_str("A", a) + " " + set_str("B", b);
    });
  });
  return out;
}

inline Finding t2(SpaceContext& c) {
  const auto& s = c.space;
  return first_bad_subset(c.n(), [&](PointSet a) {
    const bool def = is_sg_closed_def(s, a);
    const bool via_scl = (c.x1 & semi_closure(s, a)).subset_of(a);
    const bool via_int_cl = (c.x1 & s.interior(s.closure(a))).subset_of(a);
    return def != via_scl || def != via_int_cl;
  });
}

inline Finding t3(SpaceContext& c) {
  const auto& s = c.space;
  const PointSet x2 = c.x1.complement(c.n());
  return first_bad_subset(c.n(), [&](PointSet a) {
    const bool def = sg_open_def(s, a);
    if (def != (a & c.x1).subset_of(semi_interior(s, a))) return true;
    return a.subset_of(x2) && !def;
  });
}

inline Finding t4(SpaceContext& c) {
  const auto& s = c.space;
  for (std::size_t x = 0; x < c.n(); ++x) {
    const PointSet pt = PointSet::singleton(x);
    if (!is_sg_closed_def(s, pt) && !sg_open_def(s, pt)) return "x=" + std::to_string(x);
  }
  return std::nullopt;
}

inline Finding t5(SpaceContext& c) {
  const auto& s = c.space;
  for (std::size_t x = 0; x < c.n(); ++x) {
    const PointSet pt = PointSet::singleton(x);
    const bool in_x2 = sg_open_def(s, pt) && is_preopen(s, pt);
    if (c.x1.contains(x) == in_x2) return "x=" + std::to_string(x);
  }
  return std::nullopt;
}

inline Finding t6(SpaceContext& c) {
  const auto& s = c.space;
  return first_bad_subset(c.n(), [&](PointSet a) {
    return is_hsg_closed_def(s, a) != (c.x1 & s.interior(s.closure(a))).empty();
  });
}

inline Finding t7(SpaceContext& c) {
  const auto& s = c.space;
  return first_bad_subset(c.n(), [&](PointSet a) {
    const bool sg = is_sg_closed_def(s, a);
    const bool beta_closed = s.interior(s.closure(s.interior(a))).subset_of(a);
    return (is_semi_closed(s, a) && !sg) || (sg && !beta_closed);
  });
}

inline Finding t8(SpaceContext& c) {
  const auto& s = c.space;
  const bool indiscrete = s.opens().size() == (c.n() == 0 ? 1u : 2u);
  const bool all_hsg = is_hsg_closed_def(s, s.full());
  if (indiscrete == all_hsg) return std::nullopt;
  return std::string("indiscrete=") + (indiscrete ? "true" : "false") +
         " every-subset-hsg-closed=" + (all_hsg ? "true" : "false");
}

inline Finding t9(SpaceContext& c) {
  const auto& s = c.space;
  Finding out;
  for_each_subset(c.n(), [&](PointSet a) {
    if (out || !c.at(a).sg_closed) return;
    for (auto f : s.closed_sets())
      if (!out && !is_sg_closed_def(s, a | f)) out = set_str("A", a) + " " + set_str("F", f);
  });
  return out;
}

inline Finding t10(SpaceContext& c) {
  const auto& s = c.space;
  Finding out;
  for_each_subset(c.n(), [&](PointSet a) {
    if (out || !c.at(a).sg_open) return;
    for (auto u : s.opens())
      if (!out && !sg_open_def(s, a & u)) out = set_str("A", a) + " " + set_str("U", u);
  });
  return out;
}

inline Finding t11(SpaceContext& c) {
  const auto& s = c.space;
  return first_bad_subset(c.n(), [&](PointSet a) {
    return is_regular_open(s, a) != (is_alpha_open(s, a) && is_sg_closed_def(s, a));
  });
}

inline Finding t12(SpaceContext& c) {
  const auto& s = c.space;
  Finding out;
  for (auto a : s.opens()) {
    if (out) break;
    if (!c.at(a).sg_closed) continue;
    const FiniteSpace sub = subspace(s, a);
    for_each_subset(sub.size(), [&](PointSet local) {
      const PointSet b = lift_from_subspace(a, local);
      if (!out && is_sg_closed_def(sub, local) != is_sg_closed_def(s, b)) out = set_str("A", a) + " " + set_str("B", b);
    });
  }
  return out;
}

inline Finding t13(SpaceContext& c) {
  // Regular-open sets are delta-open, so the delta-open sweep covers both forms.
  const auto& s = c.space;
  Finding out;
  for_each_subset(c.n(), [&](PointSet r) {
    if (out || !c.at(r).delta_open) return;
    const FiniteSpace sub = subspace(s, r);
    for_each_subset(sub.size(), [&](PointSet local) {
      if (out || !is_sg_closed_def(sub, local.complement(sub.size()))) return;
      const PointSet a = lift_from_subspace(r, local);
      if (!sg_open_def(s, a)) out = set_str("R", r) + " " + set_str("A", a);
    });
  });
  return out;
}

inline Finding t14(SpaceContext& c) {
  const auto& s = c.space;
  bool semi_td = true;
  for (std::size_t x = 0; x < c.n(); ++x) {
    const PointSet pt = PointSet::singleton(x);
    if (!s.is_open(pt) && !is_nowhere_dense(s, pt)) semi_td = false;
  }
  bool sg_is_semi_closed = true;
  for_each_subset(c.n(), [&](PointSet a) {
    if (is_sg_closed_def(s, a) && !is_semi_closed(s, a)) sg_is_semi_closed = false;
  });
  if (semi_td == sg_is_semi_closed) return std::nullopt;
  return std::string("semi-TD=") + (semi_td ? "true" : "false");
}

inline Finding t15(SpaceContext& c) {
  const auto r = semi_normal_check(c.space);
  if (r.semi_normal == r.sg_separation) return std::nullopt;
  std::string w = std::string("semi_normal=") + (r.semi_normal ? "true" : "false");
  if (r.witness) w += " " + set_str("F", r.witness->first) + " " + set_str("G", r.witness->second);
  return w;
}

inline Finding t16(SpaceContext& c) {
  const PointSet x2 = c.x1.complement(c.n());
  for (auto u : c.space.opens())
    if (!u.empty() && !u.intersects(x2)) return set_str("U", u) + " misses X2";
  const auto cell = cellular_families(c.space);
  for (auto v : cell.witness)
    if (!v.subset_of(x2)) return set_str("cellular member", v) + " leaves X2";
  return std::nullopt;
}

inline Finding t17(SpaceContext& c) {
  const auto& r = c.report();
  if (r.scattered == (r.alpha_scattered && r.n_scattered)) return std::nullopt;
  return "scattered=" + std::to_string(r.scattered) + " alpha=" + std::to_string(r.alpha_scattered) +
         " N=" + std::to_string(r.n_scattered);
}

inline Finding t18(SpaceContext& c) {
  std::string values;
  bool first = true, agree = true, reference = false;
  for (const auto& clause : kNScatteredClauses) {
    const bool v = clause.holds(c.space);
    if (first) reference = v;
    agree = agree && v == reference;
    values += std::string(first ? "" : " ") + std::string(clause.label) + "=" + (v ? "1" : "0");
    first = false;
  }
  if (agree) return std::nullopt;
  return values;
}

inline Finding t19(SpaceContext& c) {
  const auto& s = c.space;
  const bool ns_space = is_n_scattered(s);
  if (ns_space) {
    auto bad = first_bad_subset(c.n(), [&](PointSet a) { return !is_n_scattered_subspace(s, a); }, "subspace");
    if (bad) return bad;
  }
  const auto k = ns_kernel(s);
  if (ns_space != (k.ns == s.full())) return set_str("NS", k.ns);
  if (!k.np.empty()) {
    // NP contains a nonempty crowded nowhere dense set.
    bool found = false;
    for_each_subset(k.np, [&](PointSet a) {
      if (!a.empty() && is_nowhere_dense(s, a) && isolated_points(s, a).empty()) found = true;
    });
    if (!found) return set_str("NP", k.np) + " has no crowded nowhere dense subset";
  }
  for (auto u : s.opens()) {
    if (!is_n_scattered_subspace(s, u)) continue;
    for (auto v : s.opens())
      if (is_n_scattered_subspace(s, v) && !is_n_scattered_subspace(s, u | v)) return set_str("U", u) + " " + set_str("V", v);
  }
  return std::nullopt;
}

inline Finding t20(SpaceContext& c) {
  const auto& s = c.space;
  PointSet covered;
  for (auto u : s.opens())
    if (is_n_scattered_subspace(s, u)) covered = covered | u;
  if (covered == s.full() && !is_n_scattered(s)) return std::string("locally N-scattered but not N-scattered");
  return std::nullopt;
}

inline Finding t21(SpaceContext& c) {
  const auto& r = c.report();
  bool finite_scattered = true;
  for_each_subset(c.n(), [&](PointSet a) { finite_scattered = finite_scattered && c.at(a).scattered; });
  if (r.t0 == finite_scattered) return std::nullopt;
  return std::string("T0=") + (r.t0 ? "true" : "false");
}

inline Finding t22(SpaceContext& c) {
  const auto& r = c.report();
  bool finite_discrete = true;
  for_each_subset(c.n(), [&](PointSet a) { finite_discrete = finite_discrete && c.at(a).discrete_subset; });
  if (r.t1 == finite_discrete) return std::nullopt;
  return std::string("T1=") + (r.t1 ? "true" : "false");
}

inline Finding t23(SpaceContext& c) {
  const auto& s = c.space;
  const bool t0 = c.report().t0;
  Finding out;
  for_each_subset(c.n(), [&](PointSet a) {
    if (out || !c.at(a).scattered) return;
    for_each_subset(c.n(), [&](PointSet b) {
      if (out) return;
      const bool union_scattered = c.at(a | b).scattered;
      // In T0 spaces: scattered plus finite is scattered, and scattered sets form an ideal.
      if (t0 && !union_scattered) out = set_str("S", a) + " " + set_str("F", b);
      // Without separation: disjoint scattered sets, one with an open
      // neighbourhood missing the other, have scattered union.
      if (!out && c.at(b).scattered && !a.intersects(b) && !union_scattered) {
        for (auto u : s.opens())
          if (!out && a.subset_of(u) && !u.intersects(b)) out = set_str("A", a) + " " + set_str("B", b);
      }
    });
  });
  return out;
}

inline Finding t24(SpaceContext& c) {
  const auto& r = c.report();
  auto includes = [](const std::vector<PointSet>& big, const std::vector<PointSet>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  if (!includes(r.ideal_d, r.ideal_cd)) return std::string("CD not inside D");
  if (!includes(r.ideal_s, r.ideal_d)) return std::string("D not inside S");
  if (r.alpha_space && !includes(r.ideal_cd, r.ideal_n)) return std::string("alpha-space with N not inside CD");
  if (r.alpha_space && !r.n_scattered) return std::string("alpha-space not N-scattered");
  if (r.submaximal && !r.alpha_space) return std::string("submaximal but not an alpha-space");
  if (r.globally_disconnected && !r.alpha_space) return std::string("globally disconnected but not an alpha-space");
  return std::nullopt;
}

inline Finding t25(SpaceContext& c) {
  const auto& r = c.report();
  const bool no_nowhere_dense = r.ideal_n.size() == 1;
  if (r.globally_disconnected != (r.extremally_disconnected && r.alpha_space))
    return std::string("globally disconnected mismatch");
  if (r.partition != no_nowhere_dense) return std::string("partition mismatch");
  if (r.partition && !r.n_scattered) return std::string("partition space not N-scattered");
  if (r.discrete && !r.partition) return std::string("discrete but not partition");
  if (r.globally_disconnected && !r.n_scattered) return std::string("globally disconnected but not N-scattered");
  return std::nullopt;
}

inline Finding t26(SpaceContext& c) {
  const auto& r = c.report();
  if (r.t1 && r.crowded && r.n_scattered != (r.ideal_n == r.ideal_s)) return std::string("T1 crowded mismatch");
  // Finite spaces are C2, so T0 forces N-scatteredness.
  if (r.t0 && !r.n_scattered) return std::string("T0 but not N-scattered");
  return std::nullopt;
}

inline Finding t27(SpaceContext& c) {
  const auto& s = c.space;
  const IdealSpec ideal{perfect_nowhere_dense_sets(s)};
  const FiniteSpace gamma = expand_by_ideal(s, ideal);
  for (auto u : s.opens())
    if (!gamma.is_open(u)) return set_str("lost open", u);
  for (auto m : ideal_members(c.n(), ideal))
    if (!gamma.is_closed(m)) return set_str("ideal member not closed", m);
  if (!is_n_scattered(gamma)) return "tau[I]=" + gamma.to_string() + " not N-scattered";
  return std::nullopt;
}

inline Finding t29(SpaceContext& c) {
  const auto& r = c.report();
  if (r.homogeneous && !r.crowded && !r.discrete) return std::string("homogeneous, neither crowded nor discrete");
  return std::nullopt;
}

inline Finding t31(SpaceContext& c) {
  const auto& r = c.report();
  if (r.so_topology == r.extremally_disconnected) return std::nullopt;
  return std::string("SO topology=") + (r.so_topology ? "true" : "false");
}

inline Finding t32(SpaceContext& c) {
  const auto& s = c.space;
  return first_bad_subset(c.n(), [&](PointSet a) {
    const bool hsg = is_hsg_closed_def(s, a);
    return (is_nowhere_dense(s, a) && !hsg) || (hsg && !is_sg_closed_def(s, a));
  });
}

inline Finding t33(SpaceContext& c) {
  const auto& r = c.report();
  if (r.scattered && !r.hsg_scattered) return std::string("scattered but not hsg-scattered");
  if (r.hsg_scattered && !r.n_scattered) return std::string("hsg-scattered but not N-scattered");
  return std::nullopt;
}

/// The intermediate topology search on the pinned six-point space: adds
/// alpha-open sets to tau, fewest generators first, until an N-scattered
/// topology strictly between tau and its alpha-topology appears.
struct IntermediateSearch {
  bool hypotheses = false;
  std::optional<FiniteSpace> sigma;
  std::vector<PointSet> generators;
};

inline IntermediateSearch intermediate_topology_search(const FiniteSpace& tau) {
  IntermediateSearch out;
  const auto kernel = ns_kernel(tau);
  bool non_discrete_nowhere_dense = false;
  for_each_subset(kernel.ns, [&](PointSet a) {
    if (!a.empty() && is_nowhere_dense(tau, a) && isolated_points(tau, a) != a) non_discrete_nowhere_dense = true;
  });
  out.hypotheses = !kernel.np.empty() && non_discrete_nowhere_dense;
  const FiniteSpace alpha = derived_topology(tau, DerivedKind::Alpha);
  std::vector<PointSet> extra;
  for (auto v : alpha.opens())
    if (!tau.is_open(v)) extra.push_back(v);
  const std::size_t k = extra.size();
  for (std::size_t size = 1; size <= std::min<std::size_t>(k, 3) && !out.sigma; ++size) {
    // Subsets of `extra` of the given size, in lexicographic index order.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (!out.sigma) {
      std::vector<PointSet> sub(tau.opens().begin(), tau.opens().end());
      for (auto i : idx) sub.push_back(extra[i]);
      const FiniteSpace sigma = generate_topology(tau.size(), sub);
      if (sigma != tau && sigma != alpha && is_n_scattered(sigma)) {
        out.sigma = sigma;
        for (auto i : idx) out.generators.push_back(extra[i]);
        break;
      }
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

inline Finding t28() {
  const auto r = intermediate_topology_search(fixture("T28FIX6"));
  if (!r.hypotheses) return std::string("T28FIX6 does not meet the hypotheses");
  if (!r.sigma) return std::string("no intermediate N-scattered topology found");
  return std::nullopt;
}

inline Finding t30() {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& [name, s] : {std::pair{"LRAY", left_ray_space(n)}, std::pair{"RRAY", right_ray_space(n)}}) {
      const auto r = space_report(s);
      const std::string where = std::string(name) + std::to_string(n);
      if (!r.t0 || !r.td) return where + " not T0/TD";
      if (n > 1 && r.t1) return where + " is T1";
      if (!r.scattered || r.ideal_s.size() != (std::size_t{1} << n)) return where + " not scattered";
    }
    // The least element of a nonempty set is isolated for the left rays, the
    // largest for the right rays.
    const auto lray = left_ray_space(n), rray = right_ray_space(n);
    Finding bad;
    for_each_subset(n, [&](PointSet a) {
      if (bad || a.empty()) return;
      const auto pts = a.points();
      if (!isolated_points(lray, a).contains(pts.front())) bad = "LRAY" + std::to_string(n) + " " + set_str("A", a);
      if (!isolated_points(rray, a).contains(pts.back())) bad = "RRAY" + std::to_string(n) + " " + set_str("A", a);
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

inline SymbolicSpace sym(SymbolicFamily f) { return {f}; }

inline Finding s1() {
  const auto s = sym(SymbolicFamily::Cofinite);
  const auto r = sym_space_report(s);
  if (!r.sg_compact || !r.c3) return std::string("cofinite not sg-compact");
  if (r.ideal_n.text != "finite sets" || r.ideal_s.text != "finite sets") return std::string("cofinite ideals");
  if (!r.crowded || !r.hsg_scattered || r.scattered || !r.n_scattered) return std::string("cofinite class flags");
  // Hereditary on the representable infinite subspaces.
  for (const auto& a : probe_sets(s))
    if (!a.is_finite() && !sym_space_report(sym_subspace(s, a)).sg_compact) return "subspace " + a.to_string(s);
  return std::nullopt;
}

inline Finding s2() {
  const auto s = sym(SymbolicFamily::ParticularPoint);
  const auto r = sym_space_report(s);
  if (!r.sg_compact || sg_compact_by_covers(s) != std::optional<bool>(true)) return std::string("pp not sg-compact");
  for (const auto& a : probe_sets(s)) {
    const bool expected = a.trace.empty();  // exactly the empty set and {p}
    if (sym_set_flags(s, a).hsg_closed != expected) return "hsg-closed mismatch at " + a.to_string(s);
  }
  const auto sub = sym_subspace(s, {false, Trace::all()});
  if (sym_space_report(sub).sg_compact || sg_compact_by_covers(sub) != std::optional<bool>(false))
    return std::string("open subspace A is sg-compact");
  return std::nullopt;
}

inline Finding s3() {
  const auto r = sym_space_report(sym(SymbolicFamily::OnePointCompactification));
  if (!r.c2 || !r.cellular_infinite || r.semi_compact || r.c3) return std::string("opc flags");
  return std::nullopt;
}

inline Finding s4() {
  const auto r = sym_space_report(sym(SymbolicFamily::LeftRay));
  if (!r.scattered || r.ideal_s.text != "all sets") return std::string("left ray flags");
  return std::nullopt;
}

inline Finding s5() {
  const auto r = sym_space_report(sym(SymbolicFamily::RightRay));
  if (!r.crowded || r.ideal_s.text != "finite sets") return std::string("right ray flags");
  return std::nullopt;
}

inline Finding s6() {
  const auto r = sym_space_report(sym(SymbolicFamily::IndiscreteInfinite));
  if (!r.n_scattered || r.hsg_scattered) return std::string("indiscrete flags");
  return std::nullopt;
}

}  // namespace checks

inline const std::vector<TheoremCheck>& theorem_registry() {
  using S = CheckScope;
  static const std::vector<TheoremCheck> registry{
      {"T1", "An arbitrary intersection of sg-closed sets is sg-closed.", S::FiniteExhaustive, checks::t1},
      {"T2", "A is sg-closed iff X1 & sCl(A) <= A iff X1 & Int Cl(A) <= A.", S::FiniteExhaustive, checks::t2},
      {"T3", "A is sg-open iff A & X1 <= sInt(A); every subset of X2 is sg-open.", S::FiniteExhaustive, checks::t3},
      {"T4", "Every space is sg-T1/2: each singleton is sg-open or sg-closed.", S::FiniteExhaustive, checks::t4},
      {"T5", "X2 is the set of points whose singleton is sg-open and locally dense.", S::FiniteExhaustive, checks::t5},
      {"T6", "A is hsg-closed iff X1 & Int Cl(A) is empty.", S::FiniteExhaustive, checks::t6},
      {"T7", "Semi-closed implies sg-closed implies beta-closed.", S::FiniteExhaustive, checks::t7},
      {"T8", "A space is indiscrete iff every subset is hsg-closed.", S::FiniteExhaustive, checks::t8},
      {"T9", "If A is sg-closed and B is closed then A | B is sg-closed.", S::FiniteExhaustive, checks::t9},
      {"T10", "The intersection of an sg-open set and an open set is sg-open.", S::FiniteExhaustive, checks::t10},
      {"T11", "A is regular open iff A is alpha-open and sg-closed.", S::FiniteExhaustive, checks::t11},
      {"T12", "For A open and sg-closed and B <= A: B is sg-closed in A iff in X.", S::FiniteExhaustive, checks::t12},
      {"T13", "A subset sg-open in a regular-open or delta-open subspace is sg-open in X.", S::FiniteExhaustive,
       checks::t13},
      {"T14", "semi-TD (each singleton open or nowhere dense) iff every sg-closed set is semi-closed.",
       S::FiniteExhaustive, checks::t14},
      {"T15", "Semi-normal iff disjoint semi-closed sets lie in disjoint sg-open sets.", S::FiniteExhaustive,
       checks::t15},
      {"T16", "Cellular families live in X2: every nonempty open set meets X2 and a maximum cellular family lies in X2.",
       S::FiniteExhaustive, checks::t16},
      {"T17", "Scattered iff alpha-scattered and N-scattered.", S::FiniteExhaustive, checks::t17},
      {"T18", "The eleven characterizations (a)-(k) of N-scatteredness are equivalent.", S::FiniteExhaustive,
       checks::t18},
      {"T19", "N-scatteredness is hereditary; NS is the largest open N-scattered set, NS = X iff N-scattered, and "
              "a nonempty NP contains a nonempty crowded nowhere dense set.",
       S::FiniteExhaustive, checks::t19},
      {"T20", "If every point has an N-scattered open neighbourhood the space is N-scattered.", S::FiniteExhaustive,
       checks::t20},
      {"T21", "T0 iff every finite set is scattered.", S::FiniteExhaustive, checks::t21},
      {"T22", "T1 iff every finite set is discrete.", S::FiniteExhaustive, checks::t22},
      {"T23", "In T0 spaces S | F is scattered for scattered S and finite F, so scattered sets form an ideal; disjoint "
              "scattered sets, one with an open neighbourhood missing the other, have scattered union.",
       S::FiniteExhaustive, checks::t23},
      {"T24", "CD <= D <= S; alpha-spaces have N <= CD and are N-scattered; submaximal and globally disconnected "
              "spaces are alpha-spaces.",
       S::FiniteExhaustive, checks::t24},
      {"T25", "Globally disconnected iff extremally disconnected alpha-space; partition iff no nonempty nowhere dense "
              "set; discrete, partition and globally disconnected spaces are N-scattered.",
       S::FiniteExhaustive, checks::t25},
      {"T26", "A T1 crowded space is N-scattered iff N = S; every C2 T0 space is N-scattered.", S::FiniteExhaustive,
       checks::t26},
      {"T27", "tau[I], with I the subsets of perfect nowhere dense sets, is N-scattered.", S::FiniteExhaustive,
       checks::t27},
      {"T28", "A non-N-scattered space whose NS holds a nonempty non-discrete nowhere dense set admits sigma with "
              "tau < sigma < tau^alpha and (X, sigma) N-scattered (on T28FIX6).",
       S::Fixture, nullptr, checks::t28},
      {"T29", "A homogeneous space is crowded or discrete.", S::FiniteExhaustive, checks::t29},
      {"T30", "Left and right ray topologies are T0 and TD, not T1 beyond one point; the least (resp. largest) point "
              "of a set is isolated in it (rays on n <= 8 points).",
       S::Fixture, nullptr, checks::t30},
      {"T31", "SO(X) is a topology iff X is extremally disconnected.", S::FiniteExhaustive, checks::t31},
      {"T32", "Nowhere dense implies hsg-closed implies sg-closed.", S::FiniteExhaustive, checks::t32},
      {"T33", "Scattered implies hsg-scattered implies N-scattered.", S::FiniteExhaustive, checks::t33},
      {"S1", "The cofinite space is sg-compact, crowded, hsg-scattered, not scattered, with N = S = finite sets.",
       S::Symbolic, nullptr, checks::s1},
      {"S2", "The particular-point space is sg-compact with hsg-closed sets {}, {p}; its open subspace A is not.",
       S::Symbolic, nullptr, checks::s2},
      {"S3", "The one-point compactification of a countable discrete space is C2 with an infinite cellular family, "
             "hence neither semi-compact nor C3.",
       S::Symbolic, nullptr, checks::s3},
      {"S4", "The left ray space on omega is scattered with S = all sets.", S::Symbolic, nullptr, checks::s4},
      {"S5", "The right ray space on omega is crowded with S = finite sets.", S::Symbolic, nullptr, checks::s5},
      {"S6", "The countable indiscrete space is N-scattered but not hsg-scattered.", S::Symbolic, nullptr, checks::s6},
  };
  return registry;
}

/// Where each result of the theory is exercised: registry checks, miner
/// goals, or an out-of-scope reason.
struct CoverageEntry {
  std::string_view topic;
  std::string_view checks;  // comma-separated registry ids
  std::string_view note;
};

inline const std::vector<CoverageEntry>& coverage_map() {
  static const std::vector<CoverageEntry> map{
      {"arbitrary intersections of sg-closed sets", "T1", ""},
      {"sg-closed characterizations via X1", "T2", ""},
      {"sg-open characterization; subsets of X2 are sg-open", "T3", ""},
      {"every space is sg-T1/2", "T4", ""},
      {"decomposition X = X1 u X2", "T5", ""},
      {"hsg-closed characterization", "T6", ""},
      {"semi-closed => sg-closed => beta-closed", "T7", ""},
      {"indiscrete iff every subset hsg-closed", "T8", "false as stated; DISC(2) refutes it"},
      {"additivity: sg-closed u closed, sg-open n open", "T9,T10", ""},
      {"a union of two sg-closed sets need not be sg-closed", "", "miner goal sg-union-failure"},
      {"sg-open and preopen are independent", "", "miner goals sg-open-not-preopen, preopen-not-sg-open"},
      {"regular open iff alpha-open and sg-closed", "T11", ""},
      {"open sg-closed, regular-open and delta-open subspace transfer", "T12,T13", ""},
      {"semi-TD iff sg-closed sets are semi-closed", "T14", ""},
      {"semi-normal iff sg-open separation", "T15", ""},
      {"cellular families and X2", "T16,S3", ""},
      {"sg-compact iff C3; hereditary on regular-open sets", "S1,S2", "finite spaces are trivially sg-compact"},
      {"SO(X) a topology iff extremally disconnected", "T31", ""},
      {"nowhere dense => hsg-closed => sg-closed", "T32", ""},
      {"scattered => hsg-scattered => N-scattered", "T33,S6", ""},
      {"scattered iff alpha-scattered and N-scattered", "T17", ""},
      {"the eleven N-scatteredness characterizations", "T18", ""},
      {"NS and NP; heredity of N-scatteredness", "T19", ""},
      {"local N-scatteredness", "T20", ""},
      {"T0 and T1 via finite sets", "T21,T22", ""},
      {"scattered sets form an ideal in T0 spaces", "T23", ""},
      {"alpha-spaces, submaximal and globally disconnected spaces", "T24,T25", ""},
      {"crowded T1 spaces; C2 T0 spaces are N-scattered", "T26", ""},
      {"the expansion tau[I] by perfect nowhere dense sets", "T27", ""},
      {"intermediate topologies between tau and tau^alpha", "T28", ""},
      {"homogeneous spaces are crowded or discrete", "T29", ""},
      {"ray topologies", "T30,S4,S5", ""},
      {"cofinite, particular-point and indiscrete examples", "S1,S2,S6", ""},
      {"bitopological rare, meager, sg-meager, Baire and utterly Baire", "",
       "bitop module; miner goals baire-not-utterly*"},
      {"comparison of Baire notions; completeness conditions", "", "undecided; miner goals only"},
      {"finite unions of sg-closed sets", "", "open problem; miner goal sgo-topology only"},
      {"density topology results", "", "out of scope: measure-theoretic"},
      {"rim-scatteredness of the real line", "", "out of scope: needs the Cantor set"},
      {"pre-sg-continuous functions and products of T_gs spaces", "", "out of scope: T_gs is never defined"},
      {"pre-T1/2 spaces", "", "out of scope: pre-T1/2 is never defined"},
      {"beta-compact spaces", "", "out of scope; only beta-closedness is checked (T7)"},
  };
  return map;
}

inline const TheoremCheck& find_check(std::string_view id) {
  for (const auto& c : theorem_registry())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownCheckId, std::string(id));
}

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "";
}

struct CheckOutcome {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;         // least failing space and sets, when failed
  std::size_t spaces_examined = 0;
};

struct VerificationReport {
  std::size_t n_max = 0;
  std::vector<CheckOutcome> checks;
  std::size_t spaces_examined = 0;
  double wall_seconds = 0;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.status != CheckStatus::Fail; });
  }
  const CheckOutcome& outcome(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return c;
    throw Error(ErrorCode::UnknownCheckId, std::string(id));
  }
};

struct VerifyOptions {
  std::size_t n_max = 3;
  std::vector<std::string> ids;  // empty: every check
  unsigned workers = 1;
  bool finite_only = false;  // fixture and symbolic checks reported as skipped
};

/// Runs the selected checks over every labeled topology on 0..n_max points
/// (finite scope) and on their fixed targets (fixture and symbolic scope).
/// Workers split the spaces; each finite check reports the least failing
/// space in canonical order, so the report does not depend on the worker count.
inline VerificationReport verify(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.n_max < 1) throw Error(ErrorCode::BadSize, "verify needs n >= 1");
  if (options.n_max > 5) throw Error(ErrorCode::GroundTooLarge, "verify is limited to n <= 5");

  std::vector<const TheoremCheck*> selected;
  if (options.ids.empty()) {
    for (const auto& c : theorem_registry()) selected.push_back(&c);
  } else {
    for (const auto& id : options.ids) {
      const TheoremCheck* c = &find_check(id);
      if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
    }
  }

  std::vector<FiniteSpace> spaces;
  for (std::size_t k = 0; k <= options.n_max; ++k)
    for (auto& s : enumerate_topologies(k, {.workers = std::max(1u, options.workers)})) spaces.push_back(std::move(s));

  std::vector<std::size_t> finite_idx;
  for (std::size_t i = 0; i < selected.size(); ++i)
    if (selected[i]->scope == CheckScope::FiniteExhaustive) finite_idx.push_back(i);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::atomic<std::size_t>> first_fail(selected.size());
  for (auto& f : first_fail) f = kNone;
  std::vector<std::string> witness(selected.size());
  std::mutex witness_mutex;
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 16;

  auto work = [&] {
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= spaces.size()) return;
      const std::size_t end = std::min(spaces.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        std::optional<SpaceContext> ctx;
        for (auto ci : finite_idx) {
          if (first_fail[ci].load() < i) continue;  // an earlier space already fails this check
          if (!ctx) ctx.emplace(spaces[i]);
          auto finding = selected[ci]->finite(*ctx);
          if (!finding) continue;
          std::lock_guard lock(witness_mutex);
          if (i < first_fail[ci].load()) {
            first_fail[ci] = i;
            witness[ci] = spaces[i].to_string() + ": " + *finding;
          }
        }
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  VerificationReport report;
  report.n_max = options.n_max;
  report.spaces_examined = spaces.size();
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const auto& check = *selected[i];
    CheckOutcome out;
    out.id = std::string(check.id);
    if (check.scope == CheckScope::FiniteExhaustive) {
      out.spaces_examined = spaces.size();
      if (first_fail[i].load() != kNone) {
        out.status = CheckStatus::Fail;
        out.witness = witness[i];
      }
    } else if (options.finite_only) {
      out.status = CheckStatus::Skipped;
    } else {
      out.spaces_examined = 1;
      if (auto finding = check.global()) {
        out.status = CheckStatus::Fail;
        out.witness = *finding;
      }
    }
    report.checks.push_back(std::move(out));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace topolab
