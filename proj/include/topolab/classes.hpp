#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "topolab/homeomorphism.hpp"
#include "topolab/operators.hpp"

namespace topolab {

struct Decomposition {
  PointSet x1;  // singleton nowhere dense
  PointSet x2;  // singleton locally dense
};

inline Decomposition decompose(const FiniteSpace& s) {
  const PointSet x1 = nowhere_dense_points(s);
  const PointSet x2 = x1.complement(s.size());
  for (auto x : x2.points()) {
    if (!is_preopen(s, PointSet::singleton(x))) throw std::logic_error("X2 point with a non-preopen singleton");
  }
  return {x1, x2};
}

struct ScatterReport {
  bool is_scattered = false;
  std::vector<PointSet> derivative_chain;
  PointSet kernel;
  std::size_t rank = 0;
};

inline ScatterReport scattered_check(const FiniteSpace& s, PointSet a) {
  require_within(a, s.size());
  ScatterReport r;
  r.derivative_chain = derivative_chain(s, a);
  r.kernel = r.derivative_chain.empty() ? a : r.derivative_chain.back();
  r.rank = r.derivative_chain.size();
  r.is_scattered = r.kernel.empty();
  return r;
}

enum class IdealKind { Nowhere, Scattered, Discrete, ClosedDiscrete, Finite };

inline std::vector<PointSet> ideal_family(const FiniteSpace& s, IdealKind kind) {
  std::vector<PointSet> out;
  for_each_subset(s.size(), [&](PointSet a) {
    bool in = false;
    switch (kind) {
      case IdealKind::Nowhere: in = is_nowhere_dense(s, a); break;
      case IdealKind::Scattered: in = is_scattered_set(s, a); break;
      case IdealKind::Discrete: in = isolated_points(s, a) == a; break;
      case IdealKind::ClosedDiscrete: in = isolated_points(s, a) == a && s.is_closed(a); break;
      case IdealKind::Finite: in = true; break;
    }
    if (in) out.push_back(a);
  });
  return out;
}

/// Every nowhere dense subset is scattered.
inline bool is_n_scattered(const FiniteSpace& s) {
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet a) {
    if (ok && is_nowhere_dense(s, a) && !is_scattered_set(s, a)) ok = false;
  });
  return ok;
}

inline bool is_n_scattered_subspace(const FiniteSpace& s, PointSet carrier) {
  return is_n_scattered(subspace(s, carrier));
}

/// Every hsg-closed set is scattered.
inline bool is_hsg_scattered(const FiniteSpace& s) {
  const PointSet x1 = nowhere_dense_points(s);
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet a) {
    if (ok && is_hsg_closed(s, a, x1) && !is_scattered_set(s, a)) ok = false;
  });
  return ok;
}

struct NsKernel {
  PointSet ns;  // largest open N-scattered subset
  PointSet np;  // its complement
};

inline NsKernel ns_kernel(const FiniteSpace& s) {
  PointSet ns;
  for (auto u : s.opens()) {
    if (is_n_scattered_subspace(s, u)) ns = ns | u;
  }
  if (!s.is_open(ns) || !is_n_scattered_subspace(s, ns)) {
    throw std::logic_error("union of open N-scattered subspaces is not an open N-scattered subspace");
  }
  return {ns, ns.complement(s.size())};
}

struct CellularFamily {
  std::size_t max_size = 0;
  std::vector<PointSet> witness;
};

/// Largest family of pairwise disjoint nonempty opens. Any such family picks
/// distinct minimal nonempty opens inside its members, and distinct minimal
/// nonempty opens are disjoint, so those minimal opens are a maximum family.
inline CellularFamily cellular_families(const FiniteSpace& s) {
  CellularFamily out;
  for (auto u : s.opens()) {
    if (u.empty()) continue;
    bool minimal = true;
    for (auto v : s.opens()) {
      if (!v.empty() && v != u && v.subset_of(u)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.witness.push_back(u);
  }
  out.max_size = out.witness.size();
  return out;
}

struct SemiNormalReport {
  bool semi_normal = false;
  bool sg_separation = false;
  std::optional<std::pair<PointSet, PointSet>> witness;  // least failing semi-closed pair
};

namespace detail {

// Disjoint supersets U of a and V of b, both drawn from `cls`.
inline bool separable(std::size_t n, const std::vector<bool>& cls, PointSet a, PointSet b) {
  const PointSet full = PointSet::full(n);
  bool found = false;
  for_each_subset(full - a - b, [&](PointSet extra_u) {
    if (found) return;
    const PointSet u = a | extra_u;
    if (!cls[u.bits()]) return;
    for_each_subset(full - u - b, [&](PointSet extra_v) {
      if (!found && cls[(b | extra_v).bits()]) found = true;
    });
  });
  return found;
}

}  // namespace detail

/// Semi-normality over all disjoint pairs of semi-closed sets (empty sets
/// included), alongside the same separation by sg-open sets.
inline SemiNormalReport semi_normal_check(const FiniteSpace& s) {
  const std::size_t n = s.size();
  const std::size_t subsets = std::size_t{1} << n;
  const PointSet x1 = nowhere_dense_points(s);
  std::vector<bool> semi_open(subsets), sg_open(subsets);
  std::vector<PointSet> semi_closed;
  for_each_subset(n, [&](PointSet a) {
    semi_open[a.bits()] = is_semi_open(s, a);
    sg_open[a.bits()] = is_sg_closed(s, a.complement(n), x1);
    if (is_semi_closed(s, a)) semi_closed.push_back(a);
  });
  SemiNormalReport r{true, true, std::nullopt};
  for (auto a : semi_closed) {
    for (auto b : semi_closed) {
      if (a.intersects(b)) continue;
      const bool by_semi = detail::separable(n, semi_open, a, b);
      const bool by_sg = detail::separable(n, sg_open, a, b);
      if (!by_semi) r.semi_normal = false;
      if (!by_sg) r.sg_separation = false;
      if ((!by_semi || !by_sg) && !r.witness) r.witness = std::pair{a, b};
    }
  }
  return r;
}

/// The eleven equivalent forms of N-scatteredness, each decided separately.
struct NScatteredClause {
  std::string_view label;
  std::string_view description;
  bool (*holds)(const FiniteSpace&);
};

namespace clauses {

inline bool definition(const FiniteSpace& s) {
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet a) {
    if (ok && is_nowhere_dense(s, a) && !scattered_check(s, a).is_scattered) ok = false;
  });
  return ok;
}

inline bool isolated_point(const FiniteSpace& s) {
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet a) {
    if (ok && !a.empty() && is_nowhere_dense(s, a) && isolated_points(s, a).empty()) ok = false;
  });
  return ok;
}

inline bool ideal_inclusion(const FiniteSpace& s) {
  const auto nowhere = ideal_family(s, IdealKind::Nowhere);
  const auto scattered = ideal_family(s, IdealKind::Scattered);
  return std::includes(scattered.begin(), scattered.end(), nowhere.begin(), nowhere.end());
}

inline bool closed_nowhere_dense(const FiniteSpace& s) {
  for (auto f : s.closed_sets()) {
    if (is_nowhere_dense(s, f) && !is_scattered_set(s, f)) return false;
  }
  return true;
}

inline bool open_boundary(const FiniteSpace& s) {
  for (auto u : s.opens()) {
    if (!u.empty() && !is_scattered_set(s, boundary(s, u))) return false;
  }
  return true;
}

inline bool alpha_boundary(const FiniteSpace& s) {
  const FiniteSpace alpha = derived_topology(s, DerivedKind::Alpha);
  for (auto v : alpha.opens()) {
    if (!is_scattered_set(s, boundary(alpha, v))) return false;
  }
  return true;
}

inline bool semi_open_boundary(const FiniteSpace& s) {
  for (auto a : semi_open_sets(s)) {
    if (!a.empty() && !is_scattered_set(s, boundary(s, a))) return false;
  }
  return true;
}

inline bool n_scattered_base(const FiniteSpace& s) {
  std::vector<PointSet> base;
  for (auto u : s.opens()) {
    if (is_n_scattered_subspace(s, u)) base.push_back(u);
  }
  for (auto w : s.opens()) {
    for (auto x : w.points()) {
      bool covered = false;
      for (auto u : base) {
        if (u.contains(x) && u.subset_of(w)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

inline bool open_cover(const FiniteSpace& s) {
  PointSet covered;
  for (auto u : s.opens()) {
    if (is_n_scattered_subspace(s, u)) covered = covered | u;
  }
  return covered == s.full();
}

inline bool open_subspaces(const FiniteSpace& s) {
  for (auto u : s.opens()) {
    if (!u.empty() && !is_n_scattered_subspace(s, u)) return false;
  }
  return true;
}

inline bool alpha_scattered_nowhere_dense(const FiniteSpace& s) {
  bool ok = true;
  for_each_subset(s.size(), [&](PointSet a) {
    if (!ok || !is_nowhere_dense(s, a)) return;
    const FiniteSpace sub = derived_topology(subspace(s, a), DerivedKind::Alpha);
    if (!is_scattered_set(sub, sub.full())) ok = false;
  });
  return ok;
}

}  // namespace clauses

inline constexpr std::array<NScatteredClause, 11> kNScatteredClauses{{
    {"a", "every nowhere dense subset is scattered (Cantor-Bendixson per subset)", clauses::definition},
    {"b", "every nonempty nowhere dense subspace has an isolated point", clauses::isolated_point},
    {"c", "N(tau) is contained in S(tau)", clauses::ideal_inclusion},
    {"d", "every closed nowhere dense subset is scattered", clauses::closed_nowhere_dense},
    {"e", "every nonempty open set has a scattered boundary", clauses::open_boundary},
    {"f", "the alpha-boundary of every alpha-open set is scattered", clauses::alpha_boundary},
    {"g", "every nonempty semi-open set has a scattered boundary", clauses::semi_open_boundary},
    {"h", "the open N-scattered subspaces form a base", clauses::n_scattered_base},
    {"i", "the open N-scattered subspaces cover the space", clauses::open_cover},
    {"j", "every nonempty open subspace is N-scattered", clauses::open_subspaces},
    {"k", "every nowhere dense subset is alpha-scattered", clauses::alpha_scattered_nowhere_dense},
}};

struct SpaceReport {
  bool t0 = false;
  bool t1 = false;
  bool td = false;
  bool semi_td = false;
  bool extremally_disconnected = false;
  bool submaximal = false;
  bool globally_disconnected = false;
  bool partition = false;
  bool indiscrete = false;
  bool discrete = false;
  bool crowded = false;
  bool homogeneous = false;
  bool scattered = false;
  bool alpha_scattered = false;
  bool n_scattered = false;
  bool hsg_scattered = false;
  bool alpha_space = false;
  bool semi_normal = false;
  bool sg_t_half = false;       // every singleton sg-open or sg-closed
  bool sgo_topology = false;    // sg-open sets form a topology
  bool so_topology = false;     // semi-open sets form a topology
  bool all_hsg_closed = false;  // every subset hsg-closed
  Decomposition decomposition;
  std::vector<PointSet> ideal_n, ideal_s, ideal_d, ideal_cd;
  std::vector<PointSet> hsg_closed_sets;
  PointSet ns_kernel, np;
  std::size_t max_cellular = 0;
};

/// Boolean fields of SpaceReport by name.
struct SpaceFlagField {
  std::string_view name;
  bool SpaceReport::*member;
};

inline constexpr std::array<SpaceFlagField, 22> kSpaceFlagFields{{
    {"T0", &SpaceReport::t0},
    {"T1", &SpaceReport::t1},
    {"TD", &SpaceReport::td},
    {"semi_TD", &SpaceReport::semi_td},
    {"extremally_disconnected", &SpaceReport::extremally_disconnected},
    {"submaximal", &SpaceReport::submaximal},
    {"globally_disconnected", &SpaceReport::globally_disconnected},
    {"partition", &SpaceReport::partition},
    {"indiscrete", &SpaceReport::indiscrete},
    {"discrete", &SpaceReport::discrete},
    {"crowded", &SpaceReport::crowded},
    {"homogeneous", &SpaceReport::homogeneous},
    {"scattered", &SpaceReport::scattered},
    {"alpha_scattered", &SpaceReport::alpha_scattered},
    {"N_scattered", &SpaceReport::n_scattered},
    {"hsg_scattered", &SpaceReport::hsg_scattered},
    {"alpha_space", &SpaceReport::alpha_space},
    {"semi_normal", &SpaceReport::semi_normal},
    {"sg_T_half", &SpaceReport::sg_t_half},
    {"sgo_topology", &SpaceReport::sgo_topology},
    {"so_topology", &SpaceReport::so_topology},
    {"all_hsg_closed", &SpaceReport::all_hsg_closed},
}};

/// Whether a family (given as membership over all masks) is closed under
/// pairwise union and intersection.
inline bool is_lattice(const std::vector<bool>& member) {
  for (std::size_t a = 0; a < member.size(); ++a) {
    if (!member[a]) continue;
    for (std::size_t b = a + 1; b < member.size(); ++b) {
      if (member[b] && (!member[a | b] || !member[a & b])) return false;
    }
  }
  return true;
}

inline SpaceReport space_report(const FiniteSpace& s) {
  const std::size_t n = s.size();
  const PointSet full = s.full();
  SpaceReport r;
  r.decomposition = decompose(s);
  const PointSet x1 = r.decomposition.x1;

  r.t0 = true;
  r.t1 = true;
  r.td = true;
  r.semi_td = true;
  r.sg_t_half = true;
  for (std::size_t x = 0; x < n; ++x) {
    const PointSet pt = PointSet::singleton(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (s.neighbourhood(x) == s.neighbourhood(y)) r.t0 = false;
    }
    if (!s.is_closed(pt)) r.t1 = false;
    if (!s.is_closed(s.closure(pt) - pt)) r.td = false;
    if (!s.is_open(pt) && !is_nowhere_dense(s, pt)) r.semi_td = false;
    if (!is_sg_closed(s, pt, x1) && !is_sg_closed(s, pt.complement(n), x1)) r.sg_t_half = false;
  }

  r.indiscrete = s.opens().size() == (n == 0 ? 1 : 2);
  r.discrete = s.opens().size() == (std::size_t{1} << n);
  r.crowded = isolated_points(s, full).empty();
  r.homogeneous = is_homogeneous(s);

  r.extremally_disconnected = true;
  r.partition = true;
  for (auto u : s.opens()) {
    if (!s.is_open(s.closure(u))) r.extremally_disconnected = false;
    if (!s.is_closed(u)) r.partition = false;
  }

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<bool> semi_open(subsets), sg_open(subsets);
  r.submaximal = true;
  r.globally_disconnected = true;
  r.all_hsg_closed = true;
  for_each_subset(n, [&](PointSet a) {
    semi_open[a.bits()] = is_semi_open(s, a);
    sg_open[a.bits()] = is_sg_closed(s, a.complement(n), x1);
    if (s.closure(a) == full && !s.is_open(a)) r.submaximal = false;
    if (semi_open[a.bits()] && !s.is_open(a)) r.globally_disconnected = false;
    if (is_hsg_closed(s, a, x1)) {
      r.hsg_closed_sets.push_back(a);
    } else {
      r.all_hsg_closed = false;
    }
  });
  r.so_topology = is_lattice(semi_open);
  r.sgo_topology = is_lattice(sg_open);

  r.ideal_n = ideal_family(s, IdealKind::Nowhere);
  r.ideal_s = ideal_family(s, IdealKind::Scattered);
  r.ideal_d = ideal_family(s, IdealKind::Discrete);
  r.ideal_cd = ideal_family(s, IdealKind::ClosedDiscrete);

  r.scattered = is_scattered_set(s, full);
  const FiniteSpace alpha = derived_topology(s, DerivedKind::Alpha);
  r.alpha_scattered = is_scattered_set(alpha, full);
  r.alpha_space = alpha == s;
  r.n_scattered = clauses::ideal_inclusion(s);
  r.hsg_scattered = true;
  for (auto a : r.hsg_closed_sets) {
    if (!is_scattered_set(s, a)) r.hsg_scattered = false;
  }
  r.semi_normal = semi_normal_check(s).semi_normal;

  const auto kernel = ns_kernel(s);
  r.ns_kernel = kernel.ns;
  r.np = kernel.np;
  r.max_cellular = cellular_families(s).max_size;
  return r;
}

}  // namespace topolab
