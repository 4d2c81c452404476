#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "topolab/finite_space.hpp"

namespace topolab {

enum class OperatorKind { Interior, Closure, Boundary, SemiInterior, SemiClosure };

inline PointSet semi_interior(const FiniteSpace& s, PointSet a) { return a & s.closure(s.interior(a)); }
inline PointSet semi_closure(const FiniteSpace& s, PointSet a) { return a | s.interior(s.closure(a)); }
inline PointSet boundary(const FiniteSpace& s, PointSet a) { return s.closure(a) - s.interior(a); }

inline PointSet core_operator(const FiniteSpace& s, PointSet a, OperatorKind kind) {
  require_within(a, s.size());
  switch (kind) {
    case OperatorKind::Interior: return s.interior(a);
    case OperatorKind::Closure: return s.closure(a);
    case OperatorKind::Boundary: return boundary(s, a);
    case OperatorKind::SemiInterior: return semi_interior(s, a);
    case OperatorKind::SemiClosure: return semi_closure(s, a);
  }
  return a;
}

inline bool is_nowhere_dense(const FiniteSpace& s, PointSet a) { return s.interior(s.closure(a)).empty(); }
inline bool is_semi_open(const FiniteSpace& s, PointSet a) { return a.subset_of(s.closure(s.interior(a))); }
inline bool is_semi_closed(const FiniteSpace& s, PointSet a) { return s.interior(s.closure(a)).subset_of(a); }
inline bool is_preopen(const FiniteSpace& s, PointSet a) { return a.subset_of(s.interior(s.closure(a))); }
inline bool is_alpha_open(const FiniteSpace& s, PointSet a) {
  return a.subset_of(s.interior(s.closure(s.interior(a))));
}
inline bool is_regular_open(const FiniteSpace& s, PointSet a) { return s.interior(s.closure(a)) == a; }

/// X1: points whose singleton is nowhere dense.
inline PointSet nowhere_dense_points(const FiniteSpace& s) {
  Mask out = 0;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (is_nowhere_dense(s, PointSet::singleton(x))) out |= Mask{1} << x;
  }
  return PointSet(out);
}

/// Fast path: A is sg-closed iff X1 & Int Cl A lies inside A.
inline bool is_sg_closed(const FiniteSpace& s, PointSet a, PointSet x1) {
  return (x1 & s.interior(s.closure(a))).subset_of(a);
}
inline bool is_sg_closed(const FiniteSpace& s, PointSet a) { return is_sg_closed(s, a, nowhere_dense_points(s)); }
inline bool is_sg_open(const FiniteSpace& s, PointSet a) { return is_sg_closed(s, a.complement(s.size())); }
inline bool is_hsg_closed(const FiniteSpace& s, PointSet a, PointSet x1) {
  return (x1 & s.interior(s.closure(a))).empty();
}
inline bool is_hsg_closed(const FiniteSpace& s, PointSet a) { return is_hsg_closed(s, a, nowhere_dense_points(s)); }

/// Points of `a` that are isolated in the subspace `a`.
inline PointSet isolated_points(const FiniteSpace& s, PointSet a) {
  Mask out = 0;
  for (auto x : a.points()) {
    if ((s.neighbourhood(x) & a) == PointSet::singleton(x)) out |= Mask{1} << x;
  }
  return PointSet(out);
}

/// Cantor-Bendixson derived sets of the subspace `a`: each entry removes the
/// isolated points of the previous one. Stops when nothing is isolated; the
/// last entry (or `a` itself when the list is empty) is the perfect kernel.
inline std::vector<PointSet> derivative_chain(const FiniteSpace& s, PointSet a) {
  std::vector<PointSet> chain;
  PointSet current = a;
  while (true) {
    const PointSet iso = isolated_points(s, current);
    if (iso.empty()) break;
    current = current - iso;
    chain.push_back(current);
  }
  return chain;
}

inline bool is_scattered_set(const FiniteSpace& s, PointSet a) {
  const auto chain = derivative_chain(s, a);
  return (chain.empty() ? a : chain.back()).empty();
}

struct SetFlags {
  bool open = false;
  bool closed = false;
  bool dense = false;
  bool nowhere_dense = false;
  bool semi_open = false;
  bool semi_closed = false;
  bool preopen = false;
  bool beta_open = false;
  bool regular_open = false;
  bool regular_closed = false;
  bool delta_open = false;
  bool alpha_open = false;
  bool sg_closed = false;
  bool sg_open = false;
  bool hsg_closed = false;
  bool hsg_open = false;
  bool scattered = false;
  bool crowded = false;
  bool perfect = false;
  bool discrete_subset = false;
  bool closed_discrete = false;

  friend bool operator==(const SetFlags&, const SetFlags&) = default;
};

/// Field table for generic iteration (printing, atom lookup, comparisons).
struct SetFlagField {
  std::string_view name;
  bool SetFlags::*member;
};

inline constexpr std::array<SetFlagField, 21> kSetFlagFields{{
    {"open", &SetFlags::open},
    {"closed", &SetFlags::closed},
    {"dense", &SetFlags::dense},
    {"nowhere_dense", &SetFlags::nowhere_dense},
    {"semi_open", &SetFlags::semi_open},
    {"semi_closed", &SetFlags::semi_closed},
    {"preopen", &SetFlags::preopen},
    {"beta_open", &SetFlags::beta_open},
    {"regular_open", &SetFlags::regular_open},
    {"regular_closed", &SetFlags::regular_closed},
    {"delta_open", &SetFlags::delta_open},
    {"alpha_open", &SetFlags::alpha_open},
    {"sg_closed", &SetFlags::sg_closed},
    {"sg_open", &SetFlags::sg_open},
    {"hsg_closed", &SetFlags::hsg_closed},
    {"hsg_open", &SetFlags::hsg_open},
    {"scattered", &SetFlags::scattered},
    {"crowded", &SetFlags::crowded},
    {"perfect", &SetFlags::perfect},
    {"discrete_subset", &SetFlags::discrete_subset},
    {"closed_discrete", &SetFlags::closed_discrete},
}};

/// Union of the regular-open sets inside `a`.
inline PointSet regular_open_kernel(const FiniteSpace& s, PointSet a) {
  PointSet out;
  for (auto u : s.opens()) {
    if (u.subset_of(a) && is_regular_open(s, u)) out = out | u;
  }
  return out;
}

inline SetFlags set_flags(const FiniteSpace& s, PointSet a, PointSet x1) {
  require_within(a, s.size());
  const PointSet full = s.full();
  const PointSet comp = a.complement(s.size());
  const PointSet in = s.interior(a), cl = s.closure(a);
  const PointSet int_cl = s.interior(cl), cl_int = s.closure(in);
  SetFlags f;
  f.open = in == a;
  f.closed = cl == a;
  f.dense = cl == full;
  f.nowhere_dense = int_cl.empty();
  f.semi_open = a.subset_of(cl_int);
  f.semi_closed = int_cl.subset_of(a);
  f.preopen = a.subset_of(int_cl);
  f.beta_open = a.subset_of(s.closure(int_cl));
  f.regular_open = int_cl == a;
  f.regular_closed = cl_int == a;
  f.delta_open = regular_open_kernel(s, a) == a;
  f.alpha_open = a.subset_of(s.interior(cl_int));
  f.sg_closed = (x1 & int_cl).subset_of(a);
  f.sg_open = (x1 & s.interior(s.closure(comp))).subset_of(comp);
  f.hsg_closed = (x1 & int_cl).empty();
  f.hsg_open = (x1 & s.interior(s.closure(comp))).empty();
  f.scattered = is_scattered_set(s, a);
  const PointSet iso = isolated_points(s, a);
  f.crowded = iso.empty();
  f.perfect = f.closed && f.crowded;
  f.discrete_subset = iso == a;
  f.closed_discrete = f.closed && f.discrete_subset;
  return f;
}

inline SetFlags set_flags(const FiniteSpace& s, PointSet a) { return set_flags(s, a, nowhere_dense_points(s)); }

/// Semi-open sets, ascending.
inline std::vector<PointSet> semi_open_sets(const FiniteSpace& s) {
  std::vector<PointSet> out;
  for_each_subset(s.size(), [&](PointSet a) {
    if (is_semi_open(s, a)) out.push_back(a);
  });
  return out;
}

/// Definitional sg-closedness: sCl(A) lies in every semi-open superset of A.
/// Independent of the X1 characterization.
inline bool is_sg_closed_def(const FiniteSpace& s, PointSet a) {
  require_within(a, s.size());
  const PointSet scl = semi_closure(s, a);
  bool ok = true;
  for_each_subset(a.complement(s.size()), [&](PointSet extra) {
    if (!ok) return;
    const PointSet u = a | extra;
    if (is_semi_open(s, u) && !scl.subset_of(u)) ok = false;
  });
  return ok;
}

/// Definitional hsg-closedness: every subset is sg-closed by definition.
inline bool is_hsg_closed_def(const FiniteSpace& s, PointSet a) {
  require_within(a, s.size());
  bool ok = true;
  for_each_subset(a, [&](PointSet b) {
    if (ok && !is_sg_closed_def(s, b)) ok = false;
  });
  return ok;
}

enum class DerivedKind { Alpha, Delta };

/// Alpha: {U - N : U open, N nowhere dense}. Delta: the semi-regularization,
/// generated by the regular-open sets. Alpha is verified to be a topology.
inline FiniteSpace derived_topology(const FiniteSpace& s, DerivedKind kind) {
  if (kind == DerivedKind::Delta) {
    std::vector<PointSet> regular;
    for (auto u : s.opens()) {
      if (is_regular_open(s, u)) regular.push_back(u);
    }
    return generate_topology(s.size(), regular);
  }
  std::vector<PointSet> nowhere_dense;
  for_each_subset(s.size(), [&](PointSet a) {
    if (is_nowhere_dense(s, a)) nowhere_dense.push_back(a);
  });
  std::vector<bool> member(std::size_t{1} << s.size(), false);
  for (auto u : s.opens()) {
    for (auto nd : nowhere_dense) member[(u - nd).bits()] = true;
  }
  std::vector<PointSet> family;
  for (std::size_t m = 0; m < member.size(); ++m) {
    if (member[m]) family.emplace_back(static_cast<Mask>(m));
  }
  return validate_topology(s.size(), family);
}

/// Generators of an ideal; the ideal is their downward closure under finite unions.
struct IdealSpec {
  std::vector<PointSet> generators;
};

/// Every member of the ideal generated by `ideal`, ascending.
inline std::vector<PointSet> ideal_members(std::size_t n, const IdealSpec& ideal) {
  PointSet top;
  for (auto g : ideal.generators) {
    require_within(g, n);
    top = top | g;
  }
  // Finite unions of generators are downward closed, so the ideal is the set
  // of subsets of some finite union; with finitely many generators the
  // maximal union is their total union.
  std::vector<PointSet> out;
  for_each_subset(top, [&](PointSet a) { out.push_back(a); });
  return out;
}

/// tau[I]: the smallest expansion of tau in which every ideal member is closed.
inline FiniteSpace expand_by_ideal(const FiniteSpace& s, const IdealSpec& ideal) {
  std::vector<PointSet> subbase(s.opens().begin(), s.opens().end());
  for (auto member : ideal_members(s.size(), ideal)) subbase.push_back(member.complement(s.size()));
  return generate_topology(s.size(), subbase);
}

/// Nonempty closed, crowded, nowhere dense sets, ascending.
inline std::vector<PointSet> perfect_nowhere_dense_sets(const FiniteSpace& s) {
  std::vector<PointSet> out;
  for_each_subset(s.size(), [&](PointSet a) {
    if (!a.empty() && s.is_closed(a) && is_nowhere_dense(s, a) && isolated_points(s, a).empty()) out.push_back(a);
  });
  return out;
}

}  // namespace topolab
