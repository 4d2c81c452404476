#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topolab/error.hpp"
#include "topolab/point_set.hpp"

namespace topolab {

/// A validated topology on {0, ..., n-1}.
///
/// Opens are kept sorted by mask. Every point also carries its minimal open
/// neighbourhood (the intersection of all opens containing it), which is what
/// interior and closure are computed from.
class FiniteSpace {
 public:
  /// Builds the space whose opens are the unions of the given minimal
  /// neighbourhoods. `nbhd[x]` must contain x and be closed under the
  /// specialization order (y in nbhd[x] implies nbhd[y] within nbhd[x]).
  static FiniteSpace from_neighbourhoods(std::vector<PointSet> nbhd) {
    FiniteSpace s;
    s.n_ = nbhd.size();
    if (s.n_ > kMaxGround) throw Error(ErrorCode::GroundTooLarge, std::to_string(s.n_) + " points");
    s.nbhd_ = std::move(nbhd);
    const Mask end = Mask{1} << s.n_;
    for (Mask m = 0; m < end; ++m) {
      if (s.is_open(PointSet(m))) s.opens_.push_back(PointSet(m));
    }
    return from_sorted_opens(s.n_, std::move(s.opens_));
  }

  /// Trusted constructor: `opens` must already be a topology (sorted, unique).
  static FiniteSpace from_sorted_opens(std::size_t n, std::vector<PointSet> opens) {
    FiniteSpace s;
    s.n_ = n;
    s.opens_ = std::move(opens);
    s.nbhd_.assign(n, PointSet::full(n));
    for (auto u : s.opens_) {
      for (auto x : u.points()) s.nbhd_[x] = s.nbhd_[x] & u;
    }
    return s;
  }

  std::size_t size() const { return n_; }
  PointSet full() const { return PointSet::full(n_); }
  std::span<const PointSet> opens() const { return opens_; }
  PointSet neighbourhood(std::size_t x) const { return nbhd_[x]; }
  std::span<const PointSet> neighbourhoods() const { return nbhd_; }

  bool is_open(PointSet a) const {
    for (Mask m = a.bits(); m != 0; m &= m - 1) {
      if (!nbhd_[static_cast<std::size_t>(std::countr_zero(m))].subset_of(a)) return false;
    }
    return true;
  }
  bool is_closed(PointSet a) const { return is_open(a.complement(n_)); }

  PointSet interior(PointSet a) const {
    Mask out = 0;
    for (Mask m = a.bits(); m != 0; m &= m - 1) {
      auto x = static_cast<std::size_t>(std::countr_zero(m));
      if (nbhd_[x].subset_of(a)) out |= Mask{1} << x;
    }
    return PointSet(out);
  }
  PointSet closure(PointSet a) const {
    Mask out = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      if (nbhd_[x].intersects(a)) out |= Mask{1} << x;
    }
    return PointSet(out);
  }

  /// Closed sets, ascending by mask.
  std::vector<PointSet> closed_sets() const {
    std::vector<PointSet> out;
    out.reserve(opens_.size());
    for (auto u : opens_) out.push_back(u.complement(n_));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

  /// Canonical order: by ground size, then by the family read as a binary
  /// number whose bit k says whether the subset with mask k is open.
  friend std::strong_ordering operator<=>(const FiniteSpace& a, const FiniteSpace& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    auto ia = a.opens_.rbegin(), ib = b.opens_.rbegin();
    for (; ia != a.opens_.rend() && ib != b.opens_.rend(); ++ia, ++ib) {
      if (*ia != *ib) return *ia <=> *ib;
    }
    if (ia == a.opens_.rend() && ib == b.opens_.rend()) return std::strong_ordering::equal;
    return ia == a.opens_.rend() ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string to_string() const {
    std::string s = "n=" + std::to_string(n_) + " opens=[";
    for (std::size_t i = 0; i < opens_.size(); ++i) {
      if (i) s += ",";
      s += opens_[i].to_string();
    }
    return s + "]";
  }

 private:
  FiniteSpace() = default;
  std::size_t n_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> nbhd_;
};

/// Axiom check without throwing. Order of checks: range, pairwise unions,
/// pairwise intersections, then presence of the empty and full sets. Within a
/// check the least offending pair (by mask) is reported.
inline std::optional<Error> topology_violation(std::size_t n, std::span<const PointSet> family) {
  if (n > kMaxGround) return Error(ErrorCode::GroundTooLarge, std::to_string(n) + " points");
  for (auto s : family) {
    if (!s.within(n)) return Error(ErrorCode::OutOfRangePoint, s.to_string() + " exceeds ground of size " + std::to_string(n));
  }
  std::vector<PointSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto has = [&](PointSet s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!has(sorted[i] | sorted[j])) {
        return Error(ErrorCode::NotClosedUnderUnion, sorted[i].to_string() + " u " + sorted[j].to_string(),
                     std::pair{sorted[i], sorted[j]});
      }
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!has(sorted[i] & sorted[j])) {
        return Error(ErrorCode::NotClosedUnderIntersection, sorted[i].to_string() + " n " + sorted[j].to_string(),
                     std::pair{sorted[i], sorted[j]});
      }
    }
  }
  if (!has(PointSet{}) || !has(PointSet::full(n))) {
    return Error(ErrorCode::MissingEmptyOrFull, "family must contain the empty set and the whole ground");
  }
  return std::nullopt;
}

/// Validates and canonicalizes a family of opens; throws Error on failure.
inline FiniteSpace validate_topology(std::size_t n, std::span<const PointSet> family) {
  if (auto err = topology_violation(n, family)) throw *err;
  std::vector<PointSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return FiniteSpace::from_sorted_opens(n, std::move(sorted));
}

inline FiniteSpace validate_topology(std::size_t n, std::initializer_list<PointSet> family) {
  return validate_topology(n, std::span<const PointSet>(family.begin(), family.size()));
}

/// Smallest topology on n points containing every set in `subbase`.
inline FiniteSpace generate_topology(std::size_t n, std::span<const PointSet> subbase) {
  if (n > kMaxGround) throw Error(ErrorCode::GroundTooLarge, std::to_string(n) + " points");
  std::vector<PointSet> nbhd(n, PointSet::full(n));
  for (auto s : subbase) {
    require_within(s, n);
    for (auto x : s.points()) nbhd[x] = nbhd[x] & s;
  }
  return FiniteSpace::from_neighbourhoods(std::move(nbhd));
}

/// Relative topology on `carrier`, re-indexed so the i-th smallest carrier
/// point becomes point i.
inline FiniteSpace subspace(const FiniteSpace& space, PointSet carrier) {
  require_within(carrier, space.size());
  const auto pts = carrier.points();
  auto reindex = [&](PointSet s) {
    Mask out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (s.contains(pts[i])) out |= Mask{1} << i;
    }
    return PointSet(out);
  };
  std::vector<PointSet> nbhd;
  nbhd.reserve(pts.size());
  for (auto p : pts) nbhd.push_back(reindex(space.neighbourhood(p) & carrier));
  return FiniteSpace::from_neighbourhoods(std::move(nbhd));
}

/// Subset of the subspace on `carrier` lifted back to ambient indices.
inline PointSet lift_from_subspace(PointSet carrier, PointSet local) {
  const auto pts = carrier.points();
  Mask out = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (local.contains(i)) out |= Mask{1} << pts[i];
  }
  return PointSet(out);
}

/// Ambient subset restricted to `carrier`, in subspace indices.
inline PointSet restrict_to_subspace(PointSet carrier, PointSet ambient) {
  const auto pts = carrier.points();
  Mask out = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (ambient.contains(pts[i])) out |= Mask{1} << i;
  }
  return PointSet(out);
}

/// Product topology; the pair (i, j) becomes point i * |s2| + j.
inline FiniteSpace product(const FiniteSpace& s1, const FiniteSpace& s2) {
  const std::size_t n1 = s1.size(), n2 = s2.size();
  if (n1 * n2 > kMaxGround) throw Error(ErrorCode::GroundTooLarge, "product ground " + std::to_string(n1 * n2));
  std::vector<PointSet> nbhd;
  nbhd.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      Mask box = 0;
      for (auto a : s1.neighbourhood(i).points()) {
        for (auto b : s2.neighbourhood(j).points()) box |= Mask{1} << (a * n2 + b);
      }
      nbhd.push_back(PointSet(box));
    }
  }
  return FiniteSpace::from_neighbourhoods(std::move(nbhd));
}

/// Box U x V in product indices.
inline PointSet box(PointSet u, PointSet v, std::size_t n2) {
  Mask out = 0;
  for (auto a : u.points()) {
    for (auto b : v.points()) out |= Mask{1} << (a * n2 + b);
  }
  return PointSet(out);
}

}  // namespace topolab
