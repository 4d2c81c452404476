#pragma once

#include <string>

#include "topolab/error.hpp"
#include "topolab/operators.hpp"

namespace topolab {

/// Two topologies on one ground set.
class BitopSpace {
 public:
  BitopSpace(FiniteSpace tau1, FiniteSpace tau2) : tau1_(std::move(tau1)), tau2_(std::move(tau2)) {
    if (tau1_.size() != tau2_.size()) throw Error(ErrorCode::BadSize, "bitopological components differ in size");
  }

  std::size_t size() const { return tau1_.size(); }
  /// Component by index 1 or 2.
  const FiniteSpace& tau(int index) const {
    if (index == 1) return tau1_;
    if (index == 2) return tau2_;
    throw Error(ErrorCode::BadIndex, "topology index must be 1 or 2, got " + std::to_string(index));
  }

 private:
  FiniteSpace tau1_, tau2_;
};

struct BitopSetFlags {
  bool rare = false;
  bool sg_closed = false;
  bool meager = false;
  bool sg_meager = false;
  friend bool operator==(const BitopSetFlags&, const BitopSetFlags&) = default;
};

/// tau_j-Int(tau_i-Cl A) = empty.
inline bool bitop_rare(const BitopSpace& b, int i, int j, PointSet a) {
  return b.tau(j).interior(b.tau(i).closure(a)).empty();
}

/// tau_j-Int(tau_i-Cl A) lies in every tau_i-semi-open superset of A.
inline bool bitop_sg_closed(const BitopSpace& b, int i, int j, PointSet a) {
  const FiniteSpace& ti = b.tau(i);
  const PointSet core = b.tau(j).interior(ti.closure(a));
  if (core.subset_of(a)) return true;
  bool ok = true;
  for_each_subset(a.complement(b.size()), [&](PointSet extra) {
    const PointSet u = a | extra;
    if (ok && is_semi_open(ti, u) && !core.subset_of(u)) ok = false;
  });
  return ok;
}

/// Rare sets are hereditary, so on a finite ground A is a union of rare sets
/// exactly when each of its points is rare.
inline bool bitop_meager(const BitopSpace& b, int i, int j, PointSet a) {
  for (auto x : a.points())
    if (!bitop_rare(b, i, j, PointSet::singleton(x))) return false;
  return true;
}

/// A is the union of its (i,j)-sg-closed subsets.
inline bool bitop_sg_meager(const BitopSpace& b, int i, int j, PointSet a) {
  PointSet covered;
  for_each_subset(a, [&](PointSet c) {
    if (!c.subset_of(covered) && bitop_sg_closed(b, i, j, c)) covered = covered | c;
  });
  return covered == a;
}

inline BitopSetFlags bitop_set_flags(const BitopSpace& b, int i, int j, PointSet a) {
  (void)b.tau(i);  // index validation before anything else
  (void)b.tau(j);
  require_within(a, b.size());
  return {bitop_rare(b, i, j, a), bitop_sg_closed(b, i, j, a), bitop_meager(b, i, j, a), bitop_sg_meager(b, i, j, a)};
}

struct BitopReport {
  bool baire_12 = false;
  bool baire_21 = false;
  bool utterly_12 = false;
  bool utterly_21 = false;
  friend bool operator==(const BitopReport&, const BitopReport&) = default;
};

/// (i,j)-Baire: no nonempty tau_i-open set is (i,j)-meager. Utterly: no
/// nonempty tau_i-open set is (i,j)-sg-meager.
inline bool bitop_baire(const BitopSpace& b, int i, int j) {
  for (auto u : b.tau(i).opens())
    if (!u.empty() && bitop_meager(b, i, j, u)) return false;
  return true;
}

inline bool bitop_utterly_baire(const BitopSpace& b, int i, int j) {
  for (auto u : b.tau(i).opens())
    if (!u.empty() && bitop_sg_meager(b, i, j, u)) return false;
  return true;
}

inline BitopReport bitop_space_report(const BitopSpace& b) {
  return {bitop_baire(b, 1, 2), bitop_baire(b, 2, 1), bitop_utterly_baire(b, 1, 2), bitop_utterly_baire(b, 2, 1)};
}

}  // namespace topolab
