#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/error.hpp"
#include "topolab/fixtures.hpp"
#include "topolab/operators.hpp"

namespace topolab {

/// An eventually periodic subset of the naturals: membership of k is head[k]
/// below head.size(), and cycle[(k - head.size()) % cycle.size()] beyond.
/// Kept in canonical form (shortest period, shortest head), so equal sets
/// compare equal member-wise. Finite sets have an all-zero cycle, cofinite
/// sets an all-one cycle.
class Trace {
 public:
  static constexpr std::size_t kMaxPeriod = 4096;

  Trace() : cycle_{false} {}

  static Trace periodic(std::vector<bool> head, std::vector<bool> cycle) {
    if (cycle.empty() || cycle.size() > kMaxPeriod) throw Error(ErrorCode::MalformedShape, "bad trace period");
    Trace t;
    t.head_ = std::move(head);
    t.cycle_ = std::move(cycle);
    t.normalize();
    return t;
  }
  static Trace finite(const std::vector<std::size_t>& elems) {
    std::vector<bool> head;
    for (auto k : elems) {
      if (k >= head.size()) head.resize(k + 1, false);
      head[k] = true;
    }
    return periodic(std::move(head), {false});
  }
  static Trace cofinite(const std::vector<std::size_t>& missing) { return finite(missing).complement(); }
  static Trace all() { return periodic({}, {true}); }
  /// [0, k)
  static Trace initial(std::size_t k) { return periodic(std::vector<bool>(k, true), {false}); }
  /// [k, infinity)
  static Trace final(std::size_t k) { return periodic(std::vector<bool>(k, false), {true}); }

  const std::vector<bool>& head() const { return head_; }
  const std::vector<bool>& cycle() const { return cycle_; }

  bool contains(std::size_t k) const {
    if (k < head_.size()) return head_[k];
    return cycle_[(k - head_.size()) % cycle_.size()];
  }
  bool is_finite() const { return cycle_.size() == 1 && !cycle_[0]; }
  bool is_cofinite() const { return cycle_.size() == 1 && cycle_[0]; }
  bool empty() const { return is_finite() && head_.empty(); }
  bool is_all() const { return is_cofinite() && head_.empty(); }

  std::optional<std::size_t> min() const { return first(true); }
  std::optional<std::size_t> min_missing() const { return first(false); }
  /// Largest element; finite traces only.
  std::optional<std::size_t> max() const {
    require(is_finite(), "max of an infinite trace");
    if (head_.empty()) return std::nullopt;
    return head_.size() - 1;
  }
  /// Largest missing element; cofinite traces only.
  std::optional<std::size_t> max_missing() const { return complement().max(); }
  /// Number of elements; finite traces only.
  std::size_t count() const {
    require(is_finite(), "count of an infinite trace");
    return static_cast<std::size_t>(std::count(head_.begin(), head_.end(), true));
  }
  std::vector<std::size_t> elements() const {
    require(is_finite(), "elements of an infinite trace");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < head_.size(); ++k)
      if (head_[k]) out.push_back(k);
    return out;
  }

  Trace complement() const {
    Trace t = *this;
    t.head_.flip();
    t.cycle_.flip();
    return t;
  }
  friend Trace operator|(const Trace& a, const Trace& b) { return combine(a, b, [](bool x, bool y) { return x || y; }); }
  friend Trace operator&(const Trace& a, const Trace& b) { return combine(a, b, [](bool x, bool y) { return x && y; }); }
  friend Trace operator-(const Trace& a, const Trace& b) { return combine(a, b, [](bool x, bool y) { return x && !y; }); }
  bool subset_of(const Trace& other) const { return (*this - other).empty(); }

  friend bool operator==(const Trace&, const Trace&) = default;

  /// "{1,2}" when finite, "N-{0}" when cofinite, else "[head](cycle)*".
  std::string to_string() const {
    auto list = [](const std::vector<std::size_t>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    if (is_finite()) return list(elements());
    if (is_cofinite()) return is_all() ? "N" : "N-" + list(complement().elements());
    std::string s = "[";
    for (bool b : head_) s += b ? '1' : '0';
    s += "](";
    for (bool b : cycle_) s += b ? '1' : '0';
    return s + ")*";
  }

 private:
  std::vector<bool> head_;
  std::vector<bool> cycle_;

  static void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::MalformedShape, what);
  }

  std::optional<std::size_t> first(bool value) const {
    for (std::size_t k = 0; k < head_.size() + cycle_.size(); ++k)
      if (contains(k) == value) return k;
    return std::nullopt;
  }

  template <class Op>
  static Trace combine(const Trace& a, const Trace& b, Op op) {
    const std::size_t head = std::max(a.head_.size(), b.head_.size());
    const std::size_t period = std::lcm(a.cycle_.size(), b.cycle_.size());
    if (period > kMaxPeriod) throw Error(ErrorCode::MalformedShape, "trace period too large");
    std::vector<bool> h(head), c(period);
    for (std::size_t k = 0; k < head; ++k) h[k] = op(a.contains(k), b.contains(k));
    for (std::size_t k = 0; k < period; ++k) c[k] = op(a.contains(head + k), b.contains(head + k));
    return periodic(std::move(h), std::move(c));
  }

  void normalize() {
    const std::size_t p = cycle_.size();
    for (std::size_t d = 1; d < p; ++d) {
      if (p % d != 0) continue;
      bool ok = true;
      for (std::size_t k = d; k < p && ok; ++k) ok = cycle_[k] == cycle_[k - d];
      if (ok) {
        cycle_.resize(d);
        break;
      }
    }
    // Absorb the tail of the head into the cycle while it repeats.
    while (!head_.empty() && head_.back() == cycle_.back()) {
      std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
      head_.pop_back();
    }
  }
};

enum class SymbolicFamily { Cofinite, ParticularPoint, OnePointCompactification, IndiscreteInfinite, LeftRay, RightRay };

/// One of the infinite witness spaces. The ground is the naturals, plus a
/// distinguished point (p or infinity) for ParticularPoint and
/// OnePointCompactification.
struct SymbolicSpace {
  SymbolicFamily family = SymbolicFamily::Cofinite;

  bool has_distinguished() const {
    return family == SymbolicFamily::ParticularPoint || family == SymbolicFamily::OnePointCompactification;
  }
  std::string_view name() const {
    switch (family) {
      case SymbolicFamily::Cofinite: return "cofinite";
      case SymbolicFamily::ParticularPoint: return "pp";
      case SymbolicFamily::OnePointCompactification: return "opc";
      case SymbolicFamily::IndiscreteInfinite: return "indiscrete";
      case SymbolicFamily::LeftRay: return "lray";
      case SymbolicFamily::RightRay: return "rray";
    }
    return "";
  }
  friend bool operator==(const SymbolicSpace&, const SymbolicSpace&) = default;
};

inline constexpr SymbolicFamily kSymbolicFamilies[] = {
    SymbolicFamily::Cofinite,           SymbolicFamily::ParticularPoint, SymbolicFamily::OnePointCompactification,
    SymbolicFamily::IndiscreteInfinite, SymbolicFamily::LeftRay,         SymbolicFamily::RightRay};

inline SymbolicSpace parse_family(std::string_view name) {
  for (auto f : kSymbolicFamilies)
    if (SymbolicSpace{f}.name() == name) return {f};
  throw Error(ErrorCode::UnknownFixture, "unknown symbolic family: " + std::string(name));
}

/// A subset of a symbolic ground: the distinguished point flag plus the trace
/// on the naturals.
struct SymbolicSet {
  bool point = false;
  Trace trace;

  bool empty() const { return !point && trace.empty(); }
  bool is_finite() const { return trace.is_finite(); }
  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

  std::string to_string(const SymbolicSpace& s) const {
    std::string out = trace.to_string();
    if (point) out += s.family == SymbolicFamily::ParticularPoint ? "+p" : "+inf";
    return out;
  }
};

inline void require_shape(const SymbolicSpace& s, const SymbolicSet& a) {
  if (a.point && !s.has_distinguished())
    throw Error(ErrorCode::MalformedShape, std::string(s.name()) + " has no distinguished point");
}

inline SymbolicSet sym_full(const SymbolicSpace& s) { return {s.has_distinguished(), Trace::all()}; }
inline SymbolicSet sym_complement(const SymbolicSpace& s, const SymbolicSet& a) {
  return {s.has_distinguished() && !a.point, a.trace.complement()};
}
inline SymbolicSet operator|(const SymbolicSet& a, const SymbolicSet& b) { return {a.point || b.point, a.trace | b.trace}; }
inline SymbolicSet operator&(const SymbolicSet& a, const SymbolicSet& b) { return {a.point && b.point, a.trace & b.trace}; }
inline SymbolicSet operator-(const SymbolicSet& a, const SymbolicSet& b) { return {a.point && !b.point, a.trace - b.trace}; }
inline bool sym_subset(const SymbolicSet& a, const SymbolicSet& b) { return (a - b).empty(); }

namespace detail {

inline SymbolicSet sym_interior(const SymbolicSpace& s, const SymbolicSet& a) {
  const Trace& t = a.trace;
  switch (s.family) {
    case SymbolicFamily::Cofinite: return t.is_cofinite() ? a : SymbolicSet{};
    case SymbolicFamily::ParticularPoint: return t.is_all() ? a : SymbolicSet{};
    case SymbolicFamily::OnePointCompactification: return {a.point && t.is_cofinite(), t};
    case SymbolicFamily::IndiscreteInfinite: return t.is_all() ? a : SymbolicSet{};
    case SymbolicFamily::LeftRay: {
      const auto gap = t.min_missing();
      return {false, gap ? Trace::initial(*gap) : Trace::all()};
    }
    case SymbolicFamily::RightRay: {
      if (!t.is_cofinite()) return {};
      const auto last = t.max_missing();
      return {false, last ? Trace::final(*last + 1) : Trace::all()};
    }
  }
  return {};
}

inline SymbolicSet sym_closure(const SymbolicSpace& s, const SymbolicSet& a) {
  const Trace& t = a.trace;
  switch (s.family) {
    case SymbolicFamily::Cofinite: return t.is_finite() ? a : sym_full(s);
    case SymbolicFamily::ParticularPoint: return t.empty() ? a : sym_full(s);
    case SymbolicFamily::OnePointCompactification: return {a.point || !t.is_finite(), t};
    case SymbolicFamily::IndiscreteInfinite: return t.empty() ? a : sym_full(s);
    case SymbolicFamily::LeftRay: return t.empty() ? a : SymbolicSet{false, Trace::final(*t.min())};
    case SymbolicFamily::RightRay:
      if (t.empty()) return a;
      return {false, t.is_finite() ? Trace::initial(*t.max() + 1) : Trace::all()};
  }
  return a;
}

}  // namespace detail

/// Interior, closure, boundary and the semi-operators, in closed form per family.
inline SymbolicSet sym_operator(const SymbolicSpace& s, const SymbolicSet& a, OperatorKind kind) {
  require_shape(s, a);
  using detail::sym_closure;
  using detail::sym_interior;
  switch (kind) {
    case OperatorKind::Interior: return sym_interior(s, a);
    case OperatorKind::Closure: return sym_closure(s, a);
    case OperatorKind::Boundary: return sym_closure(s, a) - sym_interior(s, a);
    case OperatorKind::SemiInterior: return a & sym_closure(s, sym_interior(s, a));
    case OperatorKind::SemiClosure: return a | sym_interior(s, sym_closure(s, a));
  }
  return a;
}

/// X1: points whose singleton is nowhere dense.
inline SymbolicSet sym_nowhere_dense_points(const SymbolicSpace& s) {
  switch (s.family) {
    case SymbolicFamily::Cofinite: return {false, Trace::all()};
    case SymbolicFamily::ParticularPoint: return {true, Trace{}};
    case SymbolicFamily::OnePointCompactification: return {true, Trace{}};
    case SymbolicFamily::IndiscreteInfinite: return {};
    case SymbolicFamily::LeftRay: return {false, Trace::final(1)};
    case SymbolicFamily::RightRay: return {false, Trace::all()};
  }
  return {};
}

/// Points of `a` isolated in the subspace `a`.
inline SymbolicSet sym_isolated_points(const SymbolicSpace& s, const SymbolicSet& a) {
  require_shape(s, a);
  const Trace& t = a.trace;
  switch (s.family) {
    case SymbolicFamily::Cofinite: return t.is_finite() ? a : SymbolicSet{};
    case SymbolicFamily::ParticularPoint:
      // The trace is open in the subspace; p only has the whole subspace around it.
      if (t.empty()) return a;
      if (t.is_finite() && t.count() == 1) return {false, t};
      return {};
    case SymbolicFamily::OnePointCompactification: return {a.point && t.is_finite(), t};
    case SymbolicFamily::IndiscreteInfinite: return t.is_finite() && t.count() == 1 ? a : SymbolicSet{};
    case SymbolicFamily::LeftRay: return t.empty() ? a : SymbolicSet{false, Trace::finite({*t.min()})};
    case SymbolicFamily::RightRay:
      return t.is_finite() && !t.empty() ? SymbolicSet{false, Trace::finite({*t.max()})} : SymbolicSet{};
  }
  return {};
}

inline bool sym_is_scattered(const SymbolicSpace& s, const SymbolicSet& a) {
  require_shape(s, a);
  const Trace& t = a.trace;
  switch (s.family) {
    case SymbolicFamily::Cofinite: return t.is_finite();
    case SymbolicFamily::ParticularPoint: return t.is_finite() && t.count() <= 1;
    case SymbolicFamily::OnePointCompactification: return true;
    case SymbolicFamily::IndiscreteInfinite: return t.is_finite() && t.count() <= 1;
    case SymbolicFamily::LeftRay: return true;
    case SymbolicFamily::RightRay: return t.is_finite();
  }
  return false;
}

/// Union of the regular-open sets inside `a`. The only regular-open sets are
/// the empty set and the whole space, except in the one-point
/// compactification and the indiscrete space, where every open set is a union
/// of regular-open ones.
inline SymbolicSet sym_regular_open_kernel(const SymbolicSpace& s, const SymbolicSet& a) {
  if (s.family == SymbolicFamily::OnePointCompactification || s.family == SymbolicFamily::IndiscreteInfinite)
    return detail::sym_interior(s, a);
  return a == sym_full(s) ? a : SymbolicSet{};
}

inline SetFlags sym_set_flags(const SymbolicSpace& s, const SymbolicSet& a) {
  require_shape(s, a);
  const auto in = [&](const SymbolicSet& x) { return detail::sym_interior(s, x); };
  const auto cl = [&](const SymbolicSet& x) { return detail::sym_closure(s, x); };
  const SymbolicSet full = sym_full(s), comp = sym_complement(s, a), x1 = sym_nowhere_dense_points(s);
  const SymbolicSet int_a = in(a), cl_a = cl(a), int_cl = in(cl_a), cl_int = cl(int_a);
  const SymbolicSet int_cl_comp = in(cl(comp));
  SetFlags f;
  f.open = int_a == a;
  f.closed = cl_a == a;
  f.dense = cl_a == full;
  f.nowhere_dense = int_cl.empty();
  f.semi_open = sym_subset(a, cl_int);
  f.semi_closed = sym_subset(int_cl, a);
  f.preopen = sym_subset(a, int_cl);
  f.beta_open = sym_subset(a, cl(int_cl));
  f.regular_open = int_cl == a;
  f.regular_closed = cl_int == a;
  f.delta_open = sym_regular_open_kernel(s, a) == a;
  f.alpha_open = sym_subset(a, in(cl_int));
  f.sg_closed = sym_subset(x1 & int_cl, a);
  f.sg_open = sym_subset(x1 & int_cl_comp, comp);
  f.hsg_closed = (x1 & int_cl).empty();
  f.hsg_open = (x1 & int_cl_comp).empty();
  f.scattered = sym_is_scattered(s, a);
  const SymbolicSet iso = sym_isolated_points(s, a);
  f.crowded = iso.empty();
  f.perfect = f.closed && f.crowded;
  f.discrete_subset = iso == a;
  f.closed_discrete = f.closed && f.discrete_subset;
  return f;
}

/// Sample shapes: heads of length up to 3 followed by the cycles 0, 1, 01 and
/// 10, with and without the distinguished point. Covers finite, cofinite and
/// infinite-coinfinite sets; deterministic order.
inline std::vector<SymbolicSet> probe_sets(const SymbolicSpace& s) {
  std::vector<Trace> traces;
  const std::vector<std::vector<bool>> cycles{{false}, {true}, {false, true}, {true, false}};
  for (std::size_t len = 0; len <= 3; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<bool> head(len);
      for (std::size_t k = 0; k < len; ++k) head[k] = (bits >> k) & 1U;
      for (const auto& c : cycles) {
        Trace t = Trace::periodic(head, c);
        if (std::find(traces.begin(), traces.end(), t) == traces.end()) traces.push_back(std::move(t));
      }
    }
  }
  std::vector<SymbolicSet> out;
  for (const auto& t : traces) {
    out.push_back({false, t});
    if (s.has_distinguished()) out.push_back({true, t});
  }
  return out;
}

/// A family of shapes described by a predicate, e.g. "finite sets".
struct ShapeDescription {
  std::string_view text;
  bool (*contains)(const SymbolicSet&);
};

struct SymbolicReport {
  bool sg_compact = false;
  bool semi_compact = false;
  bool c2 = false;  // every nowhere dense set is finite
  bool c3 = false;  // every hsg-closed set is finite
  bool n_scattered = false;
  bool hsg_scattered = false;
  bool scattered = false;
  bool crowded = false;
  bool cellular_infinite = false;
  ShapeDescription ideal_n;  // nowhere dense sets
  ShapeDescription ideal_s;  // scattered sets
  // Least probe shape refuting each false property among c2, c3,
  // n_scattered and hsg_scattered.
  std::optional<SymbolicSet> c2_witness, c3_witness, n_scattered_witness, hsg_scattered_witness;
};

namespace detail {

struct FamilyFacts {
  bool c2, c3, n_scattered, hsg_scattered, cellular_infinite;
  ShapeDescription n, s;
};

inline bool finite_shape(const SymbolicSet& a) { return a.trace.is_finite(); }
inline bool any_shape(const SymbolicSet&) { return true; }
inline bool within_point(const SymbolicSet& a) { return a.trace.empty(); }
inline bool empty_shape(const SymbolicSet& a) { return a.empty(); }
inline bool at_most_one_trace_point(const SymbolicSet& a) { return a.trace.is_finite() && a.trace.count() <= 1; }
inline bool omits_zero(const SymbolicSet& a) { return !a.trace.contains(0); }

// Read off the characterizations: nowhere dense and hsg-closed sets per family.
//   cofinite:   N = hsg = finite sets; S = finite sets; any two opens meet.
//   pp:         N = hsg = subsets of {p}; S = sets with at most one trace point.
//   opc:        N = subsets of {inf}; hsg = sets whose trace is not cofinite;
//               everything is scattered; the singletons form a cellular family.
//   indiscrete: N = {empty}; X1 is empty so every set is hsg-closed.
//   lray:       N = sets omitting 0; everything is scattered.
//   rray:       N = hsg = finite sets; S = finite sets.
inline FamilyFacts family_facts(SymbolicFamily f) {
  switch (f) {
    case SymbolicFamily::Cofinite:
      return {true, true, true, true, false, {"finite sets", finite_shape}, {"finite sets", finite_shape}};
    case SymbolicFamily::ParticularPoint:
      return {true, true, true, true, false, {"subsets of {p}", within_point},
              {"sets meeting A in at most one point", at_most_one_trace_point}};
    case SymbolicFamily::OnePointCompactification:
      return {true, false, true, true, true, {"subsets of {inf}", within_point}, {"all sets", any_shape}};
    case SymbolicFamily::IndiscreteInfinite:
      return {true, false, true, false, false, {"{empty}", empty_shape},
              {"sets with at most one point", at_most_one_trace_point}};
    case SymbolicFamily::LeftRay:
      return {false, false, true, true, false, {"sets omitting 0", omits_zero}, {"all sets", any_shape}};
    case SymbolicFamily::RightRay:
      return {true, true, true, true, false, {"finite sets", finite_shape}, {"finite sets", finite_shape}};
  }
  throw std::logic_error("unknown family");
}

}  // namespace detail

inline SymbolicReport sym_space_report(const SymbolicSpace& s) {
  const auto facts = detail::family_facts(s.family);
  SymbolicReport r;
  r.c2 = facts.c2;
  r.c3 = facts.c3;
  r.n_scattered = facts.n_scattered;
  r.hsg_scattered = facts.hsg_scattered;
  r.cellular_infinite = facts.cellular_infinite;
  r.ideal_n = facts.n;
  r.ideal_s = facts.s;
  // sg-compact iff every hsg-closed set is finite; semi-compact iff C2 with
  // only finite cellular families.
  r.sg_compact = r.c3;
  r.semi_compact = r.c2 && !r.cellular_infinite;
  const SymbolicSet full = sym_full(s);
  r.scattered = sym_is_scattered(s, full);
  r.crowded = sym_isolated_points(s, full).empty();

  auto find = [&](bool expected_holds, auto refutes) -> std::optional<SymbolicSet> {
    if (expected_holds) return std::nullopt;
    for (const auto& a : probe_sets(s))
      if (refutes(a)) return a;
    throw std::logic_error("no probe shape refutes a property the closed form denies");
  };
  r.c2_witness = find(r.c2, [&](const SymbolicSet& a) { return !a.is_finite() && sym_set_flags(s, a).nowhere_dense; });
  r.c3_witness = find(r.c3, [&](const SymbolicSet& a) { return !a.is_finite() && sym_set_flags(s, a).hsg_closed; });
  r.n_scattered_witness = find(r.n_scattered, [&](const SymbolicSet& a) {
    const auto f = sym_set_flags(s, a);
    return f.nowhere_dense && !f.scattered;
  });
  r.hsg_scattered_witness = find(r.hsg_scattered, [&](const SymbolicSet& a) {
    const auto f = sym_set_flags(s, a);
    return f.hsg_closed && !f.scattered;
  });
  return r;
}

/// sg-compactness straight from covers, for the two families where the cover
/// structure is visible from shapes: in the particular-point space the only
/// sg-open set containing p is the whole space, so every sg-open cover has a
/// one-element subcover; in the indiscrete space every singleton is sg-open
/// and the cover by singletons has no finite subcover. Other families: nullopt.
inline std::optional<bool> sg_compact_by_covers(const SymbolicSpace& s) {
  if (s.family == SymbolicFamily::ParticularPoint) {
    for (const auto& a : probe_sets(s))
      if (a.point && sym_set_flags(s, a).sg_open && a != sym_full(s)) return false;
    return true;
  }
  if (s.family == SymbolicFamily::IndiscreteInfinite) {
    for (std::size_t k = 0; k < 8; ++k)
      if (!sym_set_flags(s, {false, Trace::finite({k})}).sg_open) return std::nullopt;
    return false;
  }
  return std::nullopt;
}

/// The subspaces this algebra can name: the open set A of the particular-point
/// space is an infinite indiscrete space, and an infinite subspace of a
/// cofinite space is cofinite.
inline SymbolicSpace sym_subspace(const SymbolicSpace& s, const SymbolicSet& carrier) {
  require_shape(s, carrier);
  if (s.family == SymbolicFamily::ParticularPoint && !carrier.point && carrier.trace.is_all())
    return {SymbolicFamily::IndiscreteInfinite};
  if (s.family == SymbolicFamily::Cofinite && !carrier.is_finite()) return s;
  throw Error(ErrorCode::MalformedShape, "subspace not representable: " + carrier.to_string(s));
}

/// Finite analog of a symbolic space together with the set flags whose
/// answers carry over. Trace point k maps to point k and the distinguished
/// point to n-1; `faithful` marks (as true) the flags that agree with the
/// symbolic engine on every set of comparison_domain().
struct Truncation {
  FiniteSpace space;
  SetFlags faithful;
  std::string note;
};

inline Truncation truncate(const SymbolicSpace& s, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::BadSize, "truncation needs at least one point");
  if (n > kMaxGround) throw Error(ErrorCode::GroundTooLarge, "truncation larger than " + std::to_string(kMaxGround));
  SetFlags all;
  for (const auto& field : kSetFlagFields) all.*field.member = true;
  switch (s.family) {
    case SymbolicFamily::Cofinite: {
      // Finite sets stay closed and discrete; anything about openness or
      // density of finite sets is lost.
      SetFlags f;
      f.closed = f.semi_closed = f.sg_closed = f.hsg_closed = true;
      f.scattered = f.crowded = f.perfect = f.discrete_subset = f.closed_discrete = true;
      return {discrete_space(n), f, "operators only on finite-trace sets"};
    }
    case SymbolicFamily::ParticularPoint: return {particular_point_space(n), all, "A = {0..n-2}, p = n-1"};
    case SymbolicFamily::OnePointCompactification: {
      if (n < 2) throw Error(ErrorCode::BadSize, "one-point compactification truncation needs two points");
      // Neighbourhoods of infinity are cofinite in the truncation: they must
      // contain the last trace point n-2.
      std::vector<PointSet> nbhd;
      for (std::size_t x = 0; x + 1 < n; ++x) nbhd.push_back(PointSet::singleton(x));
      nbhd.push_back(PointSet::of({n - 2, n - 1}));
      return {FiniteSpace::from_neighbourhoods(std::move(nbhd)), all, "D = {0..n-2}, inf = n-1"};
    }
    case SymbolicFamily::IndiscreteInfinite: return {indiscrete_space(n), all, "indiscrete on n points"};
    case SymbolicFamily::LeftRay: return {left_ray_space(n), all, "initial segments"};
    case SymbolicFamily::RightRay: return {right_ray_space(n), all, "final segments"};
  }
  throw std::logic_error("unknown family");
}

/// Number of trace points of the truncation (n-1 with a distinguished point).
inline std::size_t truncation_trace_points(const SymbolicSpace& s, std::size_t n) {
  return s.has_distinguished() ? n - 1 : n;
}

/// Finite-trace sets whose trace avoids the last trace point of the
/// truncation, which stands in for the infinite tail.
inline std::vector<SymbolicSet> comparison_domain(const SymbolicSpace& s, std::size_t n) {
  const std::size_t m = truncation_trace_points(s, n);
  std::vector<SymbolicSet> out;
  if (m == 0) return out;
  for_each_subset(m - 1, [&](PointSet t) {
    const auto pts = t.points();
    const std::vector<std::size_t> elems(pts.begin(), pts.end());
    out.push_back({false, Trace::finite(elems)});
    if (s.has_distinguished()) out.push_back({true, Trace::finite(elems)});
  });
  return out;
}

/// Image of a finite-trace set in truncate(s, n).
inline PointSet embed(const SymbolicSpace& s, const SymbolicSet& a, std::size_t n) {
  require_shape(s, a);
  if (!a.is_finite()) throw Error(ErrorCode::MalformedShape, "only finite traces embed into a truncation");
  const std::size_t m = truncation_trace_points(s, n);
  Mask bits = 0;
  for (auto k : a.trace.elements()) {
    if (k >= m) throw Error(ErrorCode::MalformedShape, "trace point outside the truncation");
    bits |= Mask{1} << k;
  }
  if (a.point) bits |= Mask{1} << (n - 1);
  return PointSet(bits);
}

}  // namespace topolab
