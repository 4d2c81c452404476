#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace topolab {

using Mask = std::uint32_t;

/// Largest ground set a FiniteSpace may have. Products are capped here too.
inline constexpr std::size_t kMaxGround = 12;

/// A subset of {0, ..., n-1}. The ground size lives with the space, not the set.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(Mask bits) : bits_(bits) {}

  static PointSet of(std::initializer_list<std::size_t> points) {
    Mask m = 0;
    for (auto p : points) m |= Mask{1} << p;
    return PointSet(m);
  }
  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr PointSet singleton(std::size_t p) { return PointSet(Mask{1} << p); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t p) const { return (bits_ >> p) & 1U; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }
  /// Lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  /// Fits inside a ground of size n.
  constexpr bool within(std::size_t n) const { return subset_of(full(n)); }

  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }
  constexpr PointSet with(std::size_t p) const { return PointSet(bits_ | (Mask{1} << p)); }
  constexpr PointSet without(std::size_t p) const { return PointSet(bits_ & ~(Mask{1} << p)); }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.bits_ <=> b.bits_; }

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  /// "{0,2}" style rendering.
  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (auto p : points()) {
      if (!first_item) s += ",";
      s += std::to_string(p);
      first_item = false;
    }
    return s + "}";
  }

 private:
  Mask bits_ = 0;
};

/// Calls fn(PointSet) for every subset of `of`, in ascending mask order.
template <typename Fn>
void for_each_subset(PointSet of, Fn&& fn) {
  const Mask full = of.bits();
  Mask sub = 0;
  while (true) {
    fn(PointSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// Calls fn(PointSet) for every subset of a ground of size n, ascending.
template <typename Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
  const Mask end = Mask{1} << n;
  for (Mask m = 0; m < end; ++m) fn(PointSet(m));
}

}  // namespace topolab
