#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "topolab/finite_space.hpp"

namespace topolab {

/// A point permutation carrying the opens of one space onto those of another.
struct Homeomorphism {
  std::vector<std::size_t> image;  // point x maps to image[x]

  PointSet apply(PointSet s) const {
    Mask out = 0;
    for (auto x : s.points()) out |= Mask{1} << image[x];
    return PointSet(out);
  }
  friend bool operator==(const Homeomorphism&, const Homeomorphism&) = default;
};

namespace detail {

// A bijection is a homeomorphism of finite spaces iff it preserves the
// specialization relation "y lies in the minimal neighbourhood of x" in both
// directions. Backtracking assigns points in order and prunes on that.
inline void search_homeomorphisms(const FiniteSpace& a, const FiniteSpace& b, std::optional<std::pair<std::size_t, std::size_t>> pin,
                                  bool first_only, std::vector<Homeomorphism>& out) {
  const std::size_t n = a.size();
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t x) -> bool {
    if (x == n) {
      out.push_back(Homeomorphism{image});
      return first_only;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (pin && pin->first == x && pin->second != y) continue;
      if (a.neighbourhood(x).size() != b.neighbourhood(y).size()) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        ok = a.neighbourhood(x).contains(z) == b.neighbourhood(y).contains(image[z]) &&
             a.neighbourhood(z).contains(x) == b.neighbourhood(image[z]).contains(y);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (place(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  place(0);
}

}  // namespace detail

/// Every homeomorphism from s1 onto s2 (empty when the grounds differ in size
/// or the spaces are not homeomorphic).
inline std::vector<Homeomorphism> homeomorphism_search(const FiniteSpace& s1, const FiniteSpace& s2) {
  std::vector<Homeomorphism> out;
  if (s1.size() != s2.size()) return out;
  detail::search_homeomorphisms(s1, s2, std::nullopt, false, out);
  return out;
}

inline std::optional<Homeomorphism> find_homeomorphism(const FiniteSpace& s1, const FiniteSpace& s2) {
  std::vector<Homeomorphism> out;
  if (s1.size() != s2.size()) return std::nullopt;
  detail::search_homeomorphisms(s1, s2, std::nullopt, true, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

/// Some self-homeomorphism maps any point to any other. Since
/// self-homeomorphisms form a group, it suffices that point 0 reaches every point.
inline bool is_homogeneous(const FiniteSpace& space) {
  for (std::size_t y = 1; y < space.size(); ++y) {
    std::vector<Homeomorphism> out;
    detail::search_homeomorphisms(space, space, std::pair{std::size_t{0}, y}, true, out);
    if (out.empty()) return false;
  }
  return true;
}

/// The space with point x renamed to perm[x].
inline FiniteSpace relabel(const FiniteSpace& space, std::span<const std::size_t> perm) {
  Homeomorphism h{std::vector<std::size_t>(perm.begin(), perm.end())};
  std::vector<PointSet> opens;
  for (auto u : space.opens()) opens.push_back(h.apply(u));
  return validate_topology(space.size(), opens);
}

}  // namespace topolab
