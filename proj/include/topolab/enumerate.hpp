#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <thread>
#include <unordered_set>
#include <vector>

#include "topolab/error.hpp"
#include "topolab/finite_space.hpp"

namespace topolab {

/// Hard cap for exhaustive topology enumeration.
inline constexpr std::size_t kMaxEnumerate = 6;

/// A family of subsets of an n-point ground (n <= 6): bit k set iff the
/// subset with mask k belongs to the family. Ascending Family order is the
/// canonical order of spaces.
using Family = std::uint64_t;

namespace detail {

inline Family family_of(const FiniteSpace& s) {
  Family f = 0;
  for (auto u : s.opens()) f |= Family{1} << u.bits();
  return f;
}

inline FiniteSpace space_of(std::size_t n, Family f) {
  std::vector<PointSet> opens;
  for (Family m = f; m != 0; m &= m - 1) opens.emplace_back(static_cast<Mask>(std::countr_zero(m)));
  return FiniteSpace::from_sorted_opens(n, std::move(opens));
}

/// Smallest union-and-intersection-closed family containing `topology` and c.
/// Every member has the form U | (V & c) with U, V already in the family.
inline Family add_open(Family topology, Mask c) {
  std::array<Mask, 64> members{};
  std::size_t count = 0;
  for (Family m = topology; m != 0; m &= m - 1) members[count++] = static_cast<Mask>(std::countr_zero(m));
  Family traces = 0;
  for (std::size_t i = 0; i < count; ++i) traces |= Family{1} << (members[i] & c);
  Family out = topology;
  for (Family t = traces; t != 0; t &= t - 1) {
    const auto w = static_cast<Mask>(std::countr_zero(t));
    for (std::size_t i = 0; i < count; ++i) out |= Family{1} << (members[i] | w);
  }
  return out;
}

inline void require_enumerable(std::size_t n) {
  if (n > kMaxEnumerate) throw Error(ErrorCode::GroundTooLarge, "enumeration is capped at n=6, got " + std::to_string(n));
}

}  // namespace detail

/// All labeled topologies on n <= 3 points by filtering every subset-family
/// through the axiom check. Ascending canonical order.
inline std::vector<Family> enumerate_by_filter(std::size_t n) {
  if (n > 3) throw Error(ErrorCode::GroundTooLarge, "brute-force filter is only feasible for n <= 3");
  const std::size_t subsets = std::size_t{1} << n;
  const Family families = Family{1} << subsets;
  std::vector<Family> out;
  std::vector<PointSet> members;
  for (Family f = 0; f < families; ++f) {
    members.clear();
    for (Family m = f; m != 0; m &= m - 1) members.emplace_back(static_cast<Mask>(std::countr_zero(m)));
    if (!topology_violation(n, members)) out.push_back(f);
  }
  return out;
}

/// All labeled topologies on n <= 6 points, grown from {empty, full} by
/// repeatedly adding one candidate open and closing. The frontier of each
/// round is split across `workers` threads; the result is sorted, so it does
/// not depend on the worker count.
inline std::vector<Family> enumerate_by_closure(std::size_t n, unsigned workers = 1) {
  detail::require_enumerable(n);
  const Mask full = PointSet::full(n).bits();
  const Family start = (Family{1} << 0) | (Family{1} << full);
  std::unordered_set<Family> seen{start};
  std::vector<Family> frontier{start};
  workers = std::max(1U, workers);

  auto expand = [&](std::size_t begin, std::size_t end, std::vector<Family>& found) {
    for (std::size_t i = begin; i < end; ++i) {
      const Family t = frontier[i];
      for (Mask c = 1; c < full; ++c) {
        if ((t >> c) & 1U) continue;
        found.push_back(detail::add_open(t, c));
      }
    }
  };

  while (!frontier.empty()) {
    std::vector<std::vector<Family>> found(workers);
    if (workers == 1) {
      expand(0, frontier.size(), found[0]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = std::min(frontier.size(), w * chunk), e = std::min(frontier.size(), b + chunk);
        pool.emplace_back(expand, b, e, std::ref(found[w]));
      }
      for (auto& t : pool) t.join();
    }
    std::vector<Family> next;
    for (auto& batch : found) {
      for (auto f : batch) {
        if (seen.insert(f).second) next.push_back(f);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Family> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Family with every point relabeled through `perm` (point x becomes perm[x]).
inline Family permute_family(Family f, std::span<const std::size_t> perm) {
  Family out = 0;
  for (Family m = f; m != 0; m &= m - 1) {
    const auto u = static_cast<Mask>(std::countr_zero(m));
    Mask image = 0;
    for (std::size_t x = 0; x < perm.size(); ++x) {
      if ((u >> x) & 1U) image |= Mask{1} << perm[x];
    }
    out |= Family{1} << image;
  }
  return out;
}

/// Keeps the members that are least (in canonical order) within their
/// homeomorphism class.
inline std::vector<Family> homeomorphism_representatives(std::size_t n, std::span<const Family> labeled) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Relabeling tables: image mask of every subset under every permutation.
  std::vector<std::vector<Mask>> tables;
  const Mask subsets = Mask{1} << n;
  do {
    std::vector<Mask> table(subsets);
    for (Mask u = 0; u < subsets; ++u) {
      Mask image = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if ((u >> x) & 1U) image |= Mask{1} << perm[x];
      }
      table[u] = image;
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Family> out;
  for (auto f : labeled) {
    bool least = true;
    for (const auto& table : tables) {
      Family image = 0;
      for (Family m = f; m != 0; m &= m - 1) image |= Family{1} << table[static_cast<std::size_t>(std::countr_zero(m))];
      if (image < f) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(f);
  }
  return out;
}

struct EnumerateOptions {
  bool up_to_homeomorphism = false;
  unsigned workers = 1;
};

/// Every topology on n points exactly once, in canonical order. n <= 3 uses
/// the brute-force filter; larger n uses closure generation.
inline std::vector<Family> enumerate_families(std::size_t n, EnumerateOptions options = {}) {
  detail::require_enumerable(n);
  auto labeled = n <= 3 ? enumerate_by_filter(n) : enumerate_by_closure(n, options.workers);
  if (!options.up_to_homeomorphism) return labeled;
  return homeomorphism_representatives(n, labeled);
}

inline std::vector<FiniteSpace> enumerate_topologies(std::size_t n, EnumerateOptions options = {}) {
  std::vector<FiniteSpace> out;
  for (auto f : enumerate_families(n, options)) out.push_back(detail::space_of(n, f));
  return out;
}

}  // namespace topolab
