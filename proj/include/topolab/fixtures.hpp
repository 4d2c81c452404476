#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/error.hpp"
#include "topolab/finite_space.hpp"

namespace topolab {

inline FiniteSpace discrete_space(std::size_t n) {
  std::vector<PointSet> nbhd;
  for (std::size_t x = 0; x < n; ++x) nbhd.push_back(PointSet::singleton(x));
  return FiniteSpace::from_neighbourhoods(std::move(nbhd));
}

inline FiniteSpace indiscrete_space(std::size_t n) {
  return FiniteSpace::from_neighbourhoods(std::vector<PointSet>(n, PointSet::full(n)));
}

/// Opens are the initial segments [0, k).
inline FiniteSpace left_ray_space(std::size_t n) {
  std::vector<PointSet> nbhd;
  for (std::size_t x = 0; x < n; ++x) nbhd.push_back(PointSet::full(x + 1));
  return FiniteSpace::from_neighbourhoods(std::move(nbhd));
}

/// Opens are the final segments [k, n).
inline FiniteSpace right_ray_space(std::size_t n) {
  std::vector<PointSet> nbhd;
  for (std::size_t x = 0; x < n; ++x) nbhd.push_back(PointSet::full(n) - PointSet::full(x));
  return FiniteSpace::from_neighbourhoods(std::move(nbhd));
}

/// Ground {0..n-1}; opens are empty, {0..n-2} and everything. Point n-1 is
/// the particular point.
inline FiniteSpace particular_point_space(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadSize, "particular-point space needs at least one point");
  const PointSet a = PointSet::full(n - 1);
  return validate_topology(n, {PointSet{}, a, PointSet::full(n)});
}

/// Catalog names: SIERP, CONE3, PP3, DOUBLEPT3, T28FIX6, and the sized
/// families DISC_n, INDISC_n, LRAY_n, RRAY_n (the underscore is optional).
inline FiniteSpace fixture(std::string_view name) {
  const auto S = [](std::initializer_list<std::size_t> p) { return PointSet::of(p); };
  if (name == "SIERP") return validate_topology(2, {PointSet{}, S({0}), S({0, 1})});
  if (name == "CONE3") return validate_topology(3, {PointSet{}, S({0}), S({0, 1, 2})});
  if (name == "PP3") return particular_point_space(3);
  if (name == "DOUBLEPT3") return validate_topology(3, {PointSet{}, S({0}), S({1}), S({0, 1}), S({0, 1, 2})});
  if (name == "T28FIX6") {
    // CONE3 on {0,1,2} beside the chain {}, {3}, {3,4}, {3,4,5}.
    return generate_topology(6, std::vector<PointSet>{S({0}), S({0, 1, 2}), S({3}), S({3, 4}), S({3, 4, 5})});
  }
  struct Sized {
    std::string_view prefix;
    FiniteSpace (*make)(std::size_t);
  };
  static const Sized sized[] = {
      {"INDISC", indiscrete_space}, {"DISC", discrete_space}, {"LRAY", left_ray_space}, {"RRAY", right_ray_space}};
  for (const auto& [prefix, make] : sized) {
    if (!name.starts_with(prefix)) continue;
    auto rest = name.substr(prefix.size());
    if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) break;
    if (n > kMaxGround) throw Error(ErrorCode::GroundTooLarge, std::string(name));
    return make(n);
  }
  throw Error(ErrorCode::UnknownFixture, std::string(name));
}

inline std::vector<std::string> fixture_names() {
  return {"SIERP", "CONE3", "PP3", "DOUBLEPT3", "T28FIX6", "DISC_n", "INDISC_n", "LRAY_n", "RRAY_n"};
}

}  // namespace topolab
