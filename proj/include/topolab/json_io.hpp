#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "topolab/bitop.hpp"
#include "topolab/classes.hpp"
#include "topolab/mine.hpp"
#include "topolab/registry.hpp"
#include "topolab/symbolic.hpp"

namespace topolab {

using Json = nlohmann::ordered_json;

/// A finite space whose points carry names (index order = listed order).
struct NamedSpace {
  std::vector<std::string> points;
  FiniteSpace space;

  std::vector<std::string> names(PointSet a) const {
    std::vector<std::string> out;
    for (auto x : a.points()) out.push_back(points[x]);
    return out;
  }
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == name) return i;
    throw Error(ErrorCode::OutOfRangePoint, "unknown point name " + name);
  }
  PointSet set_of(const std::vector<std::string>& names) const {
    PointSet a;
    for (const auto& name : names) a = a | PointSet::singleton(index_of(name));
    return a;
  }
};

/// Default names "0", "1", ... for spaces without a file.
inline NamedSpace with_index_names(const FiniteSpace& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.size(); ++i) names.push_back(std::to_string(i));
  return {names, s};
}

/// `{"points": [...], "opens": [[names]...]}`; the family must be a topology.
inline NamedSpace parse_space_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j.contains("opens") || !j["points"].is_array() ||
      !j["opens"].is_array())
    throw Error(ErrorCode::ParseError, "expected an object with arrays \"points\" and \"opens\"");
  std::vector<std::string> points;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw Error(ErrorCode::ParseError, "point names must be strings");
    const auto name = p.get<std::string>();
    if (std::find(points.begin(), points.end(), name) != points.end())
      throw Error(ErrorCode::ParseError, "duplicate point name " + name);
    points.push_back(name);
  }
  if (points.size() > kMaxGround) throw Error(ErrorCode::GroundTooLarge, std::to_string(points.size()) + " points");
  auto index_of = [&](const std::string& name) {
    const auto it = std::find(points.begin(), points.end(), name);
    if (it == points.end()) throw Error(ErrorCode::OutOfRangePoint, "unknown point name " + name);
    return static_cast<std::size_t>(it - points.begin());
  };
  std::vector<PointSet> family;
  for (const auto& open : j["opens"]) {
    if (!open.is_array()) throw Error(ErrorCode::ParseError, "each open set must be an array of point names");
    PointSet u;
    for (const auto& p : open) {
      if (!p.is_string()) throw Error(ErrorCode::ParseError, "point names must be strings");
      u = u | PointSet::singleton(index_of(p.get<std::string>()));
    }
    family.push_back(u);
  }
  return {points, validate_topology(points.size(), family)};
}

inline NamedSpace load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_space_json(buffer.str());
}

inline Json space_json(const NamedSpace& s) {
  Json opens = Json::array();
  for (auto u : s.space.opens()) opens.push_back(s.names(u));
  return {{"points", s.points}, {"opens", opens}};
}

inline Json sets_json(const NamedSpace& s, const std::vector<PointSet>& family) {
  Json out = Json::array();
  for (auto a : family) out.push_back(s.names(a));
  return out;
}

inline Json flags_json(const SetFlags& f) {
  Json out = Json::object();
  for (const auto& field : kSetFlagFields) out[std::string(field.name)] = f.*field.member;
  return out;
}

inline Json report_json(const NamedSpace& s, const SpaceReport& r) {
  Json flags = Json::object();
  for (const auto& field : kSpaceFlagFields) flags[std::string(field.name)] = r.*field.member;
  Json singletons = Json::array();
  for (std::size_t x = 0; x < s.space.size(); ++x) {
    const PointSet pt = PointSet::singleton(x);
    singletons.push_back({{"point", s.points[x]},
                          {"sg_open", is_sg_closed(s.space, pt.complement(s.space.size()), r.decomposition.x1)},
                          {"sg_closed", is_sg_closed(s.space, pt, r.decomposition.x1)}});
  }
  return {{"flags", flags},
          {"X1", s.names(r.decomposition.x1)},
          {"X2", s.names(r.decomposition.x2)},
          {"sg_T_half_table", singletons},
          {"NS", s.names(r.ns_kernel)},
          {"NP", s.names(r.np)},
          {"max_cellular", r.max_cellular},
          {"nowhere_dense_sets", sets_json(s, r.ideal_n)},
          {"scattered_sets", sets_json(s, r.ideal_s)},
          {"hsg_closed_sets", sets_json(s, r.hsg_closed_sets)}};
}

inline Json symbolic_json(const SymbolicSpace& s, const SymbolicReport& r) {
  Json out{{"family", s.name()},
           {"sg_compact", r.sg_compact},
           {"semi_compact", r.semi_compact},
           {"C2", r.c2},
           {"C3", r.c3},
           {"N_scattered", r.n_scattered},
           {"hsg_scattered", r.hsg_scattered},
           {"scattered", r.scattered},
           {"crowded", r.crowded},
           {"cellular_infinite", r.cellular_infinite},
           {"nowhere_dense_sets", r.ideal_n.text},
           {"scattered_sets", r.ideal_s.text}};
  Json witnesses = Json::object();
  auto put = [&](const char* key, const std::optional<SymbolicSet>& w) {
    if (w) witnesses[key] = w->to_string(s);
  };
  put("C2", r.c2_witness);
  put("C3", r.c3_witness);
  put("N_scattered", r.n_scattered_witness);
  put("hsg_scattered", r.hsg_scattered_witness);
  out["witnesses"] = witnesses;
  return out;
}

inline Json bitop_json(const BitopReport& r) {
  return {{"baire_12", r.baire_12}, {"baire_21", r.baire_21}, {"utterly_baire_12", r.utterly_12},
          {"utterly_baire_21", r.utterly_21}};
}

/// The wall time is left out when `with_time` is false so that runs compare
/// byte for byte.
inline Json verification_json(const VerificationReport& r, bool with_time) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    const auto& check = find_check(c.id);
    Json entry{{"id", c.id},
               {"statement", check.statement},
               {"scope", to_string(check.scope)},
               {"status", to_string(c.status)},
               {"spaces_examined", c.spaces_examined}};
    if (c.status == CheckStatus::Fail) entry["witness"] = c.witness;
    checks.push_back(entry);
  }
  Json out{{"n_max", r.n_max}, {"spaces_examined", r.spaces_examined}, {"all_passed", r.all_passed()},
           {"checks", checks}};
  if (with_time) out["wall_seconds"] = r.wall_seconds;
  return out;
}

inline Json mine_json(const MineResult& r) {
  Json out{{"goal", r.goal}, {"expression", r.expression}, {"n_max", r.n_max}, {"spaces_examined", r.spaces_examined}};
  if (!r.witness) {
    out["result"] = "NoWitnessUpTo(" + std::to_string(r.n_max) + ")";
    return out;
  }
  const auto& c = *r.witness;
  const auto named = with_index_names(c.space);
  Json w{{"space", space_json(named)}};
  if (c.second) w["second"] = space_json(with_index_names(*c.second));
  if (c.a) w["A"] = named.names(*c.a);
  if (c.b) w["B"] = named.names(*c.b);
  if (c.open_set) w["sg_meager_open_set"] = named.names(*c.open_set);
  if (!c.sg_cover.empty()) w["sg_closed_cover"] = sets_json(named, c.sg_cover);
  Json atoms = Json::object();
  for (const auto& [name, value] : c.atoms) atoms[name] = value;
  w["atoms"] = atoms;
  out["result"] = "witness";
  out["witness"] = w;
  out["rechecked"] = r.rechecked;
  return out;
}

}  // namespace topolab
