#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topolab/topolab.hpp"

using namespace topolab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "}";
}

void print_flags(const Json& flags, const std::string& indent) {
  for (const auto& [name, value] : flags.items()) std::cout << indent << name << ": " << value.dump() << "\n";
}

int cmd_validate(const std::string& path, bool json) {
  const auto s = load_space_file(path);
  if (json)
    std::cout << Json{{"valid", true}, {"space", space_json(s)}}.dump(2) << "\n";
  else
    std::cout << "valid topology on " << s.points.size() << " points with " << s.space.opens().size()
              << " open sets\n";
  return kOk;
}

int cmd_analyze(const std::string& path, const std::vector<std::string>& set, bool json) {
  const auto s = load_space_file(path);
  const auto report = space_report(s.space);
  Json out = report_json(s, report);
  std::optional<PointSet> a;
  if (!set.empty()) {
    a = s.set_of(set);
    out["set"] = s.names(*a);
    out["set_flags"] = flags_json(set_flags(s.space, *a));
  }
  if (json) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "space: " << s.points.size() << " points, " << s.space.opens().size() << " open sets\n";
  std::cout << "X1 = " << join(s.names(report.decomposition.x1)) << "  X2 = " << join(s.names(report.decomposition.x2))
            << "\n";
  std::cout << "NS = " << join(s.names(report.ns_kernel)) << "  NP = " << join(s.names(report.np)) << "\n";
  std::cout << "sg-T1/2 singleton table:\n";
  for (const auto& row : out["sg_T_half_table"])
    std::cout << "  " << row["point"].get<std::string>() << ": sg_open=" << row["sg_open"].dump()
              << " sg_closed=" << row["sg_closed"].dump() << "\n";
  std::cout << "space flags:\n";
  print_flags(out["flags"], "  ");
  if (a) {
    std::cout << "set " << join(s.names(*a)) << ":\n";
    print_flags(out["set_flags"], "  ");
  }
  return kOk;
}

int cmd_enumerate(std::size_t n, bool count_only, bool modulo_homeo, unsigned workers, bool json) {
  if (n > 6) throw Error(ErrorCode::GroundTooLarge, "enumerate is limited to n <= 6");
  const auto spaces = enumerate_topologies(n, {.up_to_homeomorphism = modulo_homeo, .workers = workers});
  if (json) {
    Json out{{"n", n}, {"modulo_homeomorphism", modulo_homeo}, {"count", spaces.size()}};
    if (!count_only) {
      Json list = Json::array();
      for (const auto& s : spaces) list.push_back(space_json(with_index_names(s))["opens"]);
      out["spaces"] = list;
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  if (!count_only)
    for (const auto& s : spaces) std::cout << s.to_string() << "\n";
  std::cout << "count: " << spaces.size() << "\n";
  return kOk;
}

int cmd_verify(std::size_t n, const std::string& ids, unsigned workers, bool mask_time, bool json) {
  VerifyOptions options;
  options.n_max = n;
  options.workers = workers;
  std::stringstream in(ids);
  for (std::string id; std::getline(in, id, ',');)
    if (!id.empty()) options.ids.push_back(id);
  const auto report = verify(options);
  if (json) {
    std::cout << verification_json(report, !mask_time).dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << c.id << " " << to_string(c.status);
      if (c.status == CheckStatus::Fail) std::cout << "  witness: " << c.witness;
      std::cout << "\n";
    }
    std::cout << "spaces examined: " << report.spaces_examined << "\n";
    if (!mask_time) std::cout << "wall time: " << report.wall_seconds << " s\n";
  }
  return report.all_passed() ? kOk : kFailed;
}

int cmd_mine(const std::string& goal, std::size_t n, bool json) {
  const auto r = mine(goal, n);
  if (json) {
    std::cout << mine_json(r).dump(2) << "\n";
  } else {
    std::cout << "goal: " << r.goal << "\nexpression: " << r.expression << "\n";
    if (!r.witness) {
      std::cout << "NoWitnessUpTo(" << n << ") after " << r.spaces_examined << " spaces\n";
    } else {
      const auto& c = *r.witness;
      std::cout << "witness: " << c.space.to_string() << "\n";
      if (c.second) std::cout << "second:  " << c.second->to_string() << "\n";
      if (c.a) std::cout << "A = " << c.a->to_string() << "\n";
      if (c.b) std::cout << "B = " << c.b->to_string() << "\n";
      if (c.open_set) std::cout << "sg-meager open set = " << c.open_set->to_string() << "\n";
      for (const auto& [atom, value] : c.atoms) std::cout << "  " << atom << " = " << (value ? "true" : "false") << "\n";
      std::cout << "recheck: " << (r.rechecked ? "ok" : "FAILED") << "\n";
    }
  }
  return r.witness && r.rechecked ? kOk : kFailed;
}

int cmd_symbolic(const std::string& family, std::optional<std::size_t> truncate_to, bool json) {
  const SymbolicSpace s = parse_family(family);
  Json out = symbolic_json(s, sym_space_report(s));
  if (truncate_to) {
    const auto t = truncate(s, *truncate_to);
    Json faithful = Json::array();
    for (const auto& field : kSetFlagFields)
      if (t.faithful.*field.member) faithful.push_back(field.name);
    out["truncation"] = {{"space", space_json(with_index_names(t.space))}, {"faithful_flags", faithful}};
    if (!t.note.empty()) out["truncation"]["note"] = t.note;
  }
  if (json) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [key, value] : out.items()) {
    if (key == "witnesses" || key == "truncation") continue;
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const auto& [key, value] : out["witnesses"].items())
    std::cout << "not " << key << ", witness " << value.get<std::string>() << "\n";
  if (truncate_to) std::cout << "truncation: " << truncate(s, *truncate_to).space.to_string() << "\n";
  return kOk;
}

int cmd_bitop(const std::string& path1, const std::string& path2, bool json) {
  const auto s1 = load_space_file(path1), s2 = load_space_file(path2);
  if (s1.points != s2.points) throw Error(ErrorCode::BadSize, "the two files must list the same points in order");
  const auto r = bitop_space_report(BitopSpace(s1.space, s2.space));
  const Json out = bitop_json(r);
  if (json)
    std::cout << out.dump(2) << "\n";
  else
    print_flags(out, "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topolab: exact engine for sg-closed, hsg-closed and N-scattered notions on finite spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string path, path2, ids, goal, family;
  std::vector<std::string> set;
  std::size_t n = 0;
  unsigned workers = 1;
  bool count_only = false, modulo_homeo = false, mask_time = false, report_flag = false;
  std::optional<std::size_t> truncate_to;

  auto* validate = app.add_subcommand("validate", "Check that a JSON space is a topology");
  validate->add_option("file", path, "Space JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "Space report and optional set flags");
  analyze->add_option("file", path, "Space JSON file")->required();
  analyze->add_option("--set", set, "Subset by point names")->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "All topologies on n points");
  enumerate->add_option("--n", n, "Number of points")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  enumerate->add_flag("--modulo-homeo", modulo_homeo, "One representative per homeomorphism class");
  enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem registry");
  verify_cmd->add_option("--n", n, "Largest ground size (1..5)")->required();
  verify_cmd->add_option("--ids", ids, "Comma-separated check ids");
  verify_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--mask-time", mask_time, "Omit the wall time");

  auto* mine_cmd = app.add_subcommand("mine", "Search for a counterexample");
  mine_cmd->add_option("--goal", goal, "Goal id or flat conjunction of atoms")->required();
  mine_cmd->add_option("--n", n, "Largest ground size")->required();

  auto* symbolic = app.add_subcommand("symbolic", "Report on an infinite symbolic space");
  symbolic->add_option("family", family, "cofinite | pp | opc | indiscrete | lray | rray")->required();
  symbolic->add_flag("--report", report_flag, "Print the space report (default)");
  symbolic->add_option("--truncate", truncate_to, "Also show the n-point truncation");

  auto* bitop = app.add_subcommand("bitop", "Bitopological report for two topologies on one ground set");
  bitop->add_option("file1", path, "tau1 JSON file")->required();
  bitop->add_option("file2", path2, "tau2 JSON file")->required();
  bitop->add_flag("--report", report_flag, "Print the Baire report (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(path, json);
    if (*analyze) return cmd_analyze(path, set, json);
    if (*enumerate) return cmd_enumerate(n, count_only, modulo_homeo, workers, json);
    if (*verify_cmd) return cmd_verify(n, ids, workers, mask_time, json);
    if (*mine_cmd) return cmd_mine(goal, n, json);
    if (*symbolic) return cmd_symbolic(family, truncate_to, json);
    if (*bitop) return cmd_bitop(path, path2, json);
  } catch (const Error& e) {
    if (json)
      std::cout << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
