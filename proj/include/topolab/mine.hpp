#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/bitop.hpp"
#include "topolab/classes.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/error.hpp"

namespace topolab {

/// Which set a set atom talks about.
enum class Operand { A, B, AUnionB, AIntersectB };

inline std::string_view to_string(Operand o) {
  switch (o) {
    case Operand::A: return "A";
    case Operand::B: return "B";
    case Operand::AUnionB: return "A|B";
    case Operand::AIntersectB: return "A&B";
  }
  return "";
}

/// `flag` (a space atom) or `flag(operand)` (a set atom), optionally negated.
struct Atom {
  bool negated = false;
  std::string name;
  std::optional<Operand> operand;  // set atom when present

  std::string to_string() const {
    std::string s = (negated ? "!" : "") + name;
    if (operand) s += "(" + std::string(topolab::to_string(*operand)) + ")";
    return s;
  }
};

/// Flat conjunction; A and B are existentially quantified over nonempty
/// proper subsets.
struct Expression {
  std::vector<Atom> atoms;

  bool uses_a() const { return uses(Operand::A) || uses_pair(); }
  bool uses_b() const { return uses(Operand::B) || uses_pair(); }
  std::string to_string() const {
    std::string s;
    for (const auto& a : atoms) s += (s.empty() ? "" : " & ") + a.to_string();
    return s;
  }

 private:
  bool uses(Operand o) const {
    return std::any_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.operand == o; });
  }
  bool uses_pair() const { return uses(Operand::AUnionB) || uses(Operand::AIntersectB); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_set_flag(std::string_view name) {
  return std::any_of(kSetFlagFields.begin(), kSetFlagFields.end(), [&](const auto& f) { return f.name == name; });
}

inline bool is_space_flag(std::string_view name) {
  return std::any_of(kSpaceFlagFields.begin(), kSpaceFlagFields.end(), [&](const auto& f) { return f.name == name; });
}

inline bool set_flag(const SetFlags& f, std::string_view name) {
  for (const auto& field : kSetFlagFields)
    if (field.name == name) return f.*field.member;
  throw Error(ErrorCode::MalformedGoal, "unknown set atom " + std::string(name));
}

inline bool space_flag(const SpaceReport& r, std::string_view name) {
  for (const auto& field : kSpaceFlagFields)
    if (field.name == name) return r.*field.member;
  throw Error(ErrorCode::MalformedGoal, "unknown space atom " + std::string(name));
}

inline Atom parse_atom(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::MalformedGoal, "empty atom");
  Atom atom;
  if (text.front() == '!') {
    atom.negated = true;
    text = trim(text.substr(1));
  }
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    atom.name = std::string(text);
    if (!is_space_flag(atom.name)) throw Error(ErrorCode::MalformedGoal, "unknown space atom " + atom.name);
    return atom;
  }
  if (text.back() != ')') throw Error(ErrorCode::MalformedGoal, "unbalanced parentheses in " + std::string(text));
  atom.name = std::string(trim(text.substr(0, open)));
  if (!is_set_flag(atom.name)) throw Error(ErrorCode::MalformedGoal, "unknown set atom " + atom.name);
  std::string operand;
  for (char ch : text.substr(open + 1, text.size() - open - 2))
    if (!std::isspace(static_cast<unsigned char>(ch))) operand += ch;
  for (auto o : {Operand::A, Operand::B, Operand::AUnionB, Operand::AIntersectB})
    if (operand == to_string(o)) atom.operand = o;
  if (!atom.operand) throw Error(ErrorCode::MalformedGoal, "unknown operand " + operand);
  return atom;
}

}  // namespace detail

/// Parses `atom & atom & ...`; `&` inside parentheses belongs to an operand.
inline Expression parse_expression(std::string_view text) {
  Expression e;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : '&';
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) throw Error(ErrorCode::MalformedGoal, "unbalanced parentheses");
    if (ch == '&' && depth == 0) {
      e.atoms.push_back(detail::parse_atom(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorCode::MalformedGoal, "unbalanced parentheses");
  return e;
}

/// Goals over pairs of topologies on one ground set.
enum class BitopGoal { None, BaireNotUtterly, BaireNotUtterlyNondegenerate, BaireNotUtterlyFinerDiscrete };

struct NamedGoal {
  std::string_view id;
  std::string_view expression;  // empty for bitop goals
  std::string_view description;
  BitopGoal bitop = BitopGoal::None;
};

inline const std::vector<NamedGoal>& named_goals() {
  static const std::vector<NamedGoal> goals{
      {"sg-union-failure", "sg_closed(A) & sg_closed(B) & !sg_closed(A|B)",
       "two sg-closed sets with non-sg-closed union"},
      {"sg-semi-closed-union-failure", "sg_closed(A) & semi_closed(B) & !sg_closed(A|B)",
       "an sg-closed and a semi-closed set with non-sg-closed union"},
      {"sg-open-not-preopen", "sg_open(A) & !preopen(A)", "sg-open but not preopen"},
      {"preopen-not-sg-open", "preopen(A) & !sg_open(A)", "preopen but not sg-open"},
      {"hsg-not-nowhere-dense", "hsg_closed(A) & !nowhere_dense(A)", "hsg-closed but not nowhere dense"},
      {"sg-closed-not-semi-closed", "sg_closed(A) & !semi_closed(A)", "sg-closed but not semi-closed"},
      {"sg-closed-not-hsg-closed", "sg_closed(A) & !hsg_closed(A)", "sg-closed but not hsg-closed"},
      {"all-hsg-not-indiscrete", "all_hsg_closed & !indiscrete", "every subset hsg-closed, yet not indiscrete"},
      {"n-scattered-not-hsg-scattered", "N_scattered & !hsg_scattered", "N-scattered but not hsg-scattered"},
      {"hsg-scattered-not-scattered", "hsg_scattered & !scattered", "hsg-scattered but not scattered"},
      {"sgo-topology", "sgo_topology & !indiscrete & !discrete", "sg-open sets form a nontrivial topology"},
      {"sgo-not-topology", "!sgo_topology", "sg-open sets do not form a topology"},
      {"baire-not-utterly", "", "(1,2)-Baire but not utterly (1,2)-Baire", BitopGoal::BaireNotUtterly},
      {"baire-not-utterly-nondegenerate", "",
       "(1,2)-Baire but not utterly (1,2)-Baire, neither topology discrete or indiscrete",
       BitopGoal::BaireNotUtterlyNondegenerate},
      {"baire-not-utterly-finer-discrete", "",
       "(1,2)-Baire but not utterly (1,2)-Baire with tau1 <= tau2 and tau2 discrete",
       BitopGoal::BaireNotUtterlyFinerDiscrete},
  };
  return goals;
}

inline const NamedGoal* find_goal(std::string_view id) {
  for (const auto& g : named_goals())
    if (g.id == id) return &g;
  return nullptr;
}

/// The concrete objects realizing a goal, plus the truth value of every atom
/// as recomputed during the recheck.
struct Certificate {
  explicit Certificate(FiniteSpace s) : space(std::move(s)) {}

  FiniteSpace space;
  std::optional<FiniteSpace> second;  // tau2 for bitop goals
  std::optional<PointSet> a, b;
  std::optional<PointSet> open_set;   // bitop: the sg-meager tau1-open set
  std::vector<PointSet> sg_cover;     // bitop: sg-closed sets covering it
  std::vector<std::pair<std::string, bool>> atoms;
};

struct MineResult {
  std::string goal;
  std::string expression;
  std::size_t n_max = 0;
  std::size_t spaces_examined = 0;
  std::optional<Certificate> witness;
  bool rechecked = false;
};

namespace detail {

/// Definitional flags: the sg/hsg fields come from the definitions, not from
/// the X1 shortcuts used during the search.
inline SetFlags definitional_flags(const FiniteSpace& s, PointSet a) {
  SetFlags f = set_flags(s, a);
  f.sg_closed = is_sg_closed_def(s, a);
  f.sg_open = is_sg_closed_def(s, a.complement(s.size()));
  f.hsg_closed = is_hsg_closed_def(s, a);
  f.hsg_open = is_hsg_closed_def(s, a.complement(s.size()));
  return f;
}

inline PointSet operand_set(Operand o, PointSet a, PointSet b) {
  switch (o) {
    case Operand::A: return a;
    case Operand::B: return b;
    case Operand::AUnionB: return a | b;
    case Operand::AIntersectB: return a & b;
  }
  return a;
}

/// First (A, B) in ascending order satisfying the set atoms, given that the
/// space atoms already hold.
template <class Flags>
std::optional<std::pair<PointSet, PointSet>> find_sets(const Expression& e, std::size_t n, Flags flags_of) {
  const Mask full = static_cast<Mask>((Mask{1} << n) - 1);
  std::vector<PointSet> range;
  for (Mask m = 1; m < full; ++m) range.push_back(PointSet(m));
  const std::vector<PointSet> unused{PointSet{}};
  const auto& as = e.uses_a() ? range : unused;
  const auto& bs = e.uses_b() ? range : unused;
  for (auto a : as) {
    for (auto b : bs) {
      bool ok = true;
      for (const auto& atom : e.atoms) {
        if (!atom.operand) continue;
        if (set_flag(flags_of(operand_set(*atom.operand, a, b)), atom.name) == atom.negated) {
          ok = false;
          break;
        }
      }
      if (ok) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

inline bool space_atoms_hold(const Expression& e, const SpaceReport& r) {
  for (const auto& atom : e.atoms)
    if (!atom.operand && space_flag(r, atom.name) == atom.negated) return false;
  return true;
}

inline bool has_space_atoms(const Expression& e) {
  return std::any_of(e.atoms.begin(), e.atoms.end(), [](const Atom& a) { return !a.operand; });
}

inline bool is_degenerate(const FiniteSpace& s) {
  return s.opens().size() <= 2 || s.opens().size() == (std::size_t{1} << s.size());
}

inline bool bitop_goal_holds(BitopGoal goal, const FiniteSpace& t1, const FiniteSpace& t2) {
  if (goal == BitopGoal::BaireNotUtterlyNondegenerate && (is_degenerate(t1) || is_degenerate(t2))) return false;
  if (goal == BitopGoal::BaireNotUtterlyFinerDiscrete) {
    if (t2.opens().size() != (std::size_t{1} << t2.size())) return false;
    for (auto u : t1.opens())
      if (!t2.is_open(u)) return false;
  }
  const BitopSpace b(t1, t2);
  return bitop_baire(b, 1, 2) && !bitop_utterly_baire(b, 1, 2);
}

}  // namespace detail

/// Re-evaluates a certificate from scratch, recording whether each atom holds.
inline bool recheck(const Expression& e, Certificate& c) {
  c.atoms.clear();
  bool all = true;
  std::optional<SpaceReport> report;
  for (const auto& atom : e.atoms) {
    bool value;
    if (atom.operand) {
      const PointSet target = detail::operand_set(*atom.operand, c.a.value_or(PointSet{}), c.b.value_or(PointSet{}));
      value = detail::set_flag(detail::definitional_flags(c.space, target), atom.name);
    } else {
      if (!report) report = space_report(c.space);
      value = detail::space_flag(*report, atom.name);
    }
    c.atoms.emplace_back(atom.to_string(), value != atom.negated);
    all = all && value != atom.negated;
  }
  return all;
}

/// Bitop recheck: the tau1-open set is nonempty, covered by (1,2)-sg-closed
/// subsets checked against the definition, and no nonempty tau1-open set is
/// (1,2)-meager.
inline bool recheck_bitop(BitopGoal goal, Certificate& c) {
  c.atoms.clear();
  const BitopSpace b(c.space, *c.second);
  bool baire = true;
  for (auto u : c.space.opens())
    if (!u.empty() && bitop_meager(b, 1, 2, u)) baire = false;
  PointSet covered;
  bool cover_ok = c.open_set && !c.open_set->empty() && c.space.is_open(*c.open_set);
  for (auto piece : c.sg_cover) {
    cover_ok = cover_ok && piece.subset_of(*c.open_set) && bitop_sg_closed(b, 1, 2, piece);
    covered = covered | piece;
  }
  cover_ok = cover_ok && covered == c.open_set;
  const bool shape = detail::bitop_goal_holds(goal, c.space, *c.second) || goal == BitopGoal::BaireNotUtterly;
  c.atoms.emplace_back("baire_12", baire);
  c.atoms.emplace_back("!utterly_12", cover_ok);
  c.atoms.emplace_back("shape", shape);
  return baire && cover_ok && shape;
}

/// Searches spaces on 0..n_max points in canonical order (pairs of spaces in
/// lexicographic order for bitop goals) and returns the first witness.
inline MineResult mine(std::string_view goal_or_expression, std::size_t n_max) {
  const NamedGoal* named = find_goal(goal_or_expression);
  MineResult result;
  result.goal = std::string(goal_or_expression);
  result.n_max = n_max;
  const BitopGoal bitop = named ? named->bitop : BitopGoal::None;
  if (bitop == BitopGoal::None) {
    const Expression e = parse_expression(named ? named->expression : goal_or_expression);
    result.expression = e.to_string();
    if (n_max > 5) throw Error(ErrorCode::GroundTooLarge, "mine is limited to n <= 5");
    for (std::size_t k = 0; k <= n_max && !result.witness; ++k) {
      for (const auto& s : enumerate_topologies(k)) {
        ++result.spaces_examined;
        if (detail::has_space_atoms(e) && !detail::space_atoms_hold(e, space_report(s))) continue;
        const PointSet x1 = nowhere_dense_points(s);
        std::optional<std::pair<PointSet, PointSet>> sets{std::pair{PointSet{}, PointSet{}}};
        if (e.uses_a() || e.uses_b()) {
          if (k < 2) continue;  // no nonempty proper subsets
          sets = detail::find_sets(e, k, [&](PointSet a) { return set_flags(s, a, x1); });
        }
        if (!sets) continue;
        Certificate c(s);
        if (e.uses_a()) c.a = sets->first;
        if (e.uses_b()) c.b = sets->second;
        result.rechecked = recheck(e, c);
        result.witness = std::move(c);
        break;
      }
    }
    return result;
  }

  result.expression = std::string(named->description);
  if (n_max > 4) throw Error(ErrorCode::GroundTooLarge, "bitop mining is limited to n <= 4");
  for (std::size_t k = 0; k <= n_max && !result.witness; ++k) {
    const auto spaces = enumerate_topologies(k);
    for (std::size_t i = 0; i < spaces.size() && !result.witness; ++i) {
      for (std::size_t j = 0; j < spaces.size(); ++j) {
        ++result.spaces_examined;
        if (!detail::bitop_goal_holds(bitop, spaces[i], spaces[j])) continue;
        Certificate c(spaces[i]);
        c.second = spaces[j];
        const BitopSpace b(spaces[i], spaces[j]);
        for (auto u : spaces[i].opens()) {
          if (u.empty() || !bitop_sg_meager(b, 1, 2, u)) continue;
          c.open_set = u;
          for_each_subset(u, [&](PointSet piece) {
            if (!piece.empty() && bitop_sg_closed(b, 1, 2, piece)) c.sg_cover.push_back(piece);
          });
          break;
        }
        result.rechecked = recheck_bitop(bitop, c);
        result.witness = std::move(c);
        break;
      }
    }
  }
  return result;
}

}  // namespace topolab
