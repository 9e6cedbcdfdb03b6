#pragma once

// Clausal encodings of a RichIAF's completion structure and of the
// conflict-free, admissible and stable semantics over its completions.
//
// Variables:
//   y(a)    a is present in the completion
//   r(a,b)  (a,b) is an attack of the completion
//   x(a)    a is in the extension
//   z(a)    a is attacked by the extension
//   t(b,a)  auxiliary for x(b) ∧ y(b) ∧ r(b,a)
//
// Allocation is blockwise: all y, all r, all x, then z and t when the
// semantics needs defeat variables; each block in lexicographic order.
// The z/t definitions only carry the z → ∨ t and t → conjunct directions;
// every formula below uses z positively in its premises' conclusions, so the
// other direction is never needed.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riaf/core.hpp"

namespace riaf::sat {

using Literal = int;
using Clause = std::vector<Literal>;

enum class VarKind { Y, R, X, Z, T };

inline char to_char(VarKind kind) {
  switch (kind) {
    case VarKind::Y: return 'y';
    case VarKind::R: return 'r';
    case VarKind::X: return 'x';
    case VarKind::Z: return 'z';
    case VarKind::T: return 't';
  }
  return '?';
}

/// Semantic name of a variable. Pair variables (r, t) carry `second`.
struct VarKey {
  VarKind kind;
  ArgumentId first;
  std::optional<ArgumentId> second;

  friend auto operator<=>(const VarKey&, const VarKey&) = default;
  friend bool operator==(const VarKey&, const VarKey&) = default;
};

class VarSpace {
public:
  VarSpace(const RichIAF& riaf, bool with_defeat) : with_defeat_(with_defeat) {
    for (const auto& a : riaf.all_arguments()) allocate({VarKind::Y, a, std::nullopt});
    for (const auto& att : riaf.potential_attacks()) allocate({VarKind::R, att.source, att.target});
    for (const auto& a : riaf.all_arguments()) allocate({VarKind::X, a, std::nullopt});
    if (with_defeat) {
      for (const auto& a : riaf.all_arguments()) allocate({VarKind::Z, a, std::nullopt});
      for (const auto& att : riaf.potential_attacks()) {
        allocate({VarKind::T, att.source, att.target});
      }
    }
  }

  int size() const { return static_cast<int>(keys_.size()); }
  bool with_defeat() const { return with_defeat_; }

  /// Key of variable `var` (1-based).
  const VarKey& key(int var) const { return keys_.at(static_cast<std::size_t>(var - 1)); }

  int y(const ArgumentId& a) const { return lookup({VarKind::Y, a, std::nullopt}); }
  int r(const ArgumentId& a, const ArgumentId& b) const { return lookup({VarKind::R, a, b}); }
  int x(const ArgumentId& a) const { return lookup({VarKind::X, a, std::nullopt}); }
  int z(const ArgumentId& a) const { return lookup({VarKind::Z, a, std::nullopt}); }
  int t(const ArgumentId& b, const ArgumentId& a) const { return lookup({VarKind::T, b, a}); }

private:
  void allocate(VarKey key) {
    keys_.push_back(key);
    index_.emplace(std::move(key), static_cast<int>(keys_.size()));
  }

  int lookup(const VarKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::out_of_range("variable not allocated");
    return it->second;
  }

  bool with_defeat_;
  std::vector<VarKey> keys_;
  std::map<VarKey, int> index_;
};

/// Clause list over a shared variable space.
class CnfFormula {
public:
  explicit CnfFormula(std::shared_ptr<const VarSpace> vars) : vars_(std::move(vars)) {}

  const VarSpace& vars() const { return *vars_; }
  const std::shared_ptr<const VarSpace>& shared_vars() const { return vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  int num_vars() const { return vars_->size(); }

  /// Adds a clause; repeated literals collapse to one occurrence.
  void add(Clause clause) {
    Clause unique;
    for (auto lit : clause) {
      if (lit == 0 || std::abs(lit) > vars_->size()) {
        throw std::out_of_range("literal outside the variable space");
      }
      if (std::find(unique.begin(), unique.end(), lit) == unique.end()) unique.push_back(lit);
    }
    clauses_.push_back(std::move(unique));
  }

  /// Appends the clauses of `other`, which must share this variable space.
  CnfFormula& operator&=(const CnfFormula& other) {
    if (other.vars_ != vars_) throw std::invalid_argument("formulas use different variable spaces");
    clauses_.insert(clauses_.end(), other.clauses_.begin(), other.clauses_.end());
    return *this;
  }

  friend CnfFormula operator&(CnfFormula lhs, const CnfFormula& rhs) {
    lhs &= rhs;
    return lhs;
  }

private:
  std::shared_ptr<const VarSpace> vars_;
  std::vector<Clause> clauses_;
};

inline std::shared_ptr<const VarSpace> make_var_space(const RichIAF& riaf, bool with_defeat) {
  return std::make_shared<const VarSpace>(riaf, with_defeat);
}

/// Completion structure. Certain attacks and conflict pairs with uncertain
/// endpoints only bind once both endpoints are present, and every r variable
/// is forced false when an endpoint is absent.
inline CnfFormula encode_structure(const RichIAF& riaf, std::shared_ptr<const VarSpace> vars) {
  CnfFormula cnf(std::move(vars));
  const auto& v = cnf.vars();
  for (const auto& a : riaf.certain_args()) cnf.add({v.y(a)});
  // a certain attack is only forced once both endpoints are present
  for (const auto& att : riaf.certain_attacks()) {
    Clause clause{v.r(att.source, att.target)};
    if (riaf.is_uncertain(att.source)) clause.push_back(-v.y(att.source));
    if (riaf.is_uncertain(att.target) && att.target != att.source) clause.push_back(-v.y(att.target));
    cnf.add(std::move(clause));
  }
  for (const auto& [a, b] : riaf.conflict_pairs()) {
    Clause clause{v.r(a, b), v.r(b, a)};
    if (riaf.is_uncertain(a)) clause.push_back(-v.y(a));
    if (riaf.is_uncertain(b)) clause.push_back(-v.y(b));
    cnf.add(std::move(clause));
  }
  for (const auto& a : riaf.uncertain_args()) {
    cnf.add({v.y(a), -v.x(a)});
    for (const auto& att : riaf.potential_attacks()) {
      if (att.source == a || att.target == a) cnf.add({v.y(a), -v.r(att.source, att.target)});
    }
  }
  return cnf;
}

inline CnfFormula encode_structure(const RichIAF& riaf) {
  return encode_structure(riaf, make_var_space(riaf, false));
}

inline CnfFormula encode_cf(const RichIAF& riaf, std::shared_ptr<const VarSpace> vars) {
  CnfFormula cnf(std::move(vars));
  const auto& v = cnf.vars();
  for (const auto& att : riaf.potential_attacks()) {
    const auto& a = att.source;
    const auto& b = att.target;
    cnf.add({-v.y(a), -v.y(b), -v.r(a, b), -v.x(a), -v.x(b)});
  }
  return cnf;
}

/// z(a) → ∨ t(b,a) over potential attackers b, with t(b,a) → x(b), y(b), r(b,a).
inline CnfFormula encode_defeat_defs(const RichIAF& riaf, std::shared_ptr<const VarSpace> vars) {
  CnfFormula cnf(std::move(vars));
  const auto& v = cnf.vars();
  if (!v.with_defeat()) throw std::invalid_argument("variable space lacks defeat variables");
  for (const auto& a : riaf.all_arguments()) {
    Clause support{-v.z(a)};
    std::vector<ArgumentId> attackers;
    for (const auto& att : riaf.potential_attacks()) {
      if (att.target == a) attackers.push_back(att.source);
    }
    for (const auto& b : attackers) support.push_back(v.t(b, a));
    cnf.add(std::move(support));
    for (const auto& b : attackers) {
      cnf.add({-v.t(b, a), v.x(b)});
      cnf.add({-v.t(b, a), v.y(b)});
      cnf.add({-v.t(b, a), v.r(b, a)});
    }
  }
  return cnf;
}

inline CnfFormula encode_ad(const RichIAF& riaf, std::shared_ptr<const VarSpace> vars) {
  CnfFormula cnf = encode_cf(riaf, vars);
  const auto& v = cnf.vars();
  for (const auto& att : riaf.potential_attacks()) {
    const auto& b = att.source;
    const auto& a = att.target;
    cnf.add({-v.x(a), -v.y(a), -v.y(b), -v.r(b, a), v.z(b)});
  }
  cnf &= encode_defeat_defs(riaf, vars);
  return cnf;
}

inline CnfFormula encode_stb(const RichIAF& riaf, std::shared_ptr<const VarSpace> vars) {
  CnfFormula cnf = encode_cf(riaf, vars);
  const auto& v = cnf.vars();
  for (const auto& a : riaf.all_arguments()) cnf.add({v.x(a), -v.y(a), v.z(a)});
  cnf &= encode_defeat_defs(riaf, vars);
  return cnf;
}

enum class Encoding { Structure, AD, STB };

/// Structure alone, or structure conjoined with the admissible or stable formula.
inline CnfFormula encode(const RichIAF& riaf, Encoding which) {
  auto vars = make_var_space(riaf, which != Encoding::Structure);
  CnfFormula cnf = encode_structure(riaf, vars);
  if (which == Encoding::AD) cnf &= encode_ad(riaf, vars);
  if (which == Encoding::STB) cnf &= encode_stb(riaf, vars);
  return cnf;
}

/// Model as a truth table indexed by variable (entry 0 unused).
using Model = std::vector<bool>;

inline ArgumentationFramework decode_completion(const RichIAF& riaf, const VarSpace& vars,
                                                const Model& model) {
  ArgumentSet args;
  for (const auto& a : riaf.all_arguments()) {
    if (model.at(vars.y(a))) args.insert(args.end(), a);
  }
  AttackSet attacks;
  for (const auto& att : riaf.potential_attacks()) {
    if (model.at(vars.r(att.source, att.target)) && args.contains(att.source) &&
        args.contains(att.target)) {
      attacks.insert(attacks.end(), att);
    }
  }
  return ArgumentationFramework(std::move(args), std::move(attacks));
}

inline ArgumentSet decode_extension(const RichIAF& riaf, const VarSpace& vars, const Model& model) {
  ArgumentSet out;
  for (const auto& a : riaf.all_arguments()) {
    if (model.at(vars.x(a)) && model.at(vars.y(a))) out.insert(out.end(), a);
  }
  return out;
}

/// Literals fixing every y and r variable to its value in `model`.
inline std::vector<Literal> structure_assumptions(const RichIAF& riaf, const VarSpace& vars,
                                                  const Model& model) {
  std::vector<Literal> out;
  for (const auto& a : riaf.all_arguments()) {
    const int var = vars.y(a);
    out.push_back(model.at(var) ? var : -var);
  }
  for (const auto& att : riaf.potential_attacks()) {
    const int var = vars.r(att.source, att.target);
    out.push_back(model.at(var) ? var : -var);
  }
  return out;
}

}  // namespace riaf::sat
