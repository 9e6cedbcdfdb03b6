#pragma once

// Framework data model: plain argumentation frameworks and rich incomplete
// argumentation frameworks (certain/uncertain arguments, certain/uncertain
// attacks, and symmetric conflicts of unknown direction).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riaf {

inline constexpr std::size_t kMaxNameLength = 255;

inline bool is_valid_name(std::string_view name) {
  if (name.empty() || name.size() > kMaxNameLength) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_';
  });
}

/// Name of an argument. Identity is by name; ordering is lexicographic.
class ArgumentId {
public:
  explicit ArgumentId(std::string name) : name_(std::move(name)) {
    if (!is_valid_name(name_)) {
      throw std::invalid_argument("invalid argument name '" + name_ + "'");
    }
  }
  explicit ArgumentId(const char* name) : ArgumentId(std::string(name)) {}

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;
  friend bool operator==(const ArgumentId&, const ArgumentId&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ArgumentId& id) {
    return os << id.name_;
  }

private:
  std::string name_;
};

struct Attack {
  ArgumentId source;
  ArgumentId target;

  Attack reversed() const { return Attack{target, source}; }
  bool is_self() const { return source == target; }

  friend auto operator<=>(const Attack&, const Attack&) = default;
  friend bool operator==(const Attack&, const Attack&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Attack& att) {
    return os << '(' << att.source << ',' << att.target << ')';
  }
};

using ArgumentSet = std::set<ArgumentId>;
using AttackSet = std::set<Attack>;

enum class ErrorKind {
  ArgumentOverlap,     // A and A^? share an argument
  RelationOverlap,     // an ordered pair occurs in two attack relations
  UndeclaredArgument,  // attack endpoint or query member not declared
  SelfConflict,        // (a,a) in the symmetric conflict relation
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArgumentOverlap: return "argument declared both certain and uncertain";
    case ErrorKind::RelationOverlap: return "attack occurs in more than one relation";
    case ErrorKind::UndeclaredArgument: return "undeclared argument";
    case ErrorKind::SelfConflict: return "self-pair in symmetric conflict relation";
  }
  return "unknown error";
}

/// Structural error in a framework. `subjects` names the offending
/// argument (one entry) or ordered pair (two entries).
class RiafError : public std::runtime_error {
public:
  RiafError(ErrorKind kind, std::vector<ArgumentId> subjects)
      : std::runtime_error(format(kind, subjects)), kind_(kind),
        subjects_(std::move(subjects)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<ArgumentId>& subjects() const noexcept { return subjects_; }

private:
  static std::string format(ErrorKind kind, const std::vector<ArgumentId>& subjects) {
    std::string msg = to_string(kind);
    if (subjects.size() == 1) {
      msg += ": " + subjects[0].name();
    } else if (subjects.size() == 2) {
      msg += ": (" + subjects[0].name() + "," + subjects[1].name() + ")";
    }
    return msg;
  }

  ErrorKind kind_;
  std::vector<ArgumentId> subjects_;
};

/// Pairs of `pairs` with both endpoints in `args`.
inline AttackSet restrict(const AttackSet& pairs, const ArgumentSet& args) {
  AttackSet out;
  for (const auto& att : pairs) {
    if (args.contains(att.source) && args.contains(att.target)) out.insert(out.end(), att);
  }
  return out;
}

namespace detail {

inline void require_declared(const ArgumentSet& declared, const AttackSet& attacks) {
  for (const auto& att : attacks) {
    if (!declared.contains(att.source)) {
      throw RiafError(ErrorKind::UndeclaredArgument, {att.source});
    }
    if (!declared.contains(att.target)) {
      throw RiafError(ErrorKind::UndeclaredArgument, {att.target});
    }
  }
}

}  // namespace detail

class ArgumentationFramework {
public:
  ArgumentationFramework() = default;

  ArgumentationFramework(ArgumentSet arguments, AttackSet attacks)
      : arguments_(std::move(arguments)), attacks_(std::move(attacks)) {
    detail::require_declared(arguments_, attacks_);
  }

  const ArgumentSet& arguments() const noexcept { return arguments_; }
  const AttackSet& attacks() const noexcept { return attacks_; }

  bool contains(const ArgumentId& a) const { return arguments_.contains(a); }
  bool has_attack(const ArgumentId& from, const ArgumentId& to) const {
    return attacks_.contains(Attack{from, to});
  }

  friend auto operator<=>(const ArgumentationFramework&, const ArgumentationFramework&) = default;
  friend bool operator==(const ArgumentationFramework&, const ArgumentationFramework&) = default;

private:
  ArgumentSet arguments_;
  AttackSet attacks_;
};

/// Unvalidated five-part structure; turned into a RichIAF by validate_riaf.
struct RiafCandidate {
  ArgumentSet certain_args;
  ArgumentSet uncertain_args;
  AttackSet certain_attacks;
  AttackSet uncertain_attacks;
  AttackSet uncertain_conflicts;
};

class RichIAF;
RichIAF validate_riaf(RiafCandidate raw);

/// Immutable, validated rich incomplete argumentation framework.
///
/// `uncertain_conflicts()` holds both directions of every conflict pair;
/// `conflict_pairs()` lists each unordered pair once, smaller name first.
class RichIAF {
public:
  RichIAF() = default;

  const ArgumentSet& certain_args() const noexcept { return certain_args_; }
  const ArgumentSet& uncertain_args() const noexcept { return uncertain_args_; }
  const AttackSet& certain_attacks() const noexcept { return certain_attacks_; }
  const AttackSet& uncertain_attacks() const noexcept { return uncertain_attacks_; }
  const AttackSet& uncertain_conflicts() const noexcept { return uncertain_conflicts_; }

  const ArgumentSet& all_arguments() const noexcept { return all_args_; }
  /// R ∪ R^? ∪ ↔?, every ordered pair that may appear in some completion.
  const AttackSet& potential_attacks() const noexcept { return potential_attacks_; }

  std::vector<std::pair<ArgumentId, ArgumentId>> conflict_pairs() const {
    std::vector<std::pair<ArgumentId, ArgumentId>> out;
    for (const auto& att : uncertain_conflicts_) {
      if (att.source < att.target) out.emplace_back(att.source, att.target);
    }
    return out;
  }

  bool is_certain(const ArgumentId& a) const { return certain_args_.contains(a); }
  bool is_uncertain(const ArgumentId& a) const { return uncertain_args_.contains(a); }
  bool contains(const ArgumentId& a) const { return all_args_.contains(a); }

  bool has_uncertainty() const {
    return !uncertain_args_.empty() || !uncertain_attacks_.empty() ||
           !uncertain_conflicts_.empty();
  }

  friend bool operator==(const RichIAF& lhs, const RichIAF& rhs) {
    return lhs.certain_args_ == rhs.certain_args_ &&
           lhs.uncertain_args_ == rhs.uncertain_args_ &&
           lhs.certain_attacks_ == rhs.certain_attacks_ &&
           lhs.uncertain_attacks_ == rhs.uncertain_attacks_ &&
           lhs.uncertain_conflicts_ == rhs.uncertain_conflicts_;
  }

  RiafCandidate to_candidate() const {
    return RiafCandidate{certain_args_, uncertain_args_, certain_attacks_,
                         uncertain_attacks_, uncertain_conflicts_};
  }

private:
  friend RichIAF validate_riaf(RiafCandidate raw);

  ArgumentSet certain_args_;
  ArgumentSet uncertain_args_;
  AttackSet certain_attacks_;
  AttackSet uncertain_attacks_;
  AttackSet uncertain_conflicts_;
  ArgumentSet all_args_;
  AttackSet potential_attacks_;
};

/// Checks every structural invariant. One-directional conflicts are closed
/// symmetrically before the disjointness checks run.
inline RichIAF validate_riaf(RiafCandidate raw) {
  for (const auto& a : raw.certain_args) {
    if (raw.uncertain_args.contains(a)) throw RiafError(ErrorKind::ArgumentOverlap, {a});
  }

  AttackSet closed;
  for (const auto& att : raw.uncertain_conflicts) {
    if (att.is_self()) throw RiafError(ErrorKind::SelfConflict, {att.source, att.target});
    closed.insert(att);
    closed.insert(att.reversed());
  }

  ArgumentSet all = raw.certain_args;
  all.insert(raw.uncertain_args.begin(), raw.uncertain_args.end());
  detail::require_declared(all, raw.certain_attacks);
  detail::require_declared(all, raw.uncertain_attacks);
  detail::require_declared(all, closed);

  auto disjoint = [](const AttackSet& lhs, const AttackSet& rhs) {
    for (const auto& att : lhs) {
      if (rhs.contains(att)) throw RiafError(ErrorKind::RelationOverlap, {att.source, att.target});
    }
  };
  disjoint(raw.certain_attacks, raw.uncertain_attacks);
  disjoint(raw.certain_attacks, closed);
  disjoint(raw.uncertain_attacks, closed);

  RichIAF out;
  out.certain_args_ = std::move(raw.certain_args);
  out.uncertain_args_ = std::move(raw.uncertain_args);
  out.certain_attacks_ = std::move(raw.certain_attacks);
  out.uncertain_attacks_ = std::move(raw.uncertain_attacks);
  out.uncertain_conflicts_ = std::move(closed);
  out.all_args_ = std::move(all);
  out.potential_attacks_ = out.certain_attacks_;
  out.potential_attacks_.insert(out.uncertain_attacks_.begin(), out.uncertain_attacks_.end());
  out.potential_attacks_.insert(out.uncertain_conflicts_.begin(), out.uncertain_conflicts_.end());
  return out;
}

inline RichIAF lift_af(const ArgumentationFramework& af) {
  return validate_riaf(RiafCandidate{af.arguments(), {}, af.attacks(), {}, {}});
}

/// ⟨A, A^?, R, R^?⟩ without the conflict relation.
struct IncompleteAF {
  ArgumentSet certain_args;
  ArgumentSet uncertain_args;
  AttackSet certain_attacks;
  AttackSet uncertain_attacks;
};

inline RichIAF lift_iaf(const IncompleteAF& iaf) {
  return validate_riaf(RiafCandidate{iaf.certain_args, iaf.uncertain_args,
                                     iaf.certain_attacks, iaf.uncertain_attacks, {}});
}

/// Comma-separated member names in set order.
inline std::string join_names(const ArgumentSet& set, std::string_view sep = ",") {
  std::string out;
  for (const auto& a : set) {
    if (!out.empty()) out += sep;
    out += a.name();
  }
  return out;
}

}  // namespace riaf
