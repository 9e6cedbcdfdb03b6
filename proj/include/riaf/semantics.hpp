#pragma once

// Dung-style extension semantics on plain argumentation frameworks.
//
// Computation happens on a bitmask view of the framework (arguments indexed
// in name order), which caps a single framework at 64 arguments. Extension
// enumeration walks the conflict-free sets by backtracking and filters them,
// which is fine for the small frameworks this library targets.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riaf/core.hpp"

namespace riaf {

enum class Semantics { CF, AD, CO, GR, PR, STB };

inline constexpr Semantics kAllSemantics[] = {Semantics::CF, Semantics::AD, Semantics::CO,
                                              Semantics::GR, Semantics::PR, Semantics::STB};

inline std::string_view to_string(Semantics sem) {
  switch (sem) {
    case Semantics::CF: return "cf";
    case Semantics::AD: return "ad";
    case Semantics::CO: return "co";
    case Semantics::GR: return "gr";
    case Semantics::PR: return "pr";
    case Semantics::STB: return "stb";
  }
  return "?";
}

inline std::optional<Semantics> parse_semantics(std::string_view token) {
  for (auto sem : kAllSemantics) {
    if (to_string(sem) == token) return sem;
  }
  return std::nullopt;
}

enum class AcceptanceStatus { Skeptical, Credulous, Rejected };

struct AcceptanceSets {
  ArgumentSet skeptical;
  ArgumentSet credulous;
  ArgumentSet rejected;

  /// Skeptical wins over credulous for arguments in both sets.
  AcceptanceStatus status(const ArgumentId& a) const {
    if (skeptical.contains(a)) return AcceptanceStatus::Skeptical;
    if (credulous.contains(a)) return AcceptanceStatus::Credulous;
    return AcceptanceStatus::Rejected;
  }
};

namespace detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxIndexedArguments = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

/// Index-based view of an AF: attackers_[i] is the mask of arguments
/// attacking argument i, targets_[i] the mask of arguments i attacks.
class IndexedFramework {
public:
  explicit IndexedFramework(const ArgumentationFramework& af)
      : names_(af.arguments().begin(), af.arguments().end()) {
    if (names_.size() > kMaxIndexedArguments) {
      throw std::length_error("framework has more than 64 arguments");
    }
    attackers_.assign(names_.size(), 0);
    targets_.assign(names_.size(), 0);
    for (const auto& att : af.attacks()) {
      auto s = index_of(att.source);
      auto t = index_of(att.target);
      attackers_[t] |= bit(s);
      targets_[s] |= bit(t);
    }
    all_ = names_.size() == 64 ? ~Mask{0} : bit(names_.size()) - 1;
  }

  std::size_t size() const { return names_.size(); }
  Mask all() const { return all_; }
  Mask attackers(std::size_t i) const { return attackers_[i]; }

  std::size_t index_of(const ArgumentId& a) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), a);
    if (it == names_.end() || *it != a) throw RiafError(ErrorKind::UndeclaredArgument, {a});
    return static_cast<std::size_t>(it - names_.begin());
  }

  Mask to_mask(const ArgumentSet& s) const {
    Mask m = 0;
    for (const auto& a : s) m |= bit(index_of(a));
    return m;
  }

  ArgumentSet to_set(Mask m) const {
    ArgumentSet out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (m & bit(i)) out.insert(out.end(), names_[i]);
    }
    return out;
  }

  /// Arguments attacked by some member of m.
  Mask attacked_by(Mask m) const {
    Mask out = 0;
    for (std::size_t i = 0; m; ++i, m >>= 1) {
      if (m & 1) out |= targets_[i];
    }
    return out;
  }

  bool conflict_free(Mask m) const { return (attacked_by(m) & m) == 0; }

  /// Characteristic function: arguments all of whose attackers are attacked by m.
  Mask defended_by(Mask m) const {
    const Mask hit = attacked_by(m);
    Mask out = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if ((attackers_[i] & ~hit) == 0) out |= bit(i);
    }
    return out;
  }

  bool admissible(Mask m) const {
    return conflict_free(m) && (m & ~defended_by(m)) == 0;
  }
  bool complete(Mask m) const { return conflict_free(m) && defended_by(m) == m; }
  bool stable(Mask m) const { return conflict_free(m) && (m | attacked_by(m)) == all_; }

  Mask grounded() const {
    Mask current = 0;
    for (;;) {
      Mask next = defended_by(current);
      if (next == current) return current;
      current = next;
    }
  }

  /// Calls visit(mask) for every conflict-free set.
  template <typename Visit>
  void for_each_conflict_free(Visit&& visit) const {
    extend_conflict_free(0, 0, visit);
  }

  std::vector<Mask> extensions(Semantics sem) const {
    std::vector<Mask> out;
    if (sem == Semantics::GR) {
      out.push_back(grounded());
      return out;
    }
    for_each_conflict_free([&](Mask m) {
      bool keep = false;
      switch (sem) {
        case Semantics::CF: keep = true; break;
        case Semantics::AD: keep = admissible(m); break;
        case Semantics::CO:
        case Semantics::PR: keep = complete(m); break;
        case Semantics::STB: keep = stable(m); break;
        case Semantics::GR: break;
      }
      if (keep) out.push_back(m);
    });
    if (sem == Semantics::PR) {
      std::vector<Mask> maximal;
      for (Mask m : out) {
        bool dominated = std::any_of(out.begin(), out.end(), [m](Mask other) {
          return other != m && (m & ~other) == 0;
        });
        if (!dominated) maximal.push_back(m);
      }
      out = std::move(maximal);
    }
    return out;
  }

private:
  template <typename Visit>
  void extend_conflict_free(std::size_t i, Mask current, Visit& visit) const {
    if (i == names_.size()) {
      visit(current);
      return;
    }
    extend_conflict_free(i + 1, current, visit);
    const Mask with = current | bit(i);
    // i may join only if it neither attacks nor is attacked by the current set, nor itself
    if ((attackers_[i] & with) == 0 && (targets_[i] & with) == 0) {
      extend_conflict_free(i + 1, with, visit);
    }
  }

  std::vector<ArgumentId> names_;
  std::vector<Mask> attackers_;
  std::vector<Mask> targets_;
  Mask all_ = 0;
};

inline void require_subset(const ArgumentationFramework& af, const ArgumentSet& s) {
  for (const auto& a : s) {
    if (!af.contains(a)) throw RiafError(ErrorKind::UndeclaredArgument, {a});
  }
}

inline void require_member(const ArgumentationFramework& af, const ArgumentId& a) {
  if (!af.contains(a)) throw RiafError(ErrorKind::UndeclaredArgument, {a});
}

/// Cardinality first, then lexicographic on the sorted member sequence.
inline bool extension_order(const ArgumentSet& lhs, const ArgumentSet& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

}  // namespace detail

/// True iff some member of s attacks b.
inline bool attacks(const ArgumentationFramework& af, const ArgumentSet& s, const ArgumentId& b) {
  detail::require_subset(af, s);
  detail::require_member(af, b);
  return std::any_of(s.begin(), s.end(), [&](const ArgumentId& a) { return af.has_attack(a, b); });
}

/// True iff b attacks c and s attacks b.
inline bool defends_against(const ArgumentationFramework& af, const ArgumentSet& s,
                            const ArgumentId& c, const ArgumentId& b) {
  detail::require_member(af, c);
  return af.has_attack(b, c) && attacks(af, s, b);
}

/// True iff s attacks every attacker of c.
inline bool defends(const ArgumentationFramework& af, const ArgumentSet& s, const ArgumentId& c) {
  detail::require_subset(af, s);
  detail::require_member(af, c);
  for (const auto& att : af.attacks()) {
    if (att.target == c && !attacks(af, s, att.source)) return false;
  }
  return true;
}

inline ArgumentSet grounded_extension(const ArgumentationFramework& af) {
  detail::IndexedFramework view(af);
  return view.to_set(view.grounded());
}

/// All σ-extensions, ordered by cardinality and then lexicographically.
inline std::vector<ArgumentSet> enumerate_extensions(const ArgumentationFramework& af,
                                                     Semantics sem) {
  detail::IndexedFramework view(af);
  std::vector<ArgumentSet> out;
  for (auto m : view.extensions(sem)) out.push_back(view.to_set(m));
  std::sort(out.begin(), out.end(), detail::extension_order);
  return out;
}

inline bool is_extension(const ArgumentationFramework& af, const ArgumentSet& s, Semantics sem) {
  detail::require_subset(af, s);
  detail::IndexedFramework view(af);
  const auto m = view.to_mask(s);
  switch (sem) {
    case Semantics::CF: return view.conflict_free(m);
    case Semantics::AD: return view.admissible(m);
    case Semantics::CO: return view.complete(m);
    case Semantics::GR: return m == view.grounded();
    case Semantics::STB: return view.stable(m);
    case Semantics::PR: {
      if (!view.complete(m)) return false;
      bool maximal = true;
      view.for_each_conflict_free([&](detail::Mask other) {
        if (maximal && other != m && (m & ~other) == 0 && view.admissible(other)) maximal = false;
      });
      return maximal;
    }
  }
  return false;
}

/// Skeptical/credulous/rejected arguments under sem. With no extensions
/// (stable semantics only) every argument is skeptically accepted and none
/// credulously. Under AD the skeptical set is always empty.
inline AcceptanceSets acceptance_sets(const ArgumentationFramework& af, Semantics sem) {
  if (sem == Semantics::CF) {
    throw std::invalid_argument("acceptance status is not defined for conflict-freeness");
  }
  detail::IndexedFramework view(af);
  const auto exts = view.extensions(sem);
  detail::Mask sk = view.all();
  detail::Mask cred = 0;
  for (auto m : exts) {
    sk &= m;
    cred |= m;
  }
  if (sem == Semantics::AD) sk = 0;
  return AcceptanceSets{view.to_set(sk), view.to_set(cred), view.to_set(view.all() & ~cred)};
}

/// Some σ-extension containing a, if any.
inline std::optional<ArgumentSet> credulous_witness(const ArgumentationFramework& af,
                                                    Semantics sem, const ArgumentId& a) {
  detail::IndexedFramework view(af);
  const auto target = detail::bit(view.index_of(a));
  if (sem == Semantics::GR) {
    const auto g = view.grounded();
    if (g & target) return view.to_set(g);
    return std::nullopt;
  }
  for (auto m : view.extensions(sem)) {
    if (m & target) return view.to_set(m);
  }
  return std::nullopt;
}

/// Some σ-extension not containing a, if any. Under AD the empty set always
/// qualifies.
inline std::optional<ArgumentSet> skeptical_counterexample(const ArgumentationFramework& af,
                                                           Semantics sem, const ArgumentId& a) {
  detail::IndexedFramework view(af);
  const auto target = detail::bit(view.index_of(a));
  if (sem == Semantics::AD) return ArgumentSet{};
  if (sem == Semantics::GR) {
    const auto g = view.grounded();
    if (g & target) return std::nullopt;
    return view.to_set(g);
  }
  for (auto m : view.extensions(sem)) {
    if (!(m & target)) return view.to_set(m);
  }
  return std::nullopt;
}

}  // namespace riaf
