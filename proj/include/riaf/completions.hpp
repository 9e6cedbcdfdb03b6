#pragma once

// Completions of a rich incomplete argumentation framework.
//
// Enumeration order is the lexicographic order of the choice tuple
// (uncertain-argument indicators, applicable uncertain-attack indicators,
// conflict orientations), each component listed in name order with
// absent < present and Forward < Backward < Both. Attacks and conflicts with
// an excluded endpoint are never branched on, so every completion is
// produced exactly once.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riaf/core.hpp"

namespace riaf {

/// Direction chosen for a conflict pair {a,b} with a < b.
enum class Orientation { Forward, Backward, Both };

struct CompletionChoice {
  ArgumentSet included_uncertain_args;
  AttackSet included_uncertain_attacks;
  std::map<std::pair<ArgumentId, ArgumentId>, Orientation> conflict_orientation;
};

/// Builds the completion described by a choice. Throws RiafError if the
/// choice references elements the framework does not have.
inline ArgumentationFramework apply_choice(const RichIAF& riaf, const CompletionChoice& choice) {
  ArgumentSet args = riaf.certain_args();
  for (const auto& a : choice.included_uncertain_args) {
    if (!riaf.is_uncertain(a)) throw RiafError(ErrorKind::UndeclaredArgument, {a});
    args.insert(a);
  }
  AttackSet attacks = restrict(riaf.certain_attacks(), args);
  for (const auto& att : choice.included_uncertain_attacks) {
    if (!riaf.uncertain_attacks().contains(att)) {
      throw RiafError(ErrorKind::UndeclaredArgument, {att.source, att.target});
    }
    attacks.insert(att);
  }
  for (const auto& [pair, orientation] : choice.conflict_orientation) {
    const auto& [lo, hi] = pair;
    if (orientation != Orientation::Backward) attacks.insert(Attack{lo, hi});
    if (orientation != Orientation::Forward) attacks.insert(Attack{hi, lo});
  }
  return ArgumentationFramework(std::move(args), std::move(attacks));
}

inline bool is_completion(const RichIAF& riaf, const ArgumentationFramework& af) {
  const auto& args = af.arguments();
  for (const auto& a : riaf.certain_args()) {
    if (!args.contains(a)) return false;
  }
  for (const auto& a : args) {
    if (!riaf.contains(a)) return false;
  }
  for (const auto& att : restrict(riaf.certain_attacks(), args)) {
    if (!af.attacks().contains(att)) return false;
  }
  for (const auto& att : af.attacks()) {
    if (!riaf.potential_attacks().contains(att)) return false;
  }
  for (const auto& att : restrict(riaf.uncertain_conflicts(), args)) {
    if (!af.attacks().contains(att) && !af.attacks().contains(att.reversed())) return false;
  }
  return true;
}

/// 2^(|A^?|+|R^?|) · 3^(conflict pairs). Throws std::overflow_error past 2^64-1.
inline std::uint64_t completion_count_bound(const RichIAF& riaf) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t bound = 1;
  auto times = [&](std::uint64_t factor) {
    if (bound > kMax / factor) throw std::overflow_error("completion bound exceeds 64 bits");
    bound *= factor;
  };
  for (std::size_t i = 0; i < riaf.uncertain_args().size() + riaf.uncertain_attacks().size(); ++i) {
    times(2);
  }
  for (std::size_t i = 0; i < riaf.uncertain_conflicts().size() / 2; ++i) times(3);
  return bound;
}

/// Streaming enumeration of completions, an odometer over the choice tuple.
class CompletionCursor {
public:
  explicit CompletionCursor(const RichIAF& riaf)
      : riaf_(&riaf),
        uncertain_args_(riaf.uncertain_args().begin(), riaf.uncertain_args().end()),
        conflicts_(riaf.conflict_pairs()) {
    arg_bits_.assign(uncertain_args_.size(), false);
    reset_inner();
  }

  /// The next completion, or nullopt once all have been produced.
  std::optional<ArgumentationFramework> next() {
    if (done_) return std::nullopt;
    auto current = build();
    advance();
    return current;
  }

private:
  void reset_inner() {
    ArgumentSet present = riaf_->certain_args();
    choice_.included_uncertain_args.clear();
    for (std::size_t i = 0; i < uncertain_args_.size(); ++i) {
      if (arg_bits_[i]) {
        present.insert(uncertain_args_[i]);
        choice_.included_uncertain_args.insert(uncertain_args_[i]);
      }
    }
    applicable_attacks_.clear();
    for (const auto& att : restrict(riaf_->uncertain_attacks(), present)) {
      applicable_attacks_.push_back(att);
    }
    attack_bits_.assign(applicable_attacks_.size(), false);
    active_conflicts_.clear();
    for (const auto& pair : conflicts_) {
      if (present.contains(pair.first) && present.contains(pair.second)) {
        active_conflicts_.push_back(pair);
      }
    }
    orientations_.assign(active_conflicts_.size(), Orientation::Forward);
  }

  ArgumentationFramework build() {
    choice_.included_uncertain_attacks.clear();
    for (std::size_t i = 0; i < applicable_attacks_.size(); ++i) {
      if (attack_bits_[i]) choice_.included_uncertain_attacks.insert(applicable_attacks_[i]);
    }
    choice_.conflict_orientation.clear();
    for (std::size_t i = 0; i < active_conflicts_.size(); ++i) {
      choice_.conflict_orientation.emplace(active_conflicts_[i], orientations_[i]);
    }
    return apply_choice(*riaf_, choice_);
  }

  // Rightmost component varies fastest: orientations, then attacks, then arguments.
  void advance() {
    for (std::size_t i = orientations_.size(); i-- > 0;) {
      if (orientations_[i] != Orientation::Both) {
        orientations_[i] = static_cast<Orientation>(static_cast<int>(orientations_[i]) + 1);
        return;
      }
      orientations_[i] = Orientation::Forward;
    }
    for (std::size_t i = attack_bits_.size(); i-- > 0;) {
      if (!attack_bits_[i]) {
        attack_bits_[i] = true;
        return;
      }
      attack_bits_[i] = false;
    }
    for (std::size_t i = arg_bits_.size(); i-- > 0;) {
      if (!arg_bits_[i]) {
        arg_bits_[i] = true;
        reset_inner();
        return;
      }
      arg_bits_[i] = false;
    }
    done_ = true;
  }

  const RichIAF* riaf_;
  std::vector<ArgumentId> uncertain_args_;
  std::vector<std::pair<ArgumentId, ArgumentId>> conflicts_;

  std::vector<bool> arg_bits_;
  std::vector<Attack> applicable_attacks_;
  std::vector<bool> attack_bits_;
  std::vector<std::pair<ArgumentId, ArgumentId>> active_conflicts_;
  std::vector<Orientation> orientations_;
  CompletionChoice choice_;
  bool done_ = false;
};

/// Visits completions in enumeration order until visit returns false.
/// Returns false iff the visitor stopped early.
template <typename Visit>
bool for_each_completion(const RichIAF& riaf, Visit&& visit) {
  CompletionCursor cursor(riaf);
  while (auto af = cursor.next()) {
    if (!visit(*af)) return false;
  }
  return true;
}

inline std::vector<ArgumentationFramework> enumerate_completions(const RichIAF& riaf) {
  std::vector<ArgumentationFramework> out;
  for_each_completion(riaf, [&](const ArgumentationFramework& af) {
    out.push_back(af);
    return true;
  });
  return out;
}

}  // namespace riaf
