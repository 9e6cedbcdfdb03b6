#pragma once

// Shared test fixtures and brute-force oracles. The oracles here follow the
// definitions literally over std::set and never call into the library's
// enumeration code paths, so they can serve as independent ground truth.

#include <algorithm>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>
#include <variant>

#include "riaf/riaf.hpp"

namespace riaf::testing {

inline ArgumentSet set_of(std::initializer_list<const char*> names) {
  ArgumentSet out;
  for (auto n : names) out.emplace(n);
  return out;
}

inline AttackSet attacks_of(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  AttackSet out;
  for (auto [s, t] : pairs) out.insert(Attack{ArgumentId(s), ArgumentId(t)});
  return out;
}

inline ArgumentId id(const char* name) { return ArgumentId(name); }

/// The five-argument AF: R = {(b,a),(c,a),(c,d),(d,b),(d,c),(e,a)}.
inline ArgumentationFramework reference_af() {
  return ArgumentationFramework(set_of({"a", "b", "c", "d", "e"}),
                                attacks_of({{"b", "a"}, {"c", "a"}, {"c", "d"}, {"d", "b"},
                                            {"d", "c"}, {"e", "a"}}));
}

/// Uncertain argument f, uncertain attacks (e,a),(f,d).
inline IncompleteAF reference_iaf() {
  return IncompleteAF{set_of({"a", "b", "c", "d", "e"}), set_of({"f"}),
                      attacks_of({{"b", "a"}, {"c", "a"}, {"d", "b"}, {"d", "c"}}),
                      attacks_of({{"e", "a"}, {"f", "d"}})};
}

/// reference_iaf with (b,a) replaced by a conflict of unknown direction.
inline RichIAF reference_riaf() {
  return validate_riaf(RiafCandidate{set_of({"a", "b", "c", "d", "e"}), set_of({"f"}),
                                     attacks_of({{"c", "a"}, {"d", "b"}, {"d", "c"}}),
                                     attacks_of({{"e", "a"}, {"f", "d"}}),
                                     attacks_of({{"a", "b"}})});
}

/// ⟨{a,b}, ∅, ∅, ∅, {(a,b),(b,a)}⟩.
inline RichIAF two_way_conflict() {
  return validate_riaf(RiafCandidate{set_of({"a", "b"}), {}, {}, {}, attacks_of({{"a", "b"}})});
}

// ---------------------------------------------------------------------------
// Oracles

template <typename T>
std::vector<std::vector<T>> all_subsets(const std::vector<T>& items) {
  std::vector<std::vector<T>> out;
  const std::size_t n = items.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<T> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(items[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

/// Every AF ⟨A′,R′⟩ meeting the three conditions of a RIAF completion: every
/// A′, the certain attacks on A′, plus any subset of the uncertain attacks and
/// conflict directions on A′, kept when each conflict pair is oriented.
inline std::vector<ArgumentationFramework> brute_force_completions(const RichIAF& riaf) {
  std::vector<ArgumentationFramework> out;
  std::vector<ArgumentId> optional_args(riaf.uncertain_args().begin(), riaf.uncertain_args().end());
  for (const auto& extra : all_subsets(optional_args)) {
    ArgumentSet args = riaf.certain_args();
    args.insert(extra.begin(), extra.end());
    auto inside = [&](const Attack& att) { return args.contains(att.source) && args.contains(att.target); };
    AttackSet fixed;
    std::vector<Attack> candidates;
    for (const auto& att : riaf.certain_attacks()) {
      if (inside(att)) fixed.insert(att);
    }
    for (const auto& att : riaf.potential_attacks()) {
      if (inside(att) && !fixed.contains(att)) candidates.push_back(att);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << candidates.size()); ++mask) {
      AttackSet attacks = fixed;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (mask & (std::size_t{1} << i)) attacks.insert(candidates[i]);
      }
      bool ok = true;
      for (const auto& att : riaf.uncertain_conflicts()) {
        if (inside(att) && !attacks.contains(att) && !attacks.contains(att.reversed())) ok = false;
      }
      if (ok) out.emplace_back(args, attacks);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Completions of an IAF straight from the IAF definition.
inline std::vector<ArgumentationFramework> brute_force_iaf_completions(const IncompleteAF& iaf) {
  std::vector<ArgumentationFramework> out;
  std::vector<ArgumentId> optional_args(iaf.uncertain_args.begin(), iaf.uncertain_args.end());
  for (const auto& extra : all_subsets(optional_args)) {
    ArgumentSet args = iaf.certain_args;
    args.insert(extra.begin(), extra.end());
    AttackSet fixed;
    std::vector<Attack> optional;
    for (const auto& att : iaf.certain_attacks) {
      if (args.contains(att.source) && args.contains(att.target)) fixed.insert(att);
    }
    for (const auto& att : iaf.uncertain_attacks) {
      if (args.contains(att.source) && args.contains(att.target)) optional.push_back(att);
    }
    for (const auto& chosen : all_subsets(optional)) {
      AttackSet attacks = fixed;
      attacks.insert(chosen.begin(), chosen.end());
      out.emplace_back(args, attacks);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Naive semantics straight from the definitions, over all subsets.
struct NaiveSemantics {
  const ArgumentationFramework& af;

  bool attacks(const ArgumentSet& s, const ArgumentId& b) const {
    for (const auto& a : s) {
      if (af.attacks().contains(Attack{a, b})) return true;
    }
    return false;
  }
  bool defends(const ArgumentSet& s, const ArgumentId& c) const {
    for (const auto& att : af.attacks()) {
      if (att.target == c && !attacks(s, att.source)) return false;
    }
    return true;
  }
  bool cf(const ArgumentSet& s) const {
    for (const auto& a : s) {
      for (const auto& b : s) {
        if (af.attacks().contains(Attack{a, b})) return false;
      }
    }
    return true;
  }
  bool ad(const ArgumentSet& s) const {
    if (!cf(s)) return false;
    for (const auto& a : s) {
      if (!defends(s, a)) return false;
    }
    return true;
  }
  bool co(const ArgumentSet& s) const {
    if (!ad(s)) return false;
    for (const auto& a : af.arguments()) {
      if (defends(s, a) && !s.contains(a)) return false;
    }
    return true;
  }
  bool stb(const ArgumentSet& s) const {
    if (!cf(s)) return false;
    for (const auto& a : af.arguments()) {
      if (!s.contains(a) && !attacks(s, a)) return false;
    }
    return true;
  }

  std::vector<ArgumentSet> subsets() const {
    std::vector<ArgumentId> args(af.arguments().begin(), af.arguments().end());
    std::vector<ArgumentSet> out;
    for (const auto& sub : all_subsets(args)) out.emplace_back(sub.begin(), sub.end());
    return out;
  }

  std::vector<ArgumentSet> extensions(Semantics sem) const {
    std::vector<ArgumentSet> out;
    const auto all = subsets();
    std::vector<ArgumentSet> complete;
    for (const auto& s : all) {
      if (co(s)) complete.push_back(s);
    }
    auto subset_of = [](const ArgumentSet& lhs, const ArgumentSet& rhs) {
      return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
    };
    for (const auto& s : all) {
      bool keep = false;
      switch (sem) {
        case Semantics::CF: keep = cf(s); break;
        case Semantics::AD: keep = ad(s); break;
        case Semantics::CO: keep = co(s); break;
        case Semantics::STB: keep = stb(s); break;
        case Semantics::GR:
          keep = co(s) && std::all_of(complete.begin(), complete.end(),
                                      [&](const ArgumentSet& c) { return subset_of(s, c); });
          break;
        case Semantics::PR:
          keep = co(s) && std::none_of(complete.begin(), complete.end(), [&](const ArgumentSet& c) {
                   return c != s && subset_of(s, c);
                 });
          break;
      }
      if (keep) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Answers any of the eight problems from brute_force_completions and
/// NaiveSemantics only, caching extension families per semantics. An
/// argument missing from a completion is not accepted there.
class NaiveOracle {
public:
  explicit NaiveOracle(const RichIAF& riaf) : completions_(brute_force_completions(riaf)) {}

  const std::vector<ArgumentationFramework>& completions() const { return completions_; }

  bool answer(ProblemKind problem, Semantics sem, const QueryTarget& target) {
    const auto& families = families_for(sem);
    auto holds = [&](std::size_t i) {
      const auto& af = completions_[i];
      const auto& exts = families[i];
      auto member = [&](const ArgumentSet& s) { return std::binary_search(exts.begin(), exts.end(), s); };
      if (is_verification(problem)) {
        const auto& s = std::get<ArgumentSet>(target);
        if (problem == ProblemKind::IncPV || problem == ProblemKind::IncNV) {
          ArgumentSet present;
          for (const auto& a : s) {
            if (af.contains(a)) present.insert(a);
          }
          return member(present);
        }
        return std::all_of(s.begin(), s.end(), [&](const ArgumentId& a) { return af.contains(a); }) &&
               member(s);
      }
      const auto& a = std::get<ArgumentId>(target);
      if (!af.contains(a)) return false;
      auto in = [&](const ArgumentSet& e) { return e.contains(a); };
      if (problem == ProblemKind::PCA || problem == ProblemKind::NCA) {
        return std::any_of(exts.begin(), exts.end(), in);
      }
      return std::all_of(exts.begin(), exts.end(), in);
    };
    bool any = false;
    bool all = true;
    for (std::size_t i = 0; i < completions_.size(); ++i) {
      const bool h = holds(i);
      any = any || h;
      all = all && h;
    }
    return is_possible_variant(problem) ? any : all;
  }

private:
  const std::vector<std::vector<ArgumentSet>>& families_for(Semantics sem) {
    auto it = families_.find(sem);
    if (it != families_.end()) return it->second;
    std::vector<std::vector<ArgumentSet>> out;
    for (const auto& af : completions_) out.push_back(NaiveSemantics{af}.extensions(sem));
    return families_.emplace(sem, std::move(out)).first->second;
  }

  std::vector<ArgumentationFramework> completions_;
  std::map<Semantics, std::vector<std::vector<ArgumentSet>>> families_;
};

inline bool naive_answer(const RichIAF& riaf, ProblemKind problem, Semantics sem,
                         const QueryTarget& target) {
  return NaiveOracle(riaf).answer(problem, sem, target);
}

/// Distinct restrictions to `project` of the models of `cnf` under
/// `assumptions`, found by repeatedly blocking the last projection.
inline std::vector<std::vector<sat::Literal>> projected_models(const sat::CnfFormula& cnf,
                                                               const std::vector<int>& project,
                                                               const std::vector<sat::Literal>& assumptions) {
  sat::DpllSolver solver;
  solver.add_formula(cnf);
  std::vector<std::vector<sat::Literal>> out;
  while (solver.solve(assumptions) == sat::SolveResult::Sat) {
    std::vector<sat::Literal> proj;
    sat::Clause block;
    for (int var : project) {
      const sat::Literal lit = solver.model()[static_cast<std::size_t>(var)] ? var : -var;
      proj.push_back(lit);
      block.push_back(-lit);
    }
    out.push_back(proj);
    if (block.empty()) break;
    solver.add_clause(block);
  }
  return out;
}

/// Every x-assignment over `riaf`'s arguments that extends to a model of
/// `cnf` with the completion's y/r values fixed, as the set of true x's.
inline std::vector<ArgumentSet> x_projections(const RichIAF& riaf, const sat::CnfFormula& cnf,
                                              const ArgumentationFramework& completion) {
  const auto& vars = cnf.vars();
  std::vector<sat::Literal> fixed;
  for (const auto& a : riaf.all_arguments()) {
    fixed.push_back(completion.contains(a) ? vars.y(a) : -vars.y(a));
  }
  for (const auto& att : riaf.potential_attacks()) {
    const int v = vars.r(att.source, att.target);
    fixed.push_back(completion.attacks().contains(att) ? v : -v);
  }
  std::vector<int> xs;
  for (const auto& a : riaf.all_arguments()) xs.push_back(vars.x(a));
  std::vector<ArgumentSet> out;
  for (const auto& proj : projected_models(cnf, xs, fixed)) {
    ArgumentSet ext;
    for (auto lit : proj) {
      if (lit > 0) ext.insert(vars.key(lit).first);
    }
    out.push_back(ext);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Bounds for random instances; the cap on uncertain elements counts
/// uncertain arguments, uncertain attacks and conflict pairs together.
struct RandomBounds {
  std::size_t max_args = 6;
  std::size_t max_uncertain_args = 2;
  std::size_t max_uncertain_attacks = 3;
  std::size_t max_sym_pairs = 1;
  std::size_t max_uncertain_elements = 100;
  double attack_density = 0.25;
};

inline RichIAF random_riaf(std::mt19937& rng, const RandomBounds& bounds) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(1, bounds.max_args);
  std::vector<ArgumentId> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(std::string(1, static_cast<char>('a' + i)));

  std::size_t budget = bounds.max_uncertain_elements;
  const std::size_t n_uarg = std::min({pick(0, bounds.max_uncertain_args), n, budget});
  budget -= n_uarg;
  std::shuffle(names.begin(), names.end(), rng);
  RiafCandidate raw;
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_uarg ? raw.uncertain_args : raw.certain_args).insert(names[i]);
  }
  std::sort(names.begin(), names.end());

  std::vector<Attack> pairs;
  for (const auto& a : names) {
    for (const auto& b : names) pairs.push_back(Attack{a, b});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);

  const std::size_t n_uatt = std::min({pick(0, bounds.max_uncertain_attacks), budget, pairs.size()});
  budget -= n_uatt;
  std::size_t next = 0;
  for (; next < n_uatt; ++next) raw.uncertain_attacks.insert(pairs[next]);

  std::size_t n_sym = std::min(pick(0, bounds.max_sym_pairs), budget);
  for (; next < pairs.size(); ++next) {
    const auto& p = pairs[next];
    const bool used = raw.uncertain_attacks.contains(p) || raw.uncertain_attacks.contains(p.reversed()) ||
                      raw.uncertain_conflicts.contains(p) || raw.uncertain_conflicts.contains(p.reversed());
    if (n_sym > 0 && !p.is_self() && !used) {
      raw.uncertain_conflicts.insert(p);
      --n_sym;
      continue;
    }
    if (!raw.uncertain_attacks.contains(p) && !raw.uncertain_conflicts.contains(p) &&
        !raw.uncertain_conflicts.contains(p.reversed()) &&
        std::uniform_real_distribution<double>(0.0, 1.0)(rng) < bounds.attack_density) {
      raw.certain_attacks.insert(p);
    }
  }
  return validate_riaf(std::move(raw));
}

/// Random renaming of every argument through a bijection onto fresh names.
inline RichIAF rename(const RichIAF& riaf, std::mt19937& rng) {
  std::vector<ArgumentId> from(riaf.all_arguments().begin(), riaf.all_arguments().end());
  std::vector<ArgumentId> to;
  for (std::size_t i = 0; i < from.size(); ++i) to.emplace_back("n" + std::to_string(i) + "_x");
  std::shuffle(to.begin(), to.end(), rng);
  std::map<ArgumentId, ArgumentId> map;
  for (std::size_t i = 0; i < from.size(); ++i) map.emplace(from[i], to[i]);
  auto args = [&](const ArgumentSet& s) {
    ArgumentSet out;
    for (const auto& a : s) out.insert(map.at(a));
    return out;
  };
  auto atts = [&](const AttackSet& s) {
    AttackSet out;
    for (const auto& att : s) out.insert(Attack{map.at(att.source), map.at(att.target)});
    return out;
  };
  return validate_riaf(RiafCandidate{args(riaf.certain_args()), args(riaf.uncertain_args()),
                                     atts(riaf.certain_attacks()), atts(riaf.uncertain_attacks()),
                                     atts(riaf.uncertain_conflicts())});
}

}  // namespace riaf::testing
