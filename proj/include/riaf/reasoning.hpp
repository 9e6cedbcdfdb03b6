#pragma once

// Reference answers for the possible/necessary reasoning problems, by
// explicit quantification over the completions. Exponential by nature; this
// is the ground truth the SAT engine is checked against.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "riaf/completions.hpp"
#include "riaf/core.hpp"
#include "riaf/semantics.hpp"

namespace riaf {

enum class ProblemKind { IncPV, IncNV, IncPVStar, IncNVStar, PCA, NCA, PSA, NSA };

inline constexpr ProblemKind kAllProblems[] = {
    ProblemKind::IncPV, ProblemKind::IncNV, ProblemKind::IncPVStar, ProblemKind::IncNVStar,
    ProblemKind::PCA,   ProblemKind::NCA,   ProblemKind::PSA,       ProblemKind::NSA};

inline std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::IncPV: return "IncPV";
    case ProblemKind::IncNV: return "IncNV";
    case ProblemKind::IncPVStar: return "IncPVstar";
    case ProblemKind::IncNVStar: return "IncNVstar";
    case ProblemKind::PCA: return "PCA";
    case ProblemKind::NCA: return "NCA";
    case ProblemKind::PSA: return "PSA";
    case ProblemKind::NSA: return "NSA";
  }
  return "?";
}

inline std::optional<ProblemKind> parse_problem(std::string_view token) {
  for (auto kind : kAllProblems) {
    if (to_string(kind) == token) return kind;
  }
  return std::nullopt;
}

inline bool is_verification(ProblemKind kind) {
  return kind == ProblemKind::IncPV || kind == ProblemKind::IncNV ||
         kind == ProblemKind::IncPVStar || kind == ProblemKind::IncNVStar;
}

inline bool is_possible_variant(ProblemKind kind) {
  return kind == ProblemKind::IncPV || kind == ProblemKind::IncPVStar ||
         kind == ProblemKind::PCA || kind == ProblemKind::PSA;
}

/// Answer plus certificate. `witness` is a completion certifying a possible
/// YES or a necessary NO; `extension_witness`, when set, is the extension
/// that settles the check on that completion.
struct QueryVerdict {
  bool answer = false;
  std::optional<ArgumentationFramework> witness;
  std::optional<ArgumentSet> extension_witness;
};

/// Malformed query: wrong query kind, undeclared or non-certain argument,
/// unsupported semantics.
class QueryError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ReasoningOptions {
  /// Accept acceptance queries about uncertain arguments; an argument absent
  /// from a completion counts as not accepted there.
  bool allow_uncertain_query = false;
};

namespace detail {

inline void require_query_set(const RichIAF& riaf, const ArgumentSet& s) {
  for (const auto& a : s) {
    if (!riaf.contains(a)) throw RiafError(ErrorKind::UndeclaredArgument, {a});
  }
}

inline void require_query_argument(const RichIAF& riaf, const ArgumentId& a,
                                   const ReasoningOptions& options) {
  if (!riaf.contains(a)) throw RiafError(ErrorKind::UndeclaredArgument, {a});
  if (!riaf.is_certain(a) && !options.allow_uncertain_query) {
    throw QueryError("query argument '" + a.name() + "' is not a certain argument");
  }
}

inline void require_acceptance_semantics(Semantics sem) {
  if (sem == Semantics::CF) {
    throw QueryError("acceptance problems are not defined for conflict-freeness");
  }
}

inline ArgumentSet intersect(const ArgumentSet& lhs, const ArgumentSet& rhs) {
  ArgumentSet out;
  for (const auto& a : lhs) {
    if (rhs.contains(a)) out.insert(out.end(), a);
  }
  return out;
}

/// Per-completion check returning the extension that certifies it, if any.
template <typename Check>
QueryVerdict exists_completion(const RichIAF& riaf, Check&& check) {
  QueryVerdict verdict;
  for_each_completion(riaf, [&](const ArgumentationFramework& af) {
    std::optional<ArgumentSet> ext;
    if (!check(af, ext)) return true;
    verdict.answer = true;
    verdict.witness = af;
    verdict.extension_witness = std::move(ext);
    return false;
  });
  return verdict;
}

/// Universal counterpart: on NO, witness is the first failing completion and
/// `ext` whatever the check reported for it.
template <typename Check>
QueryVerdict all_completions(const RichIAF& riaf, Check&& check) {
  QueryVerdict verdict;
  verdict.answer = true;
  for_each_completion(riaf, [&](const ArgumentationFramework& af) {
    std::optional<ArgumentSet> ext;
    if (check(af, ext)) return true;
    verdict.answer = false;
    verdict.witness = af;
    verdict.extension_witness = std::move(ext);
    return false;
  });
  return verdict;
}

}  // namespace detail

/// ∃ completion ⟨A′,R′⟩ where S ∩ A′ is a σ-extension.
inline QueryVerdict inc_pv(const RichIAF& riaf, const ArgumentSet& s, Semantics sem) {
  detail::require_query_set(riaf, s);
  return detail::exists_completion(riaf, [&](const ArgumentationFramework& af, auto& ext) {
    auto present = detail::intersect(s, af.arguments());
    if (!is_extension(af, present, sem)) return false;
    ext = std::move(present);
    return true;
  });
}

/// ∀ completions ⟨A′,R′⟩, S ∩ A′ is a σ-extension.
inline QueryVerdict inc_nv(const RichIAF& riaf, const ArgumentSet& s, Semantics sem) {
  detail::require_query_set(riaf, s);
  return detail::all_completions(riaf, [&](const ArgumentationFramework& af, auto&) {
    return is_extension(af, detail::intersect(s, af.arguments()), sem);
  });
}

namespace detail {

inline bool star_check(const ArgumentationFramework& af, const ArgumentSet& s, Semantics sem) {
  for (const auto& a : s) {
    if (!af.contains(a)) return false;
  }
  return is_extension(af, s, sem);
}

}  // namespace detail

inline QueryVerdict inc_pv_star(const RichIAF& riaf, const ArgumentSet& s, Semantics sem) {
  detail::require_query_set(riaf, s);
  return detail::exists_completion(riaf, [&](const ArgumentationFramework& af, auto& ext) {
    if (!detail::star_check(af, s, sem)) return false;
    ext = s;
    return true;
  });
}

inline QueryVerdict inc_nv_star(const RichIAF& riaf, const ArgumentSet& s, Semantics sem) {
  detail::require_query_set(riaf, s);
  return detail::all_completions(riaf, [&](const ArgumentationFramework& af, auto&) {
    return detail::star_check(af, s, sem);
  });
}

inline QueryVerdict pca(const RichIAF& riaf, const ArgumentId& a, Semantics sem,
                        const ReasoningOptions& options = {}) {
  detail::require_acceptance_semantics(sem);
  detail::require_query_argument(riaf, a, options);
  return detail::exists_completion(riaf, [&](const ArgumentationFramework& af, auto& ext) {
    if (!af.contains(a)) return false;
    ext = credulous_witness(af, sem, a);
    return ext.has_value();
  });
}

inline QueryVerdict nca(const RichIAF& riaf, const ArgumentId& a, Semantics sem,
                        const ReasoningOptions& options = {}) {
  detail::require_acceptance_semantics(sem);
  detail::require_query_argument(riaf, a, options);
  return detail::all_completions(riaf, [&](const ArgumentationFramework& af, auto&) {
    return af.contains(a) && credulous_witness(af, sem, a).has_value();
  });
}

/// ∃ completion where a is in every σ-extension (vacuously so when there
/// are none). Always NO under AD for a declared argument.
inline QueryVerdict psa(const RichIAF& riaf, const ArgumentId& a, Semantics sem,
                        const ReasoningOptions& options = {}) {
  detail::require_acceptance_semantics(sem);
  detail::require_query_argument(riaf, a, options);
  if (sem == Semantics::AD) return QueryVerdict{};
  return detail::exists_completion(riaf, [&](const ArgumentationFramework& af, auto&) {
    return af.contains(a) && !skeptical_counterexample(af, sem, a).has_value();
  });
}

inline QueryVerdict nsa(const RichIAF& riaf, const ArgumentId& a, Semantics sem,
                        const ReasoningOptions& options = {}) {
  detail::require_acceptance_semantics(sem);
  detail::require_query_argument(riaf, a, options);
  if (sem == Semantics::AD) {
    // ∅ is admissible everywhere; the first completion is a counterexample.
    CompletionCursor cursor(riaf);
    return QueryVerdict{false, cursor.next(), ArgumentSet{}};
  }
  return detail::all_completions(riaf, [&](const ArgumentationFramework& af, auto& ext) {
    if (!af.contains(a)) return false;
    ext = skeptical_counterexample(af, sem, a);
    return !ext.has_value();
  });
}

/// Query target: an argument for acceptance problems, a set for verification.
using QueryTarget = std::variant<ArgumentId, ArgumentSet>;

struct Query {
  ProblemKind problem;
  Semantics semantics;
  QueryTarget target;
};

/// Dispatches a query to the matching oracle procedure.
inline QueryVerdict solve_by_enumeration(const RichIAF& riaf, const Query& query,
                                         const ReasoningOptions& options = {}) {
  if (is_verification(query.problem)) {
    const auto* s = std::get_if<ArgumentSet>(&query.target);
    if (!s) throw QueryError("verification problems take an argument set");
    switch (query.problem) {
      case ProblemKind::IncPV: return inc_pv(riaf, *s, query.semantics);
      case ProblemKind::IncNV: return inc_nv(riaf, *s, query.semantics);
      case ProblemKind::IncPVStar: return inc_pv_star(riaf, *s, query.semantics);
      default: return inc_nv_star(riaf, *s, query.semantics);
    }
  }
  const auto* a = std::get_if<ArgumentId>(&query.target);
  if (!a) throw QueryError("acceptance problems take a single argument");
  switch (query.problem) {
    case ProblemKind::PCA: return pca(riaf, *a, query.semantics, options);
    case ProblemKind::NCA: return nca(riaf, *a, query.semantics, options);
    case ProblemKind::PSA: return psa(riaf, *a, query.semantics, options);
    default: return nsa(riaf, *a, query.semantics, options);
  }
}

}  // namespace riaf
