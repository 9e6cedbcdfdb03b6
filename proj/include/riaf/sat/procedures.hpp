#pragma once

// SAT-based decision procedures: single calls for the first-level problems
// (PCA, NSA under stable) and counterexample-guided loops for PSA under
// stable and NCA.
//
// Every loop keeps one solver session. Semantics clauses that must be
// switchable are guarded by a fresh selector literal, so the same session
// can propose candidate completions (selector free) and check them
// (selector assumed). Refinement blocks the candidate's full y/r
// assignment.

#include <memory>
#include <vector>

#include "riaf/reasoning.hpp"
#include "riaf/sat/cnf.hpp"
#include "riaf/sat/solver.hpp"

namespace riaf::sat {

struct SatContext {
  ReasoningOptions reasoning;
  /// Backend used for every session; the embedded DPLL solver when empty.
  SolverFactory solver_factory;
};

/// Record of a counterexample-guided run: one entry per candidate completion.
struct CegarTrace {
  std::size_t iterations = 0;
  std::vector<ArgumentationFramework> candidates;
};

namespace detail {

inline std::unique_ptr<SatSolver> open_session(const SatContext& ctx) {
  return ctx.solver_factory ? ctx.solver_factory() : std::make_unique<DpllSolver>();
}

/// The semantics whose encoding decides credulous acceptance: admissible
/// sets for AD/CO/PR (every admissible set extends to a preferred one),
/// stable sets for STB.
inline Encoding credulous_encoding(Semantics sem) {
  switch (sem) {
    case Semantics::AD:
    case Semantics::CO:
    case Semantics::PR: return Encoding::AD;
    case Semantics::STB: return Encoding::STB;
    default: throw QueryError("no SAT procedure for credulous acceptance under " +
                              std::string(to_string(sem)));
  }
}

/// Structure, with the semantics formula conjoined (selector == 0) or with
/// every semantics clause extended by ¬selector.
class Session {
public:
  Session(const RichIAF& riaf, Encoding which, const SatContext& ctx, bool guarded)
      : riaf_(riaf), vars_(make_var_space(riaf, true)), solver_(open_session(ctx)) {
    solver_->add_formula(encode_structure(riaf, vars_));
    const auto semantics = which == Encoding::AD ? encode_ad(riaf, vars_) : encode_stb(riaf, vars_);
    selector_ = guarded ? vars_->size() + 1 : 0;
    solver_->reserve_vars(vars_->size() + (guarded ? 1 : 0));
    for (auto clause : semantics.clauses()) {
      if (guarded) clause.push_back(-selector_);
      solver_->add_clause(clause);
    }
  }

  SatSolver& solver() { return *solver_; }
  const VarSpace& vars() const { return *vars_; }
  Literal selector() const { return selector_; }

  bool solve(std::vector<Literal> assumptions) {
    return solver_->solve(assumptions) == SolveResult::Sat;
  }

  ArgumentationFramework completion() const {
    return decode_completion(riaf_, *vars_, solver_->model());
  }
  ArgumentSet extension() const { return decode_extension(riaf_, *vars_, solver_->model()); }
  std::vector<Literal> fix_completion() const {
    return structure_assumptions(riaf_, *vars_, solver_->model());
  }

  void block(const std::vector<Literal>& completion) {
    Clause clause;
    for (auto lit : completion) clause.push_back(-lit);
    solver_->add_clause(clause);
  }

private:
  const RichIAF& riaf_;
  std::shared_ptr<const VarSpace> vars_;
  std::unique_ptr<SatSolver> solver_;
  Literal selector_ = 0;
};

inline void record(CegarTrace* trace, const ArgumentationFramework& candidate) {
  if (!trace) return;
  ++trace->iterations;
  trace->candidates.push_back(candidate);
}

inline std::vector<Literal> with(std::vector<Literal> base, std::initializer_list<Literal> extra) {
  base.insert(base.end(), extra);
  return base;
}

}  // namespace detail

/// PCA for AD, CO, PR, STB: one call on structure ∧ σ' ∧ x(a).
inline QueryVerdict solve_pca_sat(const RichIAF& riaf, const ArgumentId& a, Semantics sem,
                                  const SatContext& ctx = {}) {
  riaf::detail::require_acceptance_semantics(sem);
  riaf::detail::require_query_argument(riaf, a, ctx.reasoning);
  detail::Session session(riaf, detail::credulous_encoding(sem), ctx, false);
  if (!session.solve({session.vars().x(a)})) return QueryVerdict{};
  return QueryVerdict{true, session.completion(), session.extension()};
}

/// NSA under stable: YES iff structure ∧ stb ∧ ¬x(a) is unsatisfiable.
inline QueryVerdict solve_nsa_stb_sat(const RichIAF& riaf, const ArgumentId& a,
                                      const SatContext& ctx = {}) {
  riaf::detail::require_query_argument(riaf, a, ctx.reasoning);
  const bool uncertain = riaf.is_uncertain(a);
  detail::Session session(riaf, Encoding::STB, ctx, uncertain);
  const auto& vars = session.vars();
  if (uncertain && session.solve({-vars.y(a)})) {
    // a missing from a completion is not accepted there
    return QueryVerdict{false, session.completion(), std::nullopt};
  }
  std::vector<Literal> assumptions{-vars.x(a)};
  if (uncertain) assumptions.push_back(session.selector());
  if (!session.solve(assumptions)) return QueryVerdict{true, std::nullopt, std::nullopt};
  return QueryVerdict{false, session.completion(), session.extension()};
}

/// PSA under stable. First searches completions with a stable extension
/// containing a and checks that none omits it; if that finds nothing, looks
/// for a completion containing a with no stable extension at all, where a
/// is skeptically accepted vacuously.
inline QueryVerdict cegar_psa_stb(const RichIAF& riaf, const ArgumentId& a,
                                  const SatContext& ctx = {}, CegarTrace* trace = nullptr) {
  riaf::detail::require_query_argument(riaf, a, ctx.reasoning);
  detail::Session session(riaf, Encoding::STB, ctx, true);
  const auto& vars = session.vars();
  const Literal stb = session.selector();

  while (session.solve({stb, vars.x(a)})) {
    const auto candidate = session.completion();
    const auto extension = session.extension();
    const auto fixed = session.fix_completion();
    detail::record(trace, candidate);
    if (!session.solve(detail::with(fixed, {stb, -vars.x(a)}))) {
      return QueryVerdict{true, candidate, extension};
    }
    session.block(fixed);
  }

  while (session.solve({vars.y(a)})) {
    const auto candidate = session.completion();
    const auto fixed = session.fix_completion();
    detail::record(trace, candidate);
    if (!session.solve(detail::with(fixed, {stb}))) {
      return QueryVerdict{true, candidate, std::nullopt};
    }
    session.block(fixed);
  }
  return QueryVerdict{};
}

/// NCA for AD, CO, PR, STB: look for a completion in which a is not
/// credulously accepted.
inline QueryVerdict cegar_nca(const RichIAF& riaf, const ArgumentId& a, Semantics sem,
                              const SatContext& ctx = {}, CegarTrace* trace = nullptr) {
  riaf::detail::require_acceptance_semantics(sem);
  riaf::detail::require_query_argument(riaf, a, ctx.reasoning);
  detail::Session session(riaf, detail::credulous_encoding(sem), ctx, true);
  const auto& vars = session.vars();
  const Literal active = session.selector();

  while (session.solve(std::vector<Literal>{})) {
    const auto candidate = session.completion();
    const auto fixed = session.fix_completion();
    detail::record(trace, candidate);
    if (!session.solve(detail::with(fixed, {active, vars.x(a)}))) {
      return QueryVerdict{false, candidate, std::nullopt};
    }
    session.block(fixed);
  }
  return QueryVerdict{true, std::nullopt, std::nullopt};
}

}  // namespace riaf::sat
