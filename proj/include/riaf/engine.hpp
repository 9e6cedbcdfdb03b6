#pragma once

// Routes a query to the SAT procedures or to the enumeration oracle.
//
//   PCA, NCA    ad co pr stb -> SAT, gr -> enumeration
//   PSA, NSA    stb -> SAT, ad co gr pr -> enumeration (ad is trivially NO)
//   IncPV, IncNV, IncPVstar, IncNVstar -> enumeration
//
// cf is rejected for the acceptance problems.

#include <optional>
#include <string_view>

#include "riaf/reasoning.hpp"
#include "riaf/sat/procedures.hpp"

namespace riaf {

enum class Engine { Enum, Sat, Auto };

inline std::optional<Engine> parse_engine(std::string_view token) {
  if (token == "enum") return Engine::Enum;
  if (token == "sat") return Engine::Sat;
  if (token == "auto") return Engine::Auto;
  return std::nullopt;
}

inline bool has_sat_path(ProblemKind problem, Semantics sem) {
  switch (problem) {
    case ProblemKind::PCA:
    case ProblemKind::NCA:
      return sem == Semantics::AD || sem == Semantics::CO || sem == Semantics::PR ||
             sem == Semantics::STB;
    case ProblemKind::PSA:
    case ProblemKind::NSA: return sem == Semantics::STB;
    default: return false;
  }
}

inline QueryVerdict solve_by_sat(const RichIAF& riaf, const Query& query,
                                 const sat::SatContext& ctx = {}) {
  if (!has_sat_path(query.problem, query.semantics)) {
    throw QueryError("no SAT procedure for " + std::string(to_string(query.problem)) + "-" +
                     std::string(to_string(query.semantics)));
  }
  const auto* a = std::get_if<ArgumentId>(&query.target);
  if (!a) throw QueryError("acceptance problems take a single argument");
  switch (query.problem) {
    case ProblemKind::PCA: return sat::solve_pca_sat(riaf, *a, query.semantics, ctx);
    case ProblemKind::NCA: return sat::cegar_nca(riaf, *a, query.semantics, ctx);
    case ProblemKind::PSA: return sat::cegar_psa_stb(riaf, *a, ctx);
    default: return sat::solve_nsa_stb_sat(riaf, *a, ctx);
  }
}

inline QueryVerdict solve_query(const RichIAF& riaf, const Query& query, Engine engine,
                                const sat::SatContext& ctx = {}) {
  const bool use_sat =
      engine == Engine::Sat || (engine == Engine::Auto && has_sat_path(query.problem, query.semantics));
  return use_sat ? solve_by_sat(riaf, query, ctx) : solve_by_enumeration(riaf, query, ctx.reasoning);
}

}  // namespace riaf
