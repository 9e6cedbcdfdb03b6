#pragma once

// DIMACS CNF writer (with a variable-name comment block) and reader.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "riaf/sat/cnf.hpp"

namespace riaf::sat {

/// Writes "c <kind> <names...> <var>" for every allocated variable, then the
/// problem line and one zero-terminated clause per line.
inline void emit_dimacs(const CnfFormula& cnf, std::ostream& out) {
  const auto& vars = cnf.vars();
  for (int var = 1; var <= vars.size(); ++var) {
    const auto& key = vars.key(var);
    out << "c " << to_char(key.kind) << ' ' << key.first;
    if (key.second) out << ' ' << *key.second;
    out << ' ' << var << '\n';
  }
  out << "p cnf " << cnf.num_vars() << ' ' << cnf.clauses().size() << '\n';
  for (const auto& clause : cnf.clauses()) {
    for (auto lit : clause) out << lit << ' ';
    out << "0\n";
  }
  if (!out) throw std::runtime_error("failed to write DIMACS output");
}

inline std::string to_dimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  emit_dimacs(cnf, out);
  return out.str();
}

struct DimacsProblem {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

class DimacsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reads plain DIMACS CNF. Comment lines are skipped; clauses may span lines.
inline DimacsProblem parse_dimacs(std::istream& in) {
  DimacsProblem problem;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c" || first[0] == 'c' || first == "%") continue;
    if (first == "p") {
      std::string format;
      long long vars = 0;
      long long count = 0;
      if (have_header || !(tokens >> format >> vars >> count) || format != "cnf" || vars < 0 ||
          count < 0) {
        throw DimacsError("malformed problem line: " + line);
      }
      problem.num_vars = static_cast<int>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    if (!have_header) throw DimacsError("clause before problem line");
    std::istringstream all(line);
    long long lit = 0;
    while (all >> lit) {
      if (lit == 0) {
        problem.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > problem.num_vars || -lit > problem.num_vars) {
        throw DimacsError("literal " + std::to_string(lit) + " exceeds declared variables");
      }
      current.push_back(static_cast<Literal>(lit));
    }
    if (!all.eof()) throw DimacsError("unexpected token in clause line: " + line);
  }
  if (!have_header) throw DimacsError("missing problem line");
  if (!current.empty()) throw DimacsError("unterminated final clause");
  if (problem.clauses.size() != declared_clauses) {
    throw DimacsError("clause count does not match problem line");
  }
  return problem;
}

inline DimacsProblem parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

}  // namespace riaf::sat
