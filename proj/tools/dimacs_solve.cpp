// Standalone DIMACS solver on top of the embedded DPLL engine. Implements the
// external-solver contract: prints "SAT" and a model line, or "UNSAT".

#include <fstream>
#include <iostream>

#include "riaf/sat/dimacs.hpp"
#include "riaf/sat/solver.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: dimacs_solve <file.cnf>\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot read " << argv[1] << '\n';
    return 1;
  }
  try {
    const auto problem = riaf::sat::parse_dimacs(in);
    riaf::sat::DpllSolver solver;
    solver.reserve_vars(problem.num_vars);
    for (const auto& clause : problem.clauses) solver.add_clause(clause);
    if (solver.solve() == riaf::sat::SolveResult::Unsat) {
      std::cout << "UNSAT\n";
      return 20;
    }
    std::cout << "SAT\n";
    const auto& model = solver.model();
    for (int v = 1; v <= problem.num_vars; ++v) std::cout << (model[v] ? v : -v) << ' ';
    std::cout << "0\n";
    return 10;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
