#pragma once

// Adapter for an external SAT solver process.
//
// Contract: the command is run with the path of a DIMACS file as its last
// argument and prints a status ("SAT"/"UNSAT", optionally in competition
// form "s SATISFIABLE"/"s UNSATISFIABLE") followed, when satisfiable, by the
// model as space-separated literals (optionally on "v" lines, optionally
// zero-terminated). Every solve re-runs the process from scratch with the
// assumptions written as unit clauses.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "riaf/sat/solver.hpp"

namespace riaf::sat {

class ExternalSolver final : public SatSolver {
public:
  explicit ExternalSolver(std::string command) : command_(std::move(command)) {}

  void reserve_vars(int count) override { num_vars_ = std::max(num_vars_, count); }

  void add_clause(std::span<const Literal> clause) override {
    for (auto lit : clause) reserve_vars(std::abs(lit));
    clauses_.emplace_back(clause.begin(), clause.end());
  }

  using SatSolver::solve;

  SolveResult solve(std::span<const Literal> assumptions = {}) override {
    for (auto lit : assumptions) reserve_vars(std::abs(lit));
    const auto path = temp_path();
    {
      std::ofstream out(path);
      out << "p cnf " << num_vars_ << ' ' << clauses_.size() + assumptions.size() << '\n';
      for (const auto& clause : clauses_) {
        for (auto lit : clause) out << lit << ' ';
        out << "0\n";
      }
      for (auto lit : assumptions) out << lit << " 0\n";
      if (!out) throw SolverFailure("cannot write " + path.string());
    }
    std::string output;
    try {
      output = run(command_ + " '" + path.string() + "'");
    } catch (...) {
      std::filesystem::remove(path);
      throw;
    }
    std::filesystem::remove(path);
    return interpret(output);
  }

  const Model& model() const override { return model_; }

private:
  static std::filesystem::path temp_path() {
    static std::atomic<unsigned long> counter{0};
    return std::filesystem::temp_directory_path() /
           ("riaf-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".cnf");
  }

  static std::string run(const std::string& command) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), ::pclose);
    if (!pipe) throw SolverFailure("cannot start solver: " + command);
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe.get())) > 0) output.append(buffer, n);
    return output;
  }

  SolveResult interpret(const std::string& output) {
    std::istringstream lines(output);
    std::string line;
    enum { Unknown, Sat, Unsat } status = Unknown;
    std::vector<long long> lits;
    while (std::getline(lines, line)) {
      std::istringstream tokens(line);
      std::string head;
      if (!(tokens >> head) || head == "c") continue;
      if (head == "s") tokens >> head;
      if (head == "SAT" || head == "SATISFIABLE") {
        status = Sat;
        continue;
      }
      if (head == "UNSAT" || head == "UNSATISFIABLE") {
        status = Unsat;
        continue;
      }
      std::istringstream values(line);
      if (head == "v") values >> head;
      long long lit = 0;
      while (values >> lit) lits.push_back(lit);
    }
    if (status == Unknown) throw SolverFailure("solver printed no SAT/UNSAT status");
    if (status == Unsat) return SolveResult::Unsat;
    model_.assign(static_cast<std::size_t>(num_vars_) + 1, false);
    for (auto lit : lits) {
      if (lit > 0 && lit <= num_vars_) model_[static_cast<std::size_t>(lit)] = true;
    }
    return SolveResult::Sat;
  }

  std::string command_;
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  Model model_;
};

inline SolverFactory external_factory(std::string command) {
  return [command = std::move(command)] { return std::make_unique<ExternalSolver>(command); };
}

}  // namespace riaf::sat
