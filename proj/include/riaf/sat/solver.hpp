#pragma once

// Incremental SAT interface and the embedded DPLL solver.

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "riaf/sat/cnf.hpp"

namespace riaf::sat {

enum class SolveResult { Sat, Unsat };

/// Session interface. Clauses accumulate across calls; assumptions apply to
/// a single solve. After Sat, model() holds a total assignment.
class SatSolver {
public:
  virtual ~SatSolver() = default;

  virtual void add_clause(std::span<const Literal> clause) = 0;
  virtual SolveResult solve(std::span<const Literal> assumptions = {}) = 0;
  virtual const Model& model() const = 0;

  void add_formula(const CnfFormula& cnf) {
    reserve_vars(cnf.num_vars());
    for (const auto& clause : cnf.clauses()) add_clause(clause);
  }
  SolveResult solve(std::initializer_list<Literal> assumptions) {
    return solve(std::span<const Literal>(assumptions.begin(), assumptions.size()));
  }

  virtual void reserve_vars(int count) = 0;
};

using SolverFactory = std::function<std::unique_ptr<SatSolver>()>;

/// Thrown when a backend cannot produce an answer.
class SolverFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// DPLL with two watched literals per clause and chronological backtracking.
/// Decisions pick the lowest unassigned variable, false first.
class DpllSolver final : public SatSolver {
public:
  void reserve_vars(int count) override {
    if (count <= num_vars_) return;
    num_vars_ = count;
    assign_.resize(static_cast<std::size_t>(num_vars_) + 1, 0);
    watches_.resize(2 * (static_cast<std::size_t>(num_vars_) + 1));
  }

  void add_clause(std::span<const Literal> clause) override {
    std::vector<int> lits;
    for (auto lit : clause) {
      if (lit == 0) throw std::invalid_argument("zero literal in clause");
      reserve_vars(std::abs(lit));
      const int code = encode(lit);
      bool duplicate = false;
      for (int existing : lits) {
        if (existing == code) duplicate = true;
        if (existing == (code ^ 1)) return;  // tautology
      }
      if (!duplicate) lits.push_back(code);
    }
    if (lits.empty()) {
      has_empty_clause_ = true;
    } else if (lits.size() == 1) {
      units_.push_back(lits[0]);
    } else {
      const auto index = clauses_.size();
      watches_[static_cast<std::size_t>(lits[0])].push_back(index);
      watches_[static_cast<std::size_t>(lits[1])].push_back(index);
      clauses_.push_back(std::move(lits));
    }
  }

  using SatSolver::solve;

  SolveResult solve(std::span<const Literal> assumptions = {}) override {
    for (auto lit : assumptions) reserve_vars(std::abs(lit));
    reset();
    if (has_empty_clause_) return SolveResult::Unsat;
    for (int unit : units_) {
      if (value(unit) < 0) return SolveResult::Unsat;
      if (value(unit) == 0) enqueue(unit);
    }
    if (!propagate()) return SolveResult::Unsat;

    for (auto lit : assumptions) {
      const int code = encode(lit);
      if (value(code) < 0) return SolveResult::Unsat;
      if (value(code) > 0) continue;
      levels_.push_back({code, trail_.size(), false, true});
      enqueue(code);
      if (!propagate()) return SolveResult::Unsat;
    }

    int next_var = 1;
    for (;;) {
      while (next_var <= num_vars_ && assign_[static_cast<std::size_t>(next_var)] != 0) ++next_var;
      if (next_var > num_vars_) {
        model_.assign(static_cast<std::size_t>(num_vars_) + 1, false);
        for (int v = 1; v <= num_vars_; ++v) model_[static_cast<std::size_t>(v)] = assign_[static_cast<std::size_t>(v)] > 0;
        return SolveResult::Sat;
      }
      const int decision = 2 * next_var + 1;  // negative literal first
      levels_.push_back({decision, trail_.size(), false, false});
      enqueue(decision);
      while (!propagate()) {
        if (!backtrack()) return SolveResult::Unsat;
      }
      next_var = 1;
    }
  }

  const Model& model() const override { return model_; }

private:
  struct Level {
    int decision;
    std::size_t trail_start;
    bool flipped;
    bool assumption;
  };

  static int encode(Literal lit) { return lit > 0 ? 2 * lit : 2 * -lit + 1; }

  /// +1 true, -1 false, 0 unassigned.
  int value(int code) const {
    const int v = assign_[static_cast<std::size_t>(code >> 1)];
    return (code & 1) ? -v : v;
  }

  void enqueue(int code) {
    assign_[static_cast<std::size_t>(code >> 1)] = (code & 1) ? -1 : 1;
    trail_.push_back(code);
  }

  void reset() {
    for (int code : trail_) assign_[static_cast<std::size_t>(code >> 1)] = 0;
    trail_.clear();
    levels_.clear();
    queue_head_ = 0;
  }

  void undo_to(std::size_t trail_size) {
    while (trail_.size() > trail_size) {
      assign_[static_cast<std::size_t>(trail_.back() >> 1)] = 0;
      trail_.pop_back();
    }
    queue_head_ = trail_size;
  }

  /// Flips the deepest unflipped decision. False if only assumptions remain.
  bool backtrack() {
    while (!levels_.empty()) {
      Level level = levels_.back();
      levels_.pop_back();
      undo_to(level.trail_start);
      if (level.assumption) return false;
      if (!level.flipped) {
        const int flipped = level.decision ^ 1;
        levels_.push_back({flipped, trail_.size(), true, false});
        enqueue(flipped);
        return true;
      }
    }
    return false;
  }

  bool propagate() {
    while (queue_head_ < trail_.size()) {
      const int falsified = trail_[queue_head_++] ^ 1;
      auto& watchers = watches_[static_cast<std::size_t>(falsified)];
      std::size_t keep = 0;
      bool conflict = false;
      for (std::size_t i = 0; i < watchers.size(); ++i) {
        const auto ci = watchers[i];
        if (conflict) {
          watchers[keep++] = ci;
          continue;
        }
        auto& lits = clauses_[ci];
        if (lits[0] == falsified) std::swap(lits[0], lits[1]);
        if (value(lits[0]) > 0) {
          watchers[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches_[static_cast<std::size_t>(lits[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watchers[keep++] = ci;
        if (value(lits[0]) < 0) {
          conflict = true;
        } else if (value(lits[0]) == 0) {
          enqueue(lits[0]);
        }
      }
      watchers.resize(keep);
      if (conflict) return false;
    }
    return true;
  }

  int num_vars_ = 0;
  bool has_empty_clause_ = false;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<int> units_;
  std::vector<signed char> assign_{0};
  std::vector<int> trail_;
  std::vector<Level> levels_;
  std::size_t queue_head_ = 0;
  Model model_;
};

inline SolverFactory dpll_factory() {
  return [] { return std::make_unique<DpllSolver>(); };
}

}  // namespace riaf::sat
