#pragma once

// Seeded random RichIAF instances for differential testing.
//
// The standard distributions are implementation-defined, so sampling is done
// directly on std::mt19937_64 output (whose sequence the standard fixes) to
// keep files identical across platforms.

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "riaf/core.hpp"

namespace riaf {

struct GeneratorParams {
  std::size_t args = 5;
  std::size_t uncertain_args = 0;
  double attack_prob = 0.2;
  double uncertain_attack_prob = 0.1;
  double sym_prob = 0.05;
  std::uint64_t seed = 0;
};

namespace detail {

/// Uniform double in [0,1) from the top 53 bits.
inline double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const auto v = rng();
    if (v < limit) return v % bound;
  }
}

inline void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must be in [0,1]");
}

}  // namespace detail

/// Arguments a0..a(N-1); K of them, chosen uniformly, are uncertain. Each
/// ordered pair (self-pairs included) goes to R with probability p, else to
/// R^? with probability q. Each unordered pair of distinct arguments unused
/// in both directions then becomes a conflict with probability s.
inline RichIAF generate_riaf(const GeneratorParams& params) {
  if (params.uncertain_args > params.args) {
    throw std::invalid_argument("uncertain argument count exceeds argument count");
  }
  detail::check_probability(params.attack_prob, "attack probability");
  detail::check_probability(params.uncertain_attack_prob, "uncertain attack probability");
  detail::check_probability(params.sym_prob, "sym probability");

  std::mt19937_64 rng(params.seed);
  const auto n = params.args;
  std::vector<ArgumentId> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back("a" + std::to_string(i));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < params.uncertain_args; ++i) {
    const auto j = i + detail::below(rng, n - i);
    std::swap(order[i], order[j]);
  }
  std::vector<bool> uncertain(n, false);
  for (std::size_t i = 0; i < params.uncertain_args; ++i) uncertain[order[i]] = true;

  RiafCandidate raw;
  for (std::size_t i = 0; i < n; ++i) {
    (uncertain[i] ? raw.uncertain_args : raw.certain_args).insert(names[i]);
  }

  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (detail::unit_interval(rng) < params.attack_prob) {
        raw.certain_attacks.insert(Attack{names[i], names[j]});
        used[i][j] = true;
      } else if (detail::unit_interval(rng) < params.uncertain_attack_prob) {
        raw.uncertain_attacks.insert(Attack{names[i], names[j]});
        used[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[i][j] || used[j][i]) continue;
      if (detail::unit_interval(rng) < params.sym_prob) {
        raw.uncertain_conflicts.insert(Attack{names[i], names[j]});
      }
    }
  }
  return validate_riaf(std::move(raw));
}

}  // namespace riaf
