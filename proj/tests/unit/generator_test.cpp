#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace riaf;
using namespace riaf::testing;

TEST(Generator, ForcedTwoWayConflict) {
  GeneratorParams p;
  p.args = 2;
  p.attack_prob = 0;
  p.uncertain_attack_prob = 0;
  p.sym_prob = 1;
  const auto r = generate_riaf(p);
  EXPECT_EQ(r.certain_args(), set_of({"a0", "a1"}));
  EXPECT_EQ(r.uncertain_conflicts(), attacks_of({{"a0", "a1"}, {"a1", "a0"}}));
  EXPECT_TRUE(r.certain_attacks().empty());
  EXPECT_EQ(enumerate_completions(r).size(), 3u);
}

TEST(Generator, DeterministicUnderSeed) {
  GeneratorParams p;
  p.args = 9;
  p.uncertain_args = 3;
  p.attack_prob = 0.3;
  p.uncertain_attack_prob = 0.2;
  p.sym_prob = 0.2;
  p.seed = 12345;
  EXPECT_EQ(serialize_riaf(generate_riaf(p)), serialize_riaf(generate_riaf(p)));
  auto other = p;
  other.seed = 12346;
  EXPECT_NE(serialize_riaf(generate_riaf(p)), serialize_riaf(generate_riaf(other)));
}

TEST(Generator, RespectsCountsAndPriorities) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams p;
    p.args = 7;
    p.uncertain_args = seed % 8;
    p.attack_prob = 0.3;
    p.uncertain_attack_prob = 0.4;
    p.sym_prob = 0.5;
    p.seed = seed;
    const auto r = generate_riaf(p);
    EXPECT_EQ(r.all_arguments().size(), 7u);
    EXPECT_EQ(r.uncertain_args().size(), p.uncertain_args);
  }
  GeneratorParams all_certain;
  all_certain.args = 4;
  all_certain.attack_prob = 1;
  all_certain.sym_prob = 1;
  const auto r = generate_riaf(all_certain);
  EXPECT_EQ(r.certain_attacks().size(), 16u);
  EXPECT_TRUE(r.uncertain_attacks().empty());
  EXPECT_TRUE(r.uncertain_conflicts().empty());
}

TEST(Generator, RejectsBadParameters) {
  GeneratorParams p;
  p.args = 2;
  p.uncertain_args = 3;
  EXPECT_THROW(generate_riaf(p), std::invalid_argument);
  p.uncertain_args = 0;
  p.attack_prob = 1.5;
  EXPECT_THROW(generate_riaf(p), std::invalid_argument);
  p.attack_prob = 0.1;
  p.sym_prob = -0.1;
  EXPECT_THROW(generate_riaf(p), std::invalid_argument);
}

TEST(Generator, EnginesAgreeOnSeedSeven) {
  GeneratorParams p;
  p.args = 6;
  p.uncertain_args = 2;
  p.attack_prob = 0.25;
  p.uncertain_attack_prob = 0.1;
  p.sym_prob = 0.1;
  p.seed = 7;
  const auto r = generate_riaf(p);
  NaiveOracle naive(r);
  for (auto problem : kAllProblems) {
    for (auto sem : {Semantics::AD, Semantics::CO, Semantics::GR, Semantics::PR, Semantics::STB}) {
      for (const auto& a : r.certain_args()) {
        const QueryTarget target = is_verification(problem) ? QueryTarget{ArgumentSet{a}} : QueryTarget{a};
        const Query q{problem, sem, target};
        const bool expected = naive.answer(problem, sem, target);
        EXPECT_EQ(solve_query(r, q, Engine::Enum).answer, expected);
        EXPECT_EQ(solve_query(r, q, Engine::Auto).answer, expected);
      }
    }
  }
}
