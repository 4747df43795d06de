#include <gtest/gtest.h>

#include <utility>

#include "fbranch/errors.hpp"
#include "fbranch/lemma_harness.hpp"

using namespace fbranch;

TEST(Harness, SuiteNames) {
  auto names = harness_suite_names();
  EXPECT_EQ(names.size(), 8u);
  HarnessOptions o;
  o.only = "no-such-suite";
  EXPECT_THROW(run_lemma_harness(o), Error);
}

TEST(Harness, SmallSuitesPass) {
  for (auto [name, n] : {std::pair{"tw-bound", 5}, {"typ-bounds", 3}, {"fes-safety", 10}}) {
    HarnessOptions o;
    o.only = name;
    o.n = std::size_t(n);
    auto r = run_lemma_harness(o);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].name, name);
    EXPECT_GT(r[0].instances, 0u);
    EXPECT_EQ(r[0].violations, 0u) << name;
  }
}

TEST(Harness, InjectedFaultIsCaught) {
  HarnessOptions o;
  o.only = "tw-bound";
  o.n = 4;
  o.inject_fault = true;
  auto r = run_lemma_harness(o);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_GT(r[0].violations, 0u);
  EXPECT_FALSE(r[0].counterexamples.empty());
}
