#include <gtest/gtest.h>

#include "dowling/errors.hpp"
#include "dowling/verify.hpp"

TEST(Verify, AllSuitesPassAtDeskScale) {
  for (int k : {2, 3}) {
    dowling::VerifyConfig c;
    c.n = 3;
    c.group = dowling::cyclic_group(k);
    c.nmax = 5;
    c.kmax = 3;
    c.trials = 30;
    const auto rep = dowling::run_suites(c, {"all"});
    EXPECT_EQ(rep.failures(), 0u);
    for (const auto& r : rep.records)
      if (!r.informational) EXPECT_TRUE(r.pass) << r.suite << " " << r.id;
    const auto j = rep.to_json(c);
    EXPECT_EQ(j["summary"]["failed"], 0);
    EXPECT_EQ(j["records"].size(), rep.records.size());
  }
}

TEST(Verify, SuiteSelection) {
  dowling::VerifyConfig c;
  const auto rep = dowling::run_suites(c, {"identities"});
  ASSERT_FALSE(rep.records.empty());
  for (const auto& r : rep.records) {
    EXPECT_EQ(r.suite, "identities");
    EXPECT_FALSE(r.anchor.empty());
  }
  EXPECT_THROW(dowling::run_suites(c, {"nonsense"}), dowling::DomainError);
  EXPECT_EQ(dowling::suite_names().size(), 6u);
}

TEST(Verify, NumerologyIsInformational) {
  dowling::VerifyConfig c;
  c.nmax = 3;
  c.kmax = 2;
  const auto rep = dowling::run_suites(c, {"identities"});
  std::size_t info = 0;
  for (const auto& r : rep.records)
    if (r.id.rfind("numerology", 0) == 0) {
      EXPECT_TRUE(r.informational);
      ++info;
    }
  EXPECT_EQ(info, 4u);
  EXPECT_EQ(rep.failures(), 0u);
}

TEST(Verify, Deterministic) {
  dowling::VerifyConfig c;
  c.trials = 20;
  const auto a = dowling::run_suites(c, {"subdivision"}).to_json(c).dump();
  const auto b = dowling::run_suites(c, {"subdivision"}).to_json(c).dump();
  EXPECT_EQ(a, b);
}
