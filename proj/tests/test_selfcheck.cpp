#include <doctest.h>

#include "jorder/selfcheck.hpp"

using namespace jorder::selfcheck;

TEST_CASE("cheap suites pass standalone") {
  Options opt;
  const SuiteResult oracle = check_coefficient_oracle(opt);
  CHECK(oracle.passed);
  CHECK(oracle.checks > 100);

  const SuiteResult nk = check_nk_values(opt);
  CHECK(nk.passed);
  CHECK(nk.failures.empty());

  const SuiteResult localization = check_localization_quotients(opt);
  CHECK(localization.passed);
}

TEST_CASE("fault injection is detected and named") {
  Options opt;
  opt.fault_inject_n3 = true;
  const SuiteResult nk = check_nk_values(opt);
  CHECK_FALSE(nk.passed);
  REQUIRE_FALSE(nk.failures.empty());
  CHECK(nk.failures.front().find("N_3") != std::string::npos);
}

TEST_CASE("witness ledger collects certificates") {
  Options opt;
  WitnessLedger ledger;
  const SuiteResult gen = check_generator_orders(opt, &ledger);
  CHECK(gen.passed);
  CHECK(ledger.certified > 0);
  CHECK(ledger.failures.empty());
}
