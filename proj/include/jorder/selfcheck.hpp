#ifndef JORDER_SELFCHECK_HPP
#define JORDER_SELFCHECK_HPP

#include <string>
#include <vector>

namespace jorder::selfcheck {

enum class Depth { quick, full };

struct Options {
  Depth depth = Depth::quick;
  // Test hook: perturbs N_3 before the table comparison so the reporting
  // path itself can be exercised.
  bool fault_inject_n3 = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> findings;  // reported, never failed
};

struct Report {
  std::vector<SuiteResult> suites;
  bool all_passed() const;
  long total_checks() const;
};

/// Ledger of minimality certificates gathered while the order suites run:
/// every exponent e_t computed there is re-certified by minimality_witness.
struct WitnessLedger {
  long certified = 0;
  std::vector<std::string> failures;
};

// Each suite checks one family of invariants; quick depth runs the grids the
// acceptance binary gates on, full extends them. The ledger parameter may be
// null when a suite is run standalone.
SuiteResult check_coefficient_oracle(const Options& opt);
SuiteResult check_realification(const Options& opt);
SuiteResult check_theta_ground_truth(const Options& opt);
SuiteResult check_adams_commutation(const Options& opt);
SuiteResult check_generator_orders(const Options& opt, WitnessLedger* ledger);
SuiteResult check_generator_power_closed_form(const Options& opt, WitnessLedger* ledger);
SuiteResult check_line_bundle_orders(const Options& opt, WitnessLedger* ledger);
SuiteResult check_bounds(const Options& opt, WitnessLedger* ledger);
SuiteResult check_nk_values(const Options& opt);
SuiteResult check_prime_support(const Options& opt);
SuiteResult check_localization_quotients(const Options& opt);

/// Runs every suite and folds the witness ledger into a dedicated
/// "minimality-witness" entry.
Report run_selfcheck(const Options& opt);

}  // namespace jorder::selfcheck

#endif  // JORDER_SELFCHECK_HPP
