#include <doctest.h>

#include "jorder/jorder.hpp"

using namespace jorder;

namespace {

FactoredInt order_of(long m, std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return j_order_exact(KOElement(m, std::move(c))).order;
}

}  // namespace

TEST_CASE("exact J-orders of generators") {
  CHECK(order_of(2, {0}).is_one());
  CHECK(order_of(8, {0, 0, 0, 0}).is_one());
  CHECK(order_of(2, {1}).value() == 24);
  CHECK(order_of(4, {1}).value() == 2880);
  CHECK(order_of(6, {1}).value() == 362880);
  CHECK(order_of(2, {1}).factored("*") == "2^3*3");
  CHECK(order_of(4, {1}).factored("*") == "2^6*3^2*5");
  CHECK_THROWS_AS(j_order_exact(KOElement(0, {})), std::invalid_argument);
}

TEST_CASE("exact J-orders of generator powers and mixed elements") {
  CHECK(order_of(8, {0, 1}).factored("*") == "2^9*3^3*5^2*7");
  CHECK(order_of(8, {0, 0, 1}).factored("*") == "2^7*3^2*5*7");
  CHECK(order_of(8, {0, 0, 0, 1}).factored("*") == "2^5*3*5");
  CHECK(order_of(4, {1, 1}).factored("*") == "2^6*3^2*5");
  CHECK(order_of(6, {3, -2, 1}).factored("*") == "2^7*3^2*5*7");
  CHECK(order_of(8, {0, 1, 0, 1}).factored("*") == "2^9*3^3*5^2*7");
}

TEST_CASE("odd m reduces") {
  // m = 4t+3 forwards to m-1 unchanged
  CHECK(order_of(7, {1}).value() == order_of(6, {1}).value());
  // m = 4t+1 with top coefficient 1 folds in an lcm with 2
  const JOrderResult r = j_order_exact(KOElement(5, {Int(0), Int(0), Int(1)}));
  CHECK(r.order.value() == 2);
  CHECK(r.lcm2_applied);
  const JOrderResult r2 = j_order_exact(KOElement(5, {Int(0), Int(0), Int(2)}));
  CHECK(r2.order.is_one());
  CHECK_FALSE(r2.lcm2_applied);
  // the lcm is absorbed when the inner order is already even
  const JOrderResult r3 = j_order_exact(KOElement(5, {Int(1), Int(0), Int(1)}));
  CHECK(r3.lcm2_applied);
  CHECK(r3.order.value() == order_of(4, {1}).value());
}

TEST_CASE("nu_generator_order closed form") {
  CHECK(nu_generator_order(2, 2) == 3);
  CHECK(nu_generator_order(3, 2) == 1);
  CHECK(nu_generator_order(11, 2) == 0);  // p - 1 > m
  const std::vector<long> expected2 = {3, 6, 7, 11, 11, 14, 15, 20, 20, 22, 23, 27};
  const std::vector<long> expected3 = {1, 2, 4, 4, 5, 7, 7, 8, 11, 11, 11, 13};
  for (long m = 2; m <= 24; m += 2) {
    CHECK(nu_generator_order(2, m) == expected2[static_cast<size_t>(m / 2) - 1]);
    CHECK(nu_generator_order(3, m) == expected3[static_cast<size_t>(m / 2) - 1]);
  }
}

TEST_CASE("generator power closed form") {
  CHECK(generator_power_closed_form(5, 20, 2).exponent == 6);
  CHECK(generator_power_closed_form(7, 8, 4).exponent == 0);
  // k = 1 reduces to the generator formula
  for (long m = 2; m <= 16; m += 2)
    for (const Int& p : primes_up_to(m + 1))
      CHECK(generator_power_closed_form(p, m, 1).exponent ==
            nu_generator_order(p, m));

  CHECK(generator_power_closed_form(7, 20, 2).status == FormulaStatus::proven);
  CHECK(generator_power_closed_form(5, 20, 5).status ==
        FormulaStatus::conjectural);
  CHECK(generator_power_closed_form(7, 20, 5).status == FormulaStatus::proven);
  CHECK(generator_power_closed_form(7, 20, 7).status ==
        FormulaStatus::conjectural);
  CHECK(generator_power_closed_form(3, 20, 9).status == FormulaStatus::proven);
  CHECK_THROWS_AS(generator_power_closed_form(2, 8, 5), std::invalid_argument);

  const GeneratorPowerOrder g = generator_power_order_closed_form(8, 2);
  CHECK(g.result.order.factored("*") == "2^9*3^3*5^2*7");
  CHECK(g.status == FormulaStatus::proven);
  CHECK(generator_power_order_closed_form(20, 5).status ==
        FormulaStatus::conjectural);
}

TEST_CASE("the conjecture genuinely fails at k = p = 5") {
  // smallest observed counterexample: m = 12
  const long exact = j_order_exact(KOElement::y_power(12, 5)).exponent_of(5);
  const ClosedFormExponent cf = generator_power_closed_form(5, 12, 5);
  CHECK(cf.status == FormulaStatus::conjectural);
  CHECK(exact == 0);
  CHECK(cf.exponent == 1);
}

TEST_CASE("line bundle orders") {
  CHECK(line_bundle_order(2, 2).order.value() == 6);
  CHECK(line_bundle_order(2, 2).order.factored("*") == "2*3");
  CHECK(line_bundle_order(2, 8).order.factored("*") == "2^6*3^4*5^2*7");
  CHECK(line_bundle_order(6, 12).order.factored("*") ==
        "2^7*3^2*5^3*7^2*11*13");
  CHECK(line_bundle_order(4, 10).order.factored("*") == "2^3*3^5*5^2*7*11");
  // n = 1 is the generator itself
  for (long m = 2; m <= 12; m += 2)
    CHECK(line_bundle_order(1, m).order.value() == stiefel_min_n(m).value());
  // closed form vs exact pipeline
  for (long m : {4L, 8L})
    for (long n = 1; n <= 6; ++n)
      CHECK(line_bundle_order(n, m).order ==
            line_bundle_order_exact(n, m).order);
  CHECK(line_bundle_order_exact(3, 6).method == "exact");
  CHECK(line_bundle_order(3, 6).method == "closed-form");
  CHECK_THROWS_AS(line_bundle_order(0, 8), std::invalid_argument);
  // the formula only reads nu_p(n), so enormous n stays cheap
  CHECK(line_bundle_order(1024L * 3 * 3, 8).order.factored("*") == "5^2*7");
}

TEST_CASE("bounds bracket the exact exponent") {
  // x = y: bounds collapse to the exact value
  for (long m : {4L, 8L, 12L})
    for (const Int& p : primes_up_to(m + 1)) {
      const BoundsResult b = bounds_LU(KOElement::y_power(m, 1), p);
      CHECK_FALSE(b.degenerate);
      CHECK(b.lower == b.upper);
      CHECK(b.lower == nu_generator_order(p, m));
      CHECK(b.nu_E == 0);
    }

  const BoundsResult b1 = bounds_LU(KOElement(4, {Int(0), Int(1)}), 2);
  CHECK(b1.lower == 0);
  CHECK(b1.upper == 6);
  CHECK(b1.nu_N == Valuation(0));  // N = -3
  CHECK(b1.nu_E == 6);

  const BoundsResult b2 = bounds_LU(KOElement(4, {Int(1), Int(1)}), 2);
  CHECK(b2.lower == -1);
  CHECK(b2.upper == 6);
  CHECK(b2.nu_N == Valuation(1));  // N = -2

  const BoundsResult b3 = bounds_LU(KOElement(4, {Int(1), Int(1)}), 3);
  CHECK(b3.lower == 2);
  CHECK(b3.upper == 2);

  const BoundsResult b4 = bounds_LU(KOElement(6, {Int(2), Int(1), Int(3)}), 2);
  CHECK(b4.lower == 0);
  CHECK(b4.upper == 7);
  CHECK(b4.nu_b_gen == 7);

  // N = 3 - 3*1 = 0 is degenerate
  const BoundsResult deg = bounds_LU(KOElement(4, {Int(3), Int(1)}), 2);
  CHECK(deg.degenerate);
  CHECK_FALSE(deg.nu_N.finite());
}

TEST_CASE("large prime closed form") {
  // x = y^2 over CP^8 at p = 5: nu = nu_5(b_8(y)) - nu_5(N_2)
  const KOElement x = KOElement::y_power(8, 2);
  CHECK(closed_form_large_p(x, 5) == 2);
  CHECK(closed_form_large_p(x, 5) == j_order_exact(x).exponent_of(5));
  CHECK(closed_form_large_p(x, 7) == j_order_exact(x).exponent_of(7));
  // p - 1 > m clamps to zero
  CHECK(closed_form_large_p(x, 11) == 0);
  CHECK_THROWS_AS(closed_form_large_p(x, 2), std::invalid_argument);  // p <= s
  CHECK_THROWS_AS(closed_form_large_p(KOElement::zero(8), 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form_large_p(KOElement(4, {Int(3), Int(1)}), 3),
                  std::domain_error);  // N = 0
}

TEST_CASE("stiefel_min_n") {
  CHECK(stiefel_min_n(2).value() == 24);
  CHECK(stiefel_min_n(1).value() == 2);
  CHECK(stiefel_min_n(3).value() == 24);
  CHECK(stiefel_min_n(4).value() == 2880);
  for (long m = 2; m <= 16; m += 2)
    for (const Int& p : primes_up_to(m + 1))
      CHECK(stiefel_min_n(m).exponent_of(p) == nu_generator_order(p, m));
  CHECK_THROWS_AS(stiefel_min_n(0), std::invalid_argument);
}

TEST_CASE("prime support stops at m + 1") {
  for (long m : {4L, 10L}) {
    const FactoredInt order = j_order_exact(KOElement::y_power(m, 1)).order;
    for (const auto& [p, e] : order.factors()) CHECK(p <= m + 1);
  }
}
