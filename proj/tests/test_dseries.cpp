#include <doctest.h>

#include "jorder/bott.hpp"
#include "jorder/dseries.hpp"

using namespace jorder;

namespace {

Series one_plus_third(int order) {
  Series f = Series::one(order);
  f.set_coeff(1, make_rat(1, 3));
  return f;
}

}  // namespace

TEST_CASE("e_k on simple series") {
  CHECK(e_k_exact(one_plus_third(2), 1).value() == 3);
  CHECK(e_k_exact(one_plus_third(2), 2).value() == 9);

  Series eighth = Series::one(1);
  eighth.set_coeff(1, make_rat(1, 8));
  CHECK(e_k_exact(eighth, 1).value() == 8);

  Series integral(3);
  integral.set_coeff(0, Rat(1));
  integral.set_coeff(2, Rat(-7));
  CHECK(e_k_exact(integral, 3).is_one());

  // constant -1 is normalized away
  Series neg(1);
  neg.set_coeff(0, Rat(-1));
  neg.set_coeff(1, make_rat(1, 2));
  CHECK(e_k_exact(neg, 1).value() == 2);

  Series bad(1);
  bad.set_coeff(0, Rat(2));
  CHECK_THROWS_AS(e_k_exact(bad, 1), std::invalid_argument);
  CHECK_THROWS_AS(e_k_exact(one_plus_third(2), 5), std::invalid_argument);
}

TEST_CASE("minimality witness") {
  CHECK(minimality_witness(one_plus_third(2), FactoredInt::from_integer(9), 2));
  CHECK_FALSE(
      minimality_witness(one_plus_third(2), FactoredInt::from_integer(27), 2));
  CHECK_FALSE(
      minimality_witness(one_plus_third(2), FactoredInt::from_integer(3), 2));
  Series integral = Series::one(3);
  CHECK(minimality_witness(integral, FactoredInt::one(), 3));
}

TEST_CASE("e_k certified on theta series") {
  for (long m : {8L, 12L})
    for (long p : {2L, 3L, 5L})
      for (long k = 1; k <= m / 2; ++k) {
        const Series f = theta_power(p, k, m);
        const FactoredInt e = e_k_exact(f, m / 2);
        CHECK(minimality_witness(f, e, m / 2));
      }
}

TEST_CASE("e_k is monotone in k") {
  const Series f = theta_generator(2, 12);
  const std::vector<long> expected = {3, 6, 7, 11, 11, 14};  // nu_2 of e_k
  FactoredInt prev = FactoredInt::one();
  for (long k = 1; k <= 6; ++k) {
    const FactoredInt e = e_k_exact(f, k);
    CHECK(e.exponent_of(2) == expected[static_cast<size_t>(k) - 1]);
    CHECK(e.factors().size() <= 1);  // pure 2-power
    CHECK(e.exponent_of(2) >= prev.exponent_of(2));
    prev = e;
  }
}

TEST_CASE("classify_dseries") {
  // p-integral series carries no type
  const DSeriesType none = classify_dseries(Series::one(4), 2, 4);
  CHECK_FALSE(none.alpha.has_value());

  const DSeriesType t3 = classify_dseries(one_plus_third(3), 3, 3);
  CHECK(t3.alpha == 1);
  CHECK(t3.beta == 1);
  CHECK(t3.strict);  // nu_3 of the zero tail never meets the bound

  // theta_5(y) on CP^12: type (2, 1), strict
  const DSeriesType t5 = classify_dseries(theta_generator(5, 12), 5, 6);
  CHECK(t5.alpha == 2);
  CHECK(t5.beta == 1);
  CHECK(t5.strict);

  // theta_5(psi^2(y)) on CP^6: the y^3 coefficient sits exactly on the weak
  // bound, so the type is (2, 1) but strictness fails
  const Series f = theta_element(5, realify_line_bundle(2, 6));
  const DSeriesType ty = classify_dseries(f, 5, 3);
  CHECK(ty.alpha == 2);
  CHECK(ty.beta == 1);
  CHECK_FALSE(ty.strict);
}

TEST_CASE("strict closed form for e_k") {
  CHECK(strict_e_formula(1, 1, 2, 3) == 2);
  CHECK(strict_e_formula(3, 2, 2, 5) == 0);  // floor(k/alpha) = 0
  CHECK(strict_e_formula(1, 1, 4, 2) == 6);

  // matches the exact computation on strict instances
  const Series f = theta_generator(5, 12);
  const DSeriesType ty = classify_dseries(f, 5, 6);
  REQUIRE(ty.strict);
  CHECK(strict_e_formula(*ty.alpha, *ty.beta, 6, 5) ==
        e_k_exact(f, 6).exponent_of(5));

  const Series g = one_plus_third(4);
  CHECK(strict_e_formula(1, 1, 4, 3) == e_k_exact(g, 4).exponent_of(3));
}

TEST_CASE("s_k_primes") {
  CHECK(s_k_primes(Series::one(3), 3).empty());
  CHECK(s_k_primes(one_plus_third(2), 2) == std::set<Int>{3});
  CHECK(s_k_primes(theta_generator(2, 8), 4) == std::set<Int>{2});

  Series mixed(3);
  mixed.set_coeff(0, Rat(1));
  mixed.set_coeff(1, make_rat(1, 6));
  mixed.set_coeff(3, make_rat(2, 5));
  CHECK(s_k_primes(mixed, 3) == std::set<Int>{2, 3, 5});
  CHECK(s_k_primes(mixed, 1) == std::set<Int>{2, 3});

  // p in S_k(f) iff nu_p(e_k(f)) > 0
  const FactoredInt e = e_k_exact(mixed, 3);
  for (const Int& p : {Int(2), Int(3), Int(5), Int(7)}) {
    const bool in_support = s_k_primes(mixed, 3).count(p) > 0;
    CHECK(in_support == (e.exponent_of(p) > 0));
  }
}
