#include <doctest.h>

#include "jorder/ku_oracle.hpp"

using namespace jorder;

TEST_CASE("laurent_pow expansions") {
  CHECK(laurent_pow(0) == LaurentPoly::monomial(0, 1));

  const LaurentPoly r2 = laurent_pow(2);
  CHECK(r2.coeff(2) == 1);
  CHECK(r2.coeff(1) == -4);
  CHECK(r2.coeff(0) == 6);
  CHECK(r2.coeff(-1) == -4);
  CHECK(r2.coeff(-2) == 1);
  CHECK(r2.coeff(3) == 0);

  const LaurentPoly r3 = laurent_pow(3);
  CHECK(r3.coeff(3) == 1);
  CHECK(r3.coeff(2) == -6);
  CHECK(r3.coeff(1) == 15);
  CHECK(r3.coeff(0) == -20);
}

TEST_CASE("laurent symmetry and leading term") {
  for (long r = 0; r <= 20; ++r) {
    const LaurentPoly lp = laurent_pow(r);
    CHECK(lp.symmetric());
    CHECK(lp.coeff(r) == 1);
    CHECK(lp.coeff(r + 1) == 0);
  }
}

TEST_CASE("oracle_brs") {
  CHECK(oracle_brs(2, 1) == -4);
  CHECK(oracle_brs(2, 0) == 6);
  CHECK(oracle_brs(3, 1) == 15);
  for (long r = 0; r <= 10; ++r) CHECK(oracle_brs(r, r) == 1);
}

TEST_CASE("oracle_dns") {
  CHECK(oracle_dns(2) == std::vector<Int>{4, 1});
  CHECK(oracle_dns(3) == std::vector<Int>{9, 6, 1});
  for (long n = 1; n <= 12; ++n) CHECK(oracle_dns(n)[0] == Int(n) * n);
}

TEST_CASE("KU ring basics") {
  const long m = 6;
  const KUElement xi = KUElement::xi_power(m, 1);
  CHECK(xi.coeff(0) == 1);
  CHECK(xi.coeff(1) == 1);
  CHECK(xi * KUElement::xi_power(m, -1) == KUElement::constant(m, 1));
  CHECK(KUElement::xi_power(m, 3) == xi * xi * xi);
  CHECK(ku_complexify(KOElement::zero(m)).is_zero());
}

TEST_CASE("complexification identity") {
  for (long m = 2; m <= 16; m += 2)
    for (long n = 1; n <= 12; ++n) {
      const KUElement lhs = ku_complexify(realify_line_bundle(n, m)) +
                            KUElement::constant(m, 2);
      CHECK(lhs == ku_line_power(n, m));
    }
}

TEST_CASE("c(y)^k matches its direct mu-expansion") {
  // c(y) = mu^2 - mu^3 + mu^4 - ... ; at m = 2 the square is already zero,
  // at m = 4 it survives as mu^4
  const KUElement cy2 = ku_complexify(KOElement(2, {Int(1)}));
  CHECK(cy2 == KUElement(2, {Int(0), Int(0), Int(1)}));
  CHECK((cy2 * cy2).is_zero());

  const KUElement cy4 = ku_complexify(KOElement(4, {Int(1), Int(0)}));
  CHECK(cy4 == KUElement(4, {Int(0), Int(0), Int(1), Int(-1), Int(1)}));
  const KUElement sq = ku_complexify(KOElement(4, {Int(0), Int(1)}));
  CHECK(sq == cy4 * cy4);
  CHECK(sq == KUElement(4, {Int(0), Int(0), Int(0), Int(0), Int(1)}));
}

TEST_CASE("ku_adams") {
  const long m = 8;
  const KUElement u = ku_complexify(KOElement(m, {Int(1), Int(2), Int(0), Int(1)}));
  CHECK(ku_adams(1, u) == u);
  CHECK(ku_adams(2, KUElement::xi_power(m, 1)) == KUElement::xi_power(m, 2));
  CHECK(ku_adams(2, ku_adams(3, u)) == ku_adams(6, u));
  CHECK(ku_adams(3, ku_adams(2, u)) == ku_adams(6, u));
  CHECK_THROWS_AS(ku_adams(0, u), std::invalid_argument);
}

TEST_CASE("complexification commutes with Adams operations") {
  for (long m : {6L, 10L})
    for (long n = 2; n <= 4; ++n)
      for (long k = 1; k <= 2; ++k) {
        const KOElement x = KOElement::y_power(m, k);
        const Series psi = adams_element(n, x);
        std::vector<Int> coeffs;
        for (int j = 1; j <= psi.order(); ++j)
          coeffs.push_back(psi.coeff(j).get_num());
        const KOElement psi_x(m, coeffs);
        CHECK(ku_complexify(psi_x) == ku_adams(n, ku_complexify(x)));
      }
}
