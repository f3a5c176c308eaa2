#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <thread>
#include <random>

#include "jorder/bott.hpp"
#include "jorder/dseries.hpp"

using namespace jorder;

namespace {

Series rat_series(int order, std::initializer_list<std::pair<long, Rat>> coeffs) {
  Series s(order);
  for (const auto& [k, v] : coeffs) s.set_coeff(static_cast<int>(k), v);
  return s;
}

bool denominators_are_p_powers(const Series& f, long p) {
  for (int j = 0; j <= f.order(); ++j) {
    Int rem;
    mpz_remove(rem.get_mpz_t(), f.coeff(j).get_den_mpz_t(), Int(p).get_mpz_t());
    if (rem != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("theta generator known expansions") {
  CHECK(theta_generator(2, 2) == rat_series(1, {{0, Rat(1)}, {1, make_rat(1, 8)}}));
  CHECK(theta_generator(2, 8) ==
        rat_series(4, {{0, Rat(1)},
                       {1, make_rat(1, 8)},
                       {2, make_rat(-1, 128)},
                       {3, make_rat(1, 1024)},
                       {4, make_rat(-5, 32768)}}));
  for (long m = 2; m <= 20; m += 2) {
    Series third = Series::one(static_cast<int>(m / 2));
    third.set_coeff(1, make_rat(1, 3));
    CHECK(theta_generator(3, m) == third);
  }
  CHECK(theta_generator(5, 8) ==
        rat_series(4, {{0, Rat(1)}, {1, Rat(1)}, {2, make_rat(1, 5)}}));
}

TEST_CASE("defining identity theta^2 p^2 y = psi^p(y)") {
  for (long m = 2; m <= 16; m += 2)
    for (long p : {2L, 3L, 5L, 7L}) {
      const int T = static_cast<int>(m / 2);
      Series p2y(T);
      p2y.set_coeff(1, Rat(Int(p) * p));
      CHECK(theta_generator(p, m).pow(2) * p2y == adams_generator(p, m));
    }
}

TEST_CASE("theta_power known expansions") {
  CHECK(theta_power(2, 2, 4) == rat_series(2, {{0, Rat(1)}, {2, make_rat(-1, 16)}}));
  CHECK(theta_power(2, 2, 8) ==
        rat_series(4, {{0, Rat(1)},
                       {2, make_rat(-1, 16)},
                       {3, make_rat(1, 32)},
                       {4, make_rat(-3, 256)}}));
  CHECK(theta_power(3, 2, 6) ==
        rat_series(3, {{0, Rat(1)}, {2, make_rat(-1, 3)}, {3, make_rat(8, 27)}}));
  CHECK(theta_power(3, 3, 8) ==
        rat_series(4, {{0, Rat(1)}, {3, make_rat(13, 9)}, {4, make_rat(-34, 9)}}));
  CHECK(theta_power(5, 1, 8) == theta_generator(5, 8));
  CHECK_THROWS_AS(theta_power(2, 5, 8), std::invalid_argument);
  CHECK_THROWS_AS(theta_power(4, 1, 8), std::invalid_argument);  // 4 not prime
  CHECK_THROWS_AS(theta_power(2, 1, 7), std::invalid_argument);  // odd m
}

TEST_CASE("unit constants and p-locality across the grid") {
  for (long m = 2; m <= 12; m += 2)
    for (long p : {2L, 3L, 5L, 7L})
      for (long k = 1; k <= m / 2; ++k) {
        const Series th = theta_power(p, k, m);
        CHECK(th.coeff(0) == 1);
        CHECK(denominators_are_p_powers(th, p));
      }
}

TEST_CASE("theta_element") {
  CHECK(theta_element(3, KOElement::zero(8)) == Series::one(4));
  CHECK(theta_element(5, KOElement::y_power(8, 1)) == theta_generator(5, 8));
  CHECK(theta_element(2, KOElement(2, {Int(1)})) ==
        rat_series(1, {{0, Rat(1)}, {1, make_rat(1, 8)}}));

  // exponential law: sums map to products
  std::mt19937_64 rng(31337);
  for (long m : {6L, 10L})
    for (long p : {2L, 3L, 5L})
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<Int> c1, c2;
        for (long k = 0; k < m / 2; ++k) {
          c1.emplace_back(static_cast<long>(rng() % 7) - 3);
          c2.emplace_back(static_cast<long>(rng() % 7) - 3);
        }
        const KOElement x1(m, c1), x2(m, c2);
        CHECK(theta_element(p, x1 + x2) ==
              theta_element(p, x1) * theta_element(p, x2));
      }
}

TEST_CASE("N_k weights") {
  auto& cache = ThetaCache::instance();
  CHECK(cache.n_weight(2) == 3);
  CHECK(cache.n_weight(3) == -10);
  CHECK(cache.n_weight(4) == 35);
  CHECK(cache.n_weight(5) == -126);
  CHECK(cache.n_weight(6) == 462);
  for (long k = 2; k <= 6; ++k)
    for (const Int& p : primes_up_to(23)) {
      if (p <= k) continue;
      const long pl = p.get_si();
      CHECK(nu_p(cache.n_weight(k), p) == Valuation(2 * (k - 1) / (pl - 1)));
    }
}

TEST_CASE("alpha decomposition identity") {
  for (long m : {8L, 12L})
    for (long p : {2L, 3L, 5L})
      for (long k = 2; k <= m / 2; ++k) {
        const auto [alpha, nk] = alpha_N(k, p, m);
        CHECK(alpha.coeff(0) == 1);
        CHECK(theta_power(p, k, m) * theta_generator(p, m).pow(nk) == alpha);
      }
}

TEST_CASE("commutation with Adams operations") {
  for (long m : {8L, 12L})
    for (long p : {2L, 3L})
      for (long n : {2L, 3L}) {
        const Series psi = adams_element(n, KOElement::y_power(m, 1));
        std::vector<Int> coeffs;
        for (int j = 1; j <= psi.order(); ++j)
          coeffs.push_back(psi.coeff(j).get_num());
        const Series lhs = theta_element(p, KOElement(m, coeffs));
        const Series rhs =
            theta_generator(p, m).compose(adams_generator(n, m));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("snapshot round-trip") {
  auto& cache = ThetaCache::instance();
  const Series before = cache.theta_power(7, 2, 12);
  const std::string path = "theta_cache_test_snapshot.txt";
  REQUIRE(cache.save_snapshot(path));
  cache.clear();
  REQUIRE(cache.load_snapshot(path));
  CHECK(cache.theta_power(7, 2, 12) == before);
  std::remove(path.c_str());

  CHECK_FALSE(cache.load_snapshot("no_such_file_anywhere.txt"));

  // unrecognized or truncated snapshots are rejected, not half-loaded
  {
    std::ofstream os("theta_cache_bad_snapshot.txt");
    os << "some other format 9\ntheta 2 4 1 2 1 1/8 -1/128\n";
  }
  CHECK_FALSE(cache.load_snapshot("theta_cache_bad_snapshot.txt"));
  std::remove("theta_cache_bad_snapshot.txt");
  {
    std::ofstream os("theta_cache_bad_snapshot.txt");
    os << "jorder-theta-cache 1\ntheta 2 4 1 2 1 1/8\n";  // missing coefficient
  }
  CHECK_FALSE(cache.load_snapshot("theta_cache_bad_snapshot.txt"));
  std::remove("theta_cache_bad_snapshot.txt");
}

TEST_CASE("memo caches are safe under concurrent access") {
  auto& cache = ThetaCache::instance();
  cache.clear();
  const Series expected = theta_power(3, 5, 20);
  cache.clear();
  std::vector<std::thread> workers;
  std::vector<Series> results(6, Series(10));
  for (int i = 0; i < 6; ++i)
    workers.emplace_back([&results, i] {
      results[static_cast<size_t>(i)] = theta_power(3, 5 - (i % 3), 20);
    });
  for (std::thread& w : workers) w.join();
  for (int i = 0; i < 6; ++i)
    CHECK(results[static_cast<size_t>(i)] ==
          theta_power(3, 5 - (i % 3), 20));
  CHECK(theta_power(3, 5, 20) == expected);
}
