#ifndef JORDER_RATIONAL_HPP
#define JORDER_RATIONAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace jorder {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den reduced to lowest terms with a positive denominator.
Rat make_rat(const Int& num, const Int& den);

bool is_prime(const Int& n);

/// All primes <= n, ascending. n < 2 gives an empty list.
std::vector<Int> primes_up_to(long n);

/// p-adic valuation. The only non-finite value is nu_p(0) = -infinity,
/// which is an explicit sentinel, never a large negative number.
class Valuation {
 public:
  constexpr Valuation(long v) : finite_(true), v_(v) {}
  static constexpr Valuation neg_infinity() { return Valuation(); }

  bool finite() const { return finite_; }
  long value() const;  // throws std::domain_error when -infinity

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (!a.finite_) return b.finite_;
    return b.finite_ && a.v_ < b.v_;
  }

  std::string str() const;

 private:
  constexpr Valuation() : finite_(false), v_(0) {}
  bool finite_;
  long v_;
};

Valuation nu_p(const Int& n, const Int& p);
Valuation nu_p(const Rat& q, const Int& p);

/// Valuation of a positive machine integer at a small prime; no primality
/// check, for use inside the max-formula loops.
long nu_p_long(long n, long p);

/// Denominator of q in lowest terms; denom(0) = 1.
Int denom(const Rat& q);

/// Positive integer held as its prime factorization. The empty map is 1.
class FactoredInt {
 public:
  FactoredInt() = default;
  static FactoredInt one() { return FactoredInt(); }
  static FactoredInt from_integer(const Int& n);         // n >= 1
  static FactoredInt prime_power(const Int& p, long e);  // e >= 0

  Int value() const;
  bool is_one() const { return factors_.empty(); }
  long exponent_of(const Int& p) const;
  const std::map<Int, long>& factors() const { return factors_; }

  FactoredInt times(const FactoredInt& other) const;
  FactoredInt lcm(const FactoredInt& other) const;
  FactoredInt divided_by(const Int& p) const;  // removes one factor of p

  std::string decimal() const;
  /// "2^3 · 5" with a configurable separator ("1" for the empty product).
  std::string factored(const std::string& sep = " \xc2\xb7 ") const;

  friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

 private:
  std::map<Int, long> factors_;
};

}  // namespace jorder

#endif  // JORDER_RATIONAL_HPP
