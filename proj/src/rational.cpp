#include "jorder/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace jorder {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 100) {
    long v = n.get_si();
    for (long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<Int> primes_up_to(long n) {
  std::vector<Int> out;
  if (n < 2) return out;
  std::vector<char> composite(static_cast<size_t>(n) + 1, 0);
  for (long p = 2; p <= n; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    out.emplace_back(p);
    for (long q = p * p; q <= n; q += p) composite[static_cast<size_t>(q)] = 1;
  }
  return out;
}

long Valuation::value() const {
  if (!finite_) throw std::domain_error("Valuation: value of -infinity");
  return v_;
}

std::string Valuation::str() const {
  return finite_ ? std::to_string(v_) : "-inf";
}

Valuation nu_p(const Int& n, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("nu_p: p must be prime");
  if (sgn(n) == 0) return Valuation::neg_infinity();
  Int reduced;
  auto count = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Valuation(static_cast<long>(count));
}

Valuation nu_p(const Rat& q, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("nu_p: p must be prime");
  if (sgn(q) == 0) return Valuation::neg_infinity();
  Int scratch;
  auto num = mpz_remove(scratch.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t());
  auto den = mpz_remove(scratch.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t());
  return Valuation(static_cast<long>(num) - static_cast<long>(den));
}

long nu_p_long(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int denom(const Rat& q) { return q.get_den(); }  // mpq is kept canonical

FactoredInt FactoredInt::from_integer(const Int& n) {
  if (n < 1) throw std::invalid_argument("FactoredInt: value must be >= 1");
  FactoredInt out;
  Int rem = n;
  auto strip = [&rem](const Int& p) {
    long e = 0;
    while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
      rem /= p;
      ++e;
    }
    return e;
  };
  if (long e = strip(2); e > 0) out.factors_[Int(2)] = e;
  Int c = 3;
  while (rem > 1) {
    if (c * c > rem || (c > 1000000 && is_prime(rem))) {
      // what is left is prime
      out.factors_[rem] += 1;
      break;
    }
    if (long e = strip(c); e > 0) out.factors_[c] = e;
    c += 2;
  }
  return out;
}

FactoredInt FactoredInt::prime_power(const Int& p, long e) {
  if (!is_prime(p)) throw std::invalid_argument("prime_power: p must be prime");
  if (e < 0) throw std::invalid_argument("prime_power: negative exponent");
  FactoredInt out;
  if (e > 0) out.factors_[p] = e;
  return out;
}

Int FactoredInt::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors_) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    v *= pe;
  }
  return v;
}

long FactoredInt::exponent_of(const Int& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

FactoredInt FactoredInt::times(const FactoredInt& other) const {
  FactoredInt out = *this;
  for (const auto& [p, e] : other.factors_) {
    long v = out.factors_[p] += e;
    if (v == 0) out.factors_.erase(p);
  }
  return out;
}

FactoredInt FactoredInt::lcm(const FactoredInt& other) const {
  FactoredInt out = *this;
  for (const auto& [p, e] : other.factors_) {
    long& slot = out.factors_[p];
    if (e > slot) slot = e;
  }
  return out;
}

FactoredInt FactoredInt::divided_by(const Int& p) const {
  auto it = factors_.find(p);
  if (it == factors_.end())
    throw std::invalid_argument("divided_by: p does not divide the value");
  FactoredInt out = *this;
  if (--out.factors_[p] == 0) out.factors_.erase(p);
  return out;
}

std::string FactoredInt::decimal() const { return value().get_str(); }

std::string FactoredInt::factored(const std::string& sep) const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << sep;
    first = false;
    os << p.get_str();
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace jorder
