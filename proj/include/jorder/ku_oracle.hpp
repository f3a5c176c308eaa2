#ifndef JORDER_KU_ORACLE_HPP
#define JORDER_KU_ORACLE_HPP

#include <map>
#include <vector>

#include "jorder/ko_ring.hpp"
#include "jorder/rational.hpp"

namespace jorder {

/// Integer Laurent polynomial in x; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long e, const Int& c);

  const std::map<long, Int>& terms() const { return terms_; }
  Int coeff(long e) const;
  bool is_zero() const { return terms_.empty(); }
  bool symmetric() const;  // invariant under x <-> 1/x

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Int& c, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(long e, const Int& c);
  std::map<long, Int> terms_;
};

/// (x + 1/x - 2)^r expanded by repeated multiplication. This route never
/// touches the closed-form coefficient systems, which is what lets it
/// certify them.
LaurentPoly laurent_pow(long r);

/// Coefficient of x^s in laurent_pow(r); for s = 0 the constant term.
Int oracle_brs(long r, long s);

/// (d_{n,1}, ..., d_{n,n}) by peeling x^n + x^{-n} - 2 against the basis
/// (x + 1/x - 2)^s from the top exponent down.
std::vector<Int> oracle_dns(long n);

/// KU(CP^m) modeled as Z[mu]/mu^{m+1} with mu = xi - 1.
class KUElement {
 public:
  explicit KUElement(long m);
  KUElement(long m, std::vector<Int> mu_coeffs);
  static KUElement constant(long m, const Int& c);
  static KUElement xi_power(long m, long n);  // xi^n, n may be negative

  long m() const { return m_; }
  const Int& coeff(long j) const { return c_[static_cast<size_t>(j)]; }
  bool is_zero() const;

  friend KUElement operator+(const KUElement& a, const KUElement& b);
  friend KUElement operator-(const KUElement& a, const KUElement& b);
  friend KUElement operator*(const KUElement& a, const KUElement& b);
  friend bool operator==(const KUElement&, const KUElement&) = default;

 private:
  long m_;
  std::vector<Int> c_;
};

/// Complexification c(sum m_k y^k) = sum m_k (xi + 1/xi - 2)^k.
KUElement ku_complexify(const KOElement& x);

/// xi^n + xi^{-n}.
KUElement ku_line_power(long n, long m);

/// Adams operation by substituting xi -> xi^n; n >= 1.
KUElement ku_adams(long n, const KUElement& u);

}  // namespace jorder

#endif  // JORDER_KU_ORACLE_HPP
