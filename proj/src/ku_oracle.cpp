#include "jorder/ku_oracle.hpp"

#include <stdexcept>
#include <utility>

namespace jorder {

void LaurentPoly::add_term(long e, const Int& c) {
  if (sgn(c) == 0) return;
  Int& slot = terms_[e];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(e);
}

LaurentPoly LaurentPoly::monomial(long e, const Int& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

Int LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, Int(-c));
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, v] : a.terms_) out.add_term(e, c * v);
  return out;
}

LaurentPoly laurent_pow(long r) {
  if (r < 0) throw std::invalid_argument("laurent_pow: r must be >= 0");
  LaurentPoly base = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, 1) +
                     LaurentPoly::monomial(0, -2);
  LaurentPoly out = LaurentPoly::monomial(0, 1);
  for (long i = 0; i < r; ++i) out = out * base;
  return out;
}

Int oracle_brs(long r, long s) {
  if (s < 0 || s > r)
    throw std::invalid_argument("oracle_brs: needs 0 <= s <= r");
  return laurent_pow(r).coeff(s);
}

std::vector<Int> oracle_dns(long n) {
  if (n < 1) throw std::invalid_argument("oracle_dns: n must be >= 1");
  LaurentPoly residual = LaurentPoly::monomial(n, 1) +
                         LaurentPoly::monomial(-n, 1) +
                         LaurentPoly::monomial(0, -2);
  std::vector<Int> d(static_cast<size_t>(n), Int(0));
  // (x + 1/x - 2)^s has leading term x^s, so peel from the top down
  for (long s = n; s >= 1; --s) {
    Int c = residual.coeff(s);
    d[static_cast<size_t>(s) - 1] = c;
    if (sgn(c) != 0) residual = residual - c * laurent_pow(s);
  }
  if (!residual.is_zero())
    throw std::logic_error("oracle_dns: triangular solve left a residue");
  return d;
}

KUElement::KUElement(long m) : m_(m) {
  if (m < 0) throw std::invalid_argument("KUElement: m must be >= 0");
  c_.assign(static_cast<size_t>(m) + 1, Int(0));
}

KUElement::KUElement(long m, std::vector<Int> mu_coeffs)
    : m_(m), c_(std::move(mu_coeffs)) {
  if (m < 0 || c_.size() != static_cast<size_t>(m) + 1)
    throw std::invalid_argument("KUElement: needs m+1 mu-coefficients");
}

KUElement KUElement::constant(long m, const Int& c) {
  KUElement u(m);
  u.c_[0] = c;
  return u;
}

bool KUElement::is_zero() const {
  for (const Int& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

KUElement operator+(const KUElement& a, const KUElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("KUElement: mixed m");
  KUElement out(a.m_);
  for (size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
  return out;
}

KUElement operator-(const KUElement& a, const KUElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("KUElement: mixed m");
  KUElement out(a.m_);
  for (size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
  return out;
}

KUElement operator*(const KUElement& a, const KUElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("KUElement: mixed m");
  KUElement out(a.m_);
  const size_t n = out.c_.size();
  for (size_t i = 0; i < n; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j + i < n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

namespace {

// Inverse of a unit with constant term +-1; coefficients stay integral.
KUElement unit_inverse(const KUElement& u) {
  const Int lead = u.coeff(0);
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("KUElement: inverse needs constant +-1");
  KUElement out(u.m());
  std::vector<Int> b(static_cast<size_t>(u.m()) + 1, Int(0));
  b[0] = lead;
  for (size_t k = 1; k < b.size(); ++k) {
    Int acc(0);
    for (size_t i = 1; i <= k; ++i) acc += u.coeff(static_cast<long>(i)) * b[k - i];
    b[k] = -acc * lead;
  }
  return KUElement(u.m(), std::move(b));
}

KUElement pow_nonneg(const KUElement& base, long e) {
  KUElement result = KUElement::constant(base.m(), 1);
  KUElement b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

}  // namespace

KUElement KUElement::xi_power(long m, long n) {
  KUElement xi(m);
  xi.c_[0] = 1;
  if (m >= 1) xi.c_[1] = 1;
  if (n >= 0) return pow_nonneg(xi, n);
  return unit_inverse(pow_nonneg(xi, -n));
}

KUElement ku_complexify(const KOElement& x) {
  const long m = x.m();
  const KUElement cy = KUElement::xi_power(m, 1) + KUElement::xi_power(m, -1) -
                       KUElement::constant(m, 2);
  KUElement out(m);
  KUElement power = KUElement::constant(m, 1);
  for (size_t k = 0; k < x.coeffs().size(); ++k) {
    power = power * cy;
    if (sgn(x.coeffs()[k]) == 0) continue;
    std::vector<Int> scaled(static_cast<size_t>(m) + 1);
    for (long j = 0; j <= m; ++j)
      scaled[static_cast<size_t>(j)] = x.coeffs()[k] * power.coeff(j);
    out = out + KUElement(m, std::move(scaled));
  }
  return out;
}

KUElement ku_line_power(long n, long m) {
  if (n < 1) throw std::invalid_argument("ku_line_power: n must be >= 1");
  return KUElement::xi_power(m, n) + KUElement::xi_power(m, -n);
}

KUElement ku_adams(long n, const KUElement& u) {
  if (n < 1) throw std::invalid_argument("ku_adams: n must be >= 1");
  const long m = u.m();
  const KUElement tau =
      KUElement::xi_power(m, n) - KUElement::constant(m, 1);  // psi^n(mu)
  KUElement result = KUElement::constant(m, u.coeff(m));
  for (long k = m - 1; k >= 0; --k)
    result = result * tau + KUElement::constant(m, u.coeff(k));
  return result;
}

}  // namespace jorder
