#include "jorder/dseries.hpp"

#include <stdexcept>

namespace jorder {

namespace {

// Normalize to constant term +1 and cut to order k; integrality of powers is
// unchanged by a global sign.
Series unit_prefix(const Series& f, long k) {
  if (k < 1 || k > f.order())
    throw std::invalid_argument("e_k: needs 1 <= k <= truncation order");
  const Rat& lead = f.coeff(0);
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("e_k: constant term must be +1 or -1");
  Series g = f.truncated(static_cast<int>(k));
  return lead == 1 ? g : -g;
}

}  // namespace

FactoredInt e_k_exact(const Series& f, long k) {
  Series g = unit_prefix(f, k);
  FactoredInt e;
  for (long j = 1; j <= k; ++j) {
    const Int d = denom(g.coeff(static_cast<int>(j)));
    if (d == 1) continue;
    g = g.pow(d);  // running power grows by exactly this step's denominator
    e = e.times(FactoredInt::from_integer(d));
  }
  return e;
}

bool minimality_witness(const Series& f, const FactoredInt& e, long k) {
  Series g = unit_prefix(f, k);
  if (!g.pow(e.value()).integral()) return false;
  for (const auto& [p, exp] : e.factors()) {
    (void)exp;
    if (g.pow(e.divided_by(p).value()).integral()) return false;
  }
  return true;
}

DSeriesType classify_dseries(const Series& f, const Int& p, long k) {
  if (k < 1 || k > f.order())
    throw std::invalid_argument("classify_dseries: bad k");
  DSeriesType type;
  for (long i = 1; i <= k; ++i) {
    const Valuation v = nu_p(f.coeff(static_cast<int>(i)), p);
    if (v.finite() && v.value() < 0) {
      type.alpha = i;
      type.beta = -v.value();
      break;
    }
  }
  if (!type.alpha) return type;
  type.strict = true;
  for (long j = *type.alpha + 1; j <= k; ++j) {
    const Rat& a = f.coeff(static_cast<int>(j));
    if (sgn(a) == 0) continue;
    const long bound = -*type.beta * (j / *type.alpha);
    if (!(nu_p(a, p).value() > bound)) type.strict = false;
  }
  return type;
}

long strict_e_formula(long alpha, long beta, long k, const Int& p) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("strict_e_formula: alpha, beta must be >= 1");
  const long pl = p.get_si();
  long best = 0;  // the r = 0 term
  for (long r = 1; r <= k / alpha; ++r)
    best = std::max(best, beta * r + nu_p_long(r, pl));
  return best;
}

std::set<Int> s_k_primes(const Series& f, long k) {
  if (k < 0 || k > f.order())
    throw std::invalid_argument("s_k_primes: bad k");
  std::set<Int> out;
  for (long i = 1; i <= k; ++i) {
    const Int d = denom(f.coeff(static_cast<int>(i)));
    if (d == 1) continue;
    const FactoredInt factors = FactoredInt::from_integer(d);
    for (const auto& [p, e] : factors.factors()) {
      (void)e;
      out.insert(p);
    }
  }
  return out;
}

}  // namespace jorder
