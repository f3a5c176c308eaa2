#include "jorder/jorder.hpp"

#include <algorithm>
#include <stdexcept>

#include "jorder/bott.hpp"
#include "jorder/dseries.hpp"

namespace jorder {

namespace {

void require_even_m(long m, const char* who) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": needs even m >= 2");
}

FactoredInt exact_order_even(const KOElement& x) {
  const long t = x.t();
  FactoredInt order;
  if (x.is_zero() || t == 0) return order;  // the identity coset
  for (const Int& p : primes_up_to(x.m() + 1)) {
    const Series beta = theta_element(p.get_si(), x);
    const FactoredInt e = e_k_exact(beta, t);
    // theta_p series are p-local, so e_t must be a pure p-power
    for (const auto& [q, exp] : e.factors()) {
      (void)exp;
      if (q != p)
        throw std::logic_error("j_order: e_t at p picked up a foreign prime");
    }
    const long exp = e.exponent_of(p);
    if (exp > 0) order = order.times(FactoredInt::prime_power(p, exp));
  }
  return order;
}

}  // namespace

JOrderResult j_order_exact(const KOElement& x) {
  if (x.m() < 1) throw std::invalid_argument("j_order_exact: needs m >= 1");
  JOrderResult result;
  result.method = "exact";
  result.element = x;
  if (x.m() % 2 == 0) {
    result.order = exact_order_even(x);
    return result;
  }
  const OddReduction reduced = reduce_odd_m(x);
  result.order = exact_order_even(reduced.element);
  if (reduced.lcm2) {
    result.order = result.order.lcm(FactoredInt::prime_power(2, 1));
    result.lcm2_applied = true;
  }
  return result;
}

long nu_generator_order(const Int& p, long m) {
  if (!is_prime(p)) throw std::invalid_argument("nu_generator_order: p prime");
  if (m < 1) throw std::invalid_argument("nu_generator_order: m >= 1");
  if (p - 1 > m) return 0;
  const long pl = p.get_si();
  long best = 0;  // s = 0 contributes 0
  for (long s = 1; s <= m / (pl - 1); ++s)
    best = std::max(best, s + nu_p_long(s, pl));
  return best;
}

ClosedFormExponent generator_power_closed_form(const Int& p, long m, long k) {
  if (!is_prime(p))
    throw std::invalid_argument("generator_power_closed_form: p prime");
  require_even_m(m, "generator_power_closed_form");
  if (k < 1 || k > m / 2)
    throw std::invalid_argument("generator_power_closed_form: 1 <= k <= t");
  ClosedFormExponent out;
  const bool k56 = (k == 5 || k == 6);
  out.status = (k <= 4 || p == 2 || p == 3 || (k56 && p > 5))
                   ? FormulaStatus::proven
                   : FormulaStatus::conjectural;
  if (p - 1 > m) return out;  // the range is {0}
  const long pl = p.get_si();
  const long lo = 2 * k / (pl - 1);
  const long hi = m / (pl - 1);
  const long offset = 2 * (k - 1) / (pl - 1);
  long best = 0;
  bool seen = false;
  for (long r = lo; r <= hi; ++r) {
    const long val = r == 0 ? 0 : r - offset + nu_p_long(r, pl);
    best = seen ? std::max(best, val) : val;
    seen = true;
  }
  out.exponent = seen ? best : 0;  // empty range contributes nothing
  return out;
}

GeneratorPowerOrder generator_power_order_closed_form(long m, long k) {
  GeneratorPowerOrder out;
  out.result.method = "closed-form";
  out.result.element = KOElement::y_power(m, k);
  for (const Int& p : primes_up_to(m + 1)) {
    const ClosedFormExponent cf = generator_power_closed_form(p, m, k);
    if (cf.status == FormulaStatus::conjectural)
      out.status = FormulaStatus::conjectural;
    if (cf.exponent > 0)
      out.result.order =
          out.result.order.times(FactoredInt::prime_power(p, cf.exponent));
  }
  return out;
}

JOrderResult line_bundle_order(long n, long m) {
  if (n < 1) throw std::invalid_argument("line_bundle_order: n must be >= 1");
  require_even_m(m, "line_bundle_order");
  JOrderResult result;
  result.method = "closed-form";
  for (const Int& p : primes_up_to(m + 1)) {
    const long pl = p.get_si();
    const long d = nu_p(Int(n), p).value();
    Int arg;
    mpz_ui_pow_ui(arg.get_mpz_t(), static_cast<unsigned long>(pl),
                  static_cast<unsigned long>(d));
    arg *= pl - 1;
    long best = 0;
    if (arg <= m) {
      const long hi = m / arg.get_si();
      for (long r = 1; r <= hi; ++r)
        best = std::max(best, r + nu_p_long(r, pl));
    }
    if (best > 0)
      result.order = result.order.times(FactoredInt::prime_power(p, best));
  }
  return result;
}

JOrderResult line_bundle_order_exact(long n, long m) {
  if (n < 1) throw std::invalid_argument("line_bundle_order: n must be >= 1");
  return j_order_exact(realify_line_bundle(n, m));
}

BoundsResult bounds_LU(const KOElement& x, const Int& p) {
  require_even_m(x.m(), "bounds_LU");
  if (!is_prime(p)) throw std::invalid_argument("bounds_LU: p must be prime");
  const long t = x.t();
  const long m = x.m();
  BoundsResult out;
  out.p = p;
  out.nu_b_gen = nu_generator_order(p, m);

  Int n_value = x.coeffs().empty() ? Int(0) : x.coeffs()[0];
  auto& theta = ThetaCache::instance();
  for (long k = 2; k <= t; ++k)
    n_value -= x.coeffs()[static_cast<size_t>(k) - 1] * theta.n_weight(k);

  for (long k = 2; k <= t; ++k) {
    const Int& mk = x.coeffs()[static_cast<size_t>(k) - 1];
    if (sgn(mk) == 0) continue;  // e_t(alpha^0) = 1
    const Series alpha = theta.alpha_N(k, p.get_si(), m).first;
    const FactoredInt e = e_k_exact(alpha.pow(mk), t);
    out.nu_E = std::max(out.nu_E, e.exponent_of(p));
  }

  if (sgn(n_value) == 0) {
    out.degenerate = true;  // nu_p(N) = -inf: the bounds carry no content
    return out;
  }
  out.nu_N = nu_p(n_value, p);
  out.lower = out.nu_b_gen - out.nu_N.value() - out.nu_E;
  out.upper = std::max(out.nu_b_gen - out.nu_N.value(), out.nu_E);
  return out;
}

long closed_form_large_p(const KOElement& x, const Int& p) {
  require_even_m(x.m(), "closed_form_large_p");
  if (!is_prime(p))
    throw std::invalid_argument("closed_form_large_p: p must be prime");
  const long s = x.top_index();
  if (s == 0)
    throw std::invalid_argument("closed_form_large_p: zero element");
  if (p <= s)
    throw std::invalid_argument(
        "closed_form_large_p: needs p > s (the top nonzero index)");
  Int n_value = x.coeffs()[0];
  auto& theta = ThetaCache::instance();
  for (long k = 2; k <= x.t(); ++k)
    n_value -= x.coeffs()[static_cast<size_t>(k) - 1] * theta.n_weight(k);
  if (sgn(n_value) == 0)
    throw std::domain_error("closed_form_large_p: degenerate N = 0");
  const long v = nu_generator_order(p, x.m()) - nu_p(n_value, p).value();
  return std::max(v, 0L);
}

FactoredInt stiefel_min_n(long m) {
  if (m < 1) throw std::invalid_argument("stiefel_min_n: m must be >= 1");
  return j_order_exact(KOElement(m, {Int(1)})).order;
}

}  // namespace jorder
