#ifndef JORDER_JORDER_HPP
#define JORDER_JORDER_HPP

#include <optional>
#include <string>

#include "jorder/ko_ring.hpp"
#include "jorder/rational.hpp"

namespace jorder {

struct JOrderResult {
  FactoredInt order;
  std::string method;  // "exact" | "closed-form"
  std::optional<KOElement> element;
  bool lcm2_applied = false;

  long exponent_of(const Int& p) const { return order.exponent_of(p); }
};

/// Exact J-order of an element, any m >= 1. Odd m reduces to the even case
/// first; the order is then the product over primes p <= m+1 of
/// p^{nu_p(e_t(theta_p(x)))}. The zero element has order 1.
JOrderResult j_order_exact(const KOElement& x);

/// nu_p of the J-order of the generator y of CP^m (even m):
/// max{ s + nu_p(s) : 0 <= s <= floor(m/(p-1)) }.
long nu_generator_order(const Int& p, long m);

enum class FormulaStatus { proven, conjectural };

struct ClosedFormExponent {
  long exponent = 0;
  FormulaStatus status = FormulaStatus::proven;
};

/// nu_p of the J-order of y^k (even m = 2t, 1 <= k <= t) by the closed form
/// max{ r - floor(2(k-1)/(p-1)) + nu_p(r) :
///      floor(2k/(p-1)) <= r <= floor(m/(p-1)) }.
/// Proven for k <= 4, for p in {2, 3}, and for k in {5, 6} with p > 5;
/// conjectural otherwise.
ClosedFormExponent generator_power_closed_form(const Int& p, long m, long k);

struct GeneratorPowerOrder {
  JOrderResult result;
  FormulaStatus status = FormulaStatus::proven;  // conjectural if any prime is
};

/// The closed form combined over all primes p <= m+1.
GeneratorPowerOrder generator_power_order_closed_form(long m, long k);

/// J-order of the n-th power of the Hopf line bundle over CP^m (even m):
/// per prime, max{ r + nu_p(r) : 0 <= r <= floor(m/(p^{nu_p(n)} (p-1))) }.
JOrderResult line_bundle_order(long n, long m);

/// The same order through the exact pipeline on the realified element.
JOrderResult line_bundle_order_exact(long n, long m);

struct BoundsResult {
  Int p = 2;
  long nu_b_gen = 0;                          // nu_p of the generator order
  Valuation nu_N = Valuation::neg_infinity();  // -inf iff N = 0
  long nu_E = 0;
  bool degenerate = false;  // N = 0: no finite lower bound, upper unbounded
  long lower = 0;           // valid iff !degenerate
  long upper = 0;           // valid iff !degenerate
};

/// L <= nu_p(J-order of x) <= U with L = nu_b_gen - nu_p(N) - nu_p(E) and
/// U = max(nu_b_gen - nu_p(N), nu_p(E)), where N = m_1 - sum m_k N_k and
/// nu_p(E) = max_k nu_p(e_t(alpha_k^{m_k})). Even m.
BoundsResult bounds_LU(const KOElement& x, const Int& p);

/// For p greater than the top nonzero index s:
/// nu_p(J-order) = max(nu_b_gen - nu_p(N), 0). Rejects p <= s and the
/// degenerate N = 0 case.
long closed_form_large_p(const KOElement& x, const Int& p);

/// Minimal n for which the Stiefel fibration over S^{2n-1} with fibre
/// dropping m+1 complex dimensions admits a cross-section: the J-order
/// of the generator y of CP^m.
FactoredInt stiefel_min_n(long m);

}  // namespace jorder

#endif  // JORDER_JORDER_HPP
