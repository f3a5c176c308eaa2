#ifndef JORDER_KO_RING_HPP
#define JORDER_KO_RING_HPP

#include <string>
#include <vector>

#include "jorder/rational.hpp"
#include "jorder/series.hpp"

namespace jorder {

/// Rank d_m of the reduced KO-ring of CP^m in the y-basis:
/// t for m = 2t, 2t+1 for m = 4t+1 and m = 4t+3.
long ko_rank(long m);

/// m_1 y + m_2 y^2 + ... + m_{d_m} y^{d_m} in the reduced KO-ring of CP^m.
/// Construction normalizes per the ring relations: for m = 4t+1 the top
/// coefficient lives in Z/2 and is stored reduced to {0, 1}.
class KOElement {
 public:
  KOElement(long m, std::vector<Int> coeffs);  // shorter lists zero-padded
  static KOElement zero(long m);
  static KOElement y_power(long m, long k);  // y^k, 1 <= k <= d_m

  long m() const { return m_; }
  long t() const;  // m/2, even m only
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  long top_index() const;   // largest k with m_k != 0; 0 for the zero element
  Series to_series() const;  // even m; truncation order t

  friend KOElement operator+(const KOElement& a, const KOElement& b);
  friend bool operator==(const KOElement&, const KOElement&) = default;

  std::string str() const;

 private:
  long m_;
  std::vector<Int> coeffs_;
};

/// Change-of-basis coefficient b_{r,s} between powers of the Hopf class
/// xi + conj(xi) - 2 and the line-bundle power basis, by the closed form.
Int brs(long r, long s);

/// Row (d_{n,1}, ..., d_{n,n}) from the downward recurrence grounded at
/// d_{n,n} = 1. Rows are memoized; d_{n,1} = n^2 always.
std::vector<Int> dns(long n);

/// psi^n(y) = sum_j d_{n,j} y^j truncated at y^{t+1}, m = 2t.
Series adams_generator(long n, long m);

/// psi^n of a series in y, by substituting psi^n(y).
Series adams_element(long n, const Series& x);
Series adams_element(long n, const KOElement& x);

/// psi^n(y^k) via the d_{kn,*} recurrence instead of substitution; kept as
/// an independent route for cross-checking.
Series adams_element_recurrence(long n, const KOElement& x);

/// Virtual-dimension-zero part of the realified n-th line-bundle power:
/// coefficient vector (d_{n,1}, ..., d_{n,n}) cut down to the ring of CP^m.
KOElement realify_line_bundle(long n, long m);

struct OddReduction {
  KOElement element;  // even m' = m - 1
  bool lcm2;          // the final order is lcm'd with 2
};

/// Reduction of an odd-m element to the even case:
/// m = 4t+3 keeps all coefficients; m = 4t+1 drops the (Z/2) top coefficient
/// and records whether it was 1.
OddReduction reduce_odd_m(const KOElement& x);

/// psi^p(1+u) / (1+u) for u(0) = 0; truncation order of u fixes m = 2T.
Series adams_quotient(const Series& u, long p);

}  // namespace jorder

#endif  // JORDER_KO_RING_HPP
