#ifndef JORDER_DSERIES_HPP
#define JORDER_DSERIES_HPP

#include <optional>
#include <set>

#include "jorder/rational.hpp"
#include "jorder/series.hpp"

namespace jorder {

/// D-series data of f at a fixed prime p. alpha is the first index whose
/// coefficient has negative p-valuation, beta its depth; both absent when
/// the inspected range is p-integral. strict records whether
/// nu_p(a_j) > -beta * floor(j/alpha) for every j > alpha with a_j != 0.
struct DSeriesType {
  std::optional<long> alpha;
  std::optional<long> beta;
  bool strict = false;

  friend bool operator==(const DSeriesType&, const DSeriesType&) = default;
};

/// Smallest positive integer e with f^e integral mod y^{k+1}, as a product
/// of coefficient denominators: each step raises the running power by the
/// denominator of its first non-integral coefficient. Requires f(0) = +-1.
FactoredInt e_k_exact(const Series& f, long k);

/// Certifies e_k minimality independently of the product algorithm:
/// f^e integral mod y^{k+1} and f^{e/q} non-integral for every prime q | e.
bool minimality_witness(const Series& f, const FactoredInt& e, long k);

DSeriesType classify_dseries(const Series& f, const Int& p, long k);

/// max{ beta*r + nu_p(r) : 0 <= r <= floor(k/alpha) }, the r = 0 term
/// contributing 0.
long strict_e_formula(long alpha, long beta, long k, const Int& p);

/// Primes dividing the denominators of a_1..a_k.
std::set<Int> s_k_primes(const Series& f, long k);

}  // namespace jorder

#endif  // JORDER_DSERIES_HPP
