#ifndef JORDER_BOTT_HPP
#define JORDER_BOTT_HPP

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "jorder/ko_ring.hpp"
#include "jorder/series.hpp"

namespace jorder {

/// Bott exponential series on the KO-ring of CP^m (even m throughout; odd m
/// is reduced before reaching this module). Series are memoized per
/// (p, k, m); the table is append-only and safe to share across threads.
class ThetaCache {
 public:
  static ThetaCache& instance();

  /// theta_p(y) = (psi^p(y) / (p^2 y))^{1/2}, constant term 1.
  Series theta_generator(long p, long m);

  /// theta_p(y^k) for 1 <= k <= t, via the A*B factorization grounded at
  /// theta_generator; builds all lower powers on the way.
  Series theta_power(long p, long k, long m);

  /// theta_p applied to an element: the exponential law turns the sum into
  /// a product of theta-powers.
  Series theta_element(long p, const KOElement& x);

  /// (alpha_k, N_k) with theta_p(y^k) = alpha_k / theta_p(y)^{N_k}; the
  /// identity is asserted on every computation. N_k does not depend on p.
  std::pair<Series, Int> alpha_N(long k, long p, long m);

  /// N_k alone: N_2 = d_{2,1} - 1, then
  /// N_k = (d_{k,1} - 1) - N_2 d_{k,2} - ... - N_{k-1} d_{k,k-1}.
  /// Observed (not relied upon): the values match (-1)^k C(2k-1, k-1)
  /// for k = 2..6.
  Int n_weight(long k);

  void clear();

  /// Whole-file text snapshot of the theta-series table (versioned header,
  /// written to a temp file and renamed). Returns false on I/O failure or
  /// an unrecognized snapshot.
  bool save_snapshot(const std::string& path) const;
  bool load_snapshot(const std::string& path);

 private:
  ThetaCache() = default;
  Series theta_power_locked(long p, long k, long m);
  Series a_series_locked(long p, long n, long m);
  Series alpha_locked(long k, long p, long m);
  Int n_weight_locked(long k);

  mutable std::recursive_mutex mu_;
  std::map<std::tuple<long, long, long>, Series> theta_;  // (p, m, k)
  std::map<std::tuple<long, long, long>, Series> alpha_;  // (p, m, k)
  std::map<long, Int> n_;
};

// Convenience wrappers over the shared instance.
Series theta_generator(long p, long m);
Series theta_power(long p, long k, long m);
Series theta_element(long p, const KOElement& x);
std::pair<Series, Int> alpha_N(long k, long p, long m);

}  // namespace jorder

#endif  // JORDER_BOTT_HPP
