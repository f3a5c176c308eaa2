#include "jorder/bott.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jorder {

namespace {

void require_theta_domain(long p, long m) {
  if (!is_prime(Int(p)))
    throw std::invalid_argument("theta: p must be prime");
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("theta: needs even m >= 2 (reduce odd m first)");
}

}  // namespace

ThetaCache& ThetaCache::instance() {
  static ThetaCache cache;
  return cache;
}

Series ThetaCache::theta_generator(long p, long m) {
  return theta_power(p, 1, m);
}

Series ThetaCache::theta_power(long p, long k, long m) {
  require_theta_domain(p, m);
  if (k < 1 || k > m / 2)
    throw std::invalid_argument("theta_power: needs 1 <= k <= t = m/2");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return theta_power_locked(p, k, m);
}

Series ThetaCache::theta_power_locked(long p, long k, long m) {
  const auto key = std::make_tuple(p, m, k);
  if (auto it = theta_.find(key); it != theta_.end()) return it->second;

  const long T = m / 2;
  Series result = Series::one(static_cast<int>(T));
  if (k == 1) {
    // theta_p(y) = (psi^p(y) / (p^2 y))^{1/2}; dividing by y shifts the
    // d_{p,*} row down one degree, so the row is read past the ring
    // truncation up to j = t+1.
    const std::vector<Int> row = dns(p);
    const Int p2 = Int(p) * p;
    Series q(static_cast<int>(T));
    for (long j = 1; j <= std::min(p, T + 1); ++j)
      q.set_coeff(static_cast<int>(j) - 1,
                  make_rat(row[static_cast<size_t>(j) - 1], p2));
    if (q.coeff(0) != 1)
      throw std::logic_error("theta: psi^p(y)/(p^2 y) lost its unit constant");
    result = q.sqrt_unit();
  } else {
    const std::vector<Int> row = dns(k);
    Series b_acc = theta_power_locked(p, 1, m).pow(Int(row[0] - 1));
    for (long j = 2; j < k; ++j)
      b_acc = b_acc * theta_power_locked(p, j, m)
                          .pow(row[static_cast<size_t>(j) - 1]);
    result = a_series_locked(p, k, m) * b_acc.inverse();
  }
  theta_.emplace(key, result);
  return result;
}

// A(p;n,m) = (psi^p(g)/g)^{1/2} with g = d_{n,1} + ... + d_{n,n} y^{n-1}.
Series ThetaCache::a_series_locked(long p, long n, long m) {
  const long T = m / 2;
  const std::vector<Int> row = dns(n);
  Series g(static_cast<int>(T));
  for (long j = 1; j <= n && j - 1 <= T; ++j)
    g.set_coeff(static_cast<int>(j) - 1, Rat(row[static_cast<size_t>(j) - 1]));
  const Series num = g.compose(adams_generator(p, m));
  const Series quotient = num * g.inverse();
  if (quotient.coeff(0) != 1)
    throw std::logic_error("theta: A-series quotient lost its unit constant");
  return quotient.sqrt_unit();
}

Series ThetaCache::theta_element(long p, const KOElement& x) {
  const long m = x.m();
  require_theta_domain(p, m);
  const long T = x.t();
  Series result = Series::one(static_cast<int>(T));
  std::lock_guard<std::recursive_mutex> lock(mu_);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    const Int& mk = x.coeffs()[i];
    if (sgn(mk) == 0) continue;
    result = result * theta_power_locked(p, static_cast<long>(i) + 1, m).pow(mk);
  }
  return result;
}

std::pair<Series, Int> ThetaCache::alpha_N(long k, long p, long m) {
  require_theta_domain(p, m);
  if (k < 2 || k > m / 2)
    throw std::invalid_argument("alpha_N: needs 2 <= k <= t = m/2");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  Series alpha = alpha_locked(k, p, m);
  Int nk = n_weight_locked(k);
  // decomposition check: theta_p(y^k) * theta_p(y)^{N_k} = alpha_k
  const Series lhs =
      theta_power_locked(p, k, m) * theta_power_locked(p, 1, m).pow(nk);
  if (!(lhs == alpha))
    throw std::logic_error("alpha_N: decomposition identity failed");
  return {std::move(alpha), std::move(nk)};
}

Series ThetaCache::alpha_locked(long k, long p, long m) {
  const auto key = std::make_tuple(p, m, k);
  if (auto it = alpha_.find(key); it != alpha_.end()) return it->second;
  Series result = a_series_locked(p, k, m);
  if (k > 2) {
    const std::vector<Int> row = dns(k);
    for (long j = 2; j < k; ++j)
      result = result * alpha_locked(j, p, m)
                            .pow(Int(-row[static_cast<size_t>(j) - 1]));
  }
  alpha_.emplace(key, result);
  return result;
}

Int ThetaCache::n_weight(long k) {
  if (k < 2) throw std::invalid_argument("n_weight: k must be >= 2");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return n_weight_locked(k);
}

Int ThetaCache::n_weight_locked(long k) {
  if (auto it = n_.find(k); it != n_.end()) return it->second;
  const std::vector<Int> row = dns(k);
  Int nk = row[0] - 1;
  for (long j = 2; j < k; ++j)
    nk -= n_weight_locked(j) * row[static_cast<size_t>(j) - 1];
  n_.emplace(k, nk);
  return nk;
}

void ThetaCache::clear() {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  theta_.clear();
  alpha_.clear();
  n_.clear();
}

namespace {
constexpr const char* kSnapshotHeader = "jorder-theta-cache 1";
}

bool ThetaCache::save_snapshot(const std::string& path) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) return false;
    os << kSnapshotHeader << "\n";
    for (const auto& [key, series] : theta_) {
      const auto& [p, m, k] = key;
      os << "theta " << p << " " << m << " " << k << " " << series.order();
      for (int j = 0; j <= series.order(); ++j)
        os << " " << series.coeff(j).get_str();
      os << "\n";
    }
    if (!os) return false;
  }
  return std::rename(tmp.c_str(), path.c_str()) == 0;
}

bool ThetaCache::load_snapshot(const std::string& path) {
  std::ifstream is(path);
  if (!is) return false;
  std::string header;
  if (!std::getline(is, header) || header != kSnapshotHeader) return false;
  std::map<std::tuple<long, long, long>, Series> loaded;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    long p = 0, m = 0, k = 0;
    int order = -1;
    if (!(ls >> tag >> p >> m >> k >> order) || tag != "theta" || order < 0)
      return false;
    Series s(order);
    for (int j = 0; j <= order; ++j) {
      std::string coeff;
      if (!(ls >> coeff)) return false;
      Rat q;
      if (q.set_str(coeff, 10) != 0) return false;
      q.canonicalize();
      s.set_coeff(j, q);
    }
    loaded.emplace(std::make_tuple(p, m, k), std::move(s));
  }
  std::lock_guard<std::recursive_mutex> lock(mu_);
  for (auto& [key, series] : loaded) theta_.insert_or_assign(key, std::move(series));
  return true;
}

Series theta_generator(long p, long m) {
  return ThetaCache::instance().theta_generator(p, m);
}

Series theta_power(long p, long k, long m) {
  return ThetaCache::instance().theta_power(p, k, m);
}

Series theta_element(long p, const KOElement& x) {
  return ThetaCache::instance().theta_element(p, x);
}

std::pair<Series, Int> alpha_N(long k, long p, long m) {
  return ThetaCache::instance().alpha_N(k, p, m);
}

}  // namespace jorder
