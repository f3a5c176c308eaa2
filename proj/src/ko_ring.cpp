#include "jorder/ko_ring.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace jorder {

long ko_rank(long m) {
  if (m < 0) throw std::invalid_argument("ko_rank: m must be >= 0");
  if (m % 2 == 0) return m / 2;
  return m % 4 == 1 ? 2 * ((m - 1) / 4) + 1 : 2 * ((m - 3) / 4) + 1;
}

KOElement::KOElement(long m, std::vector<Int> coeffs)
    : m_(m), coeffs_(std::move(coeffs)) {
  if (m < 0) throw std::invalid_argument("KOElement: m must be >= 0");
  const auto rank = static_cast<size_t>(ko_rank(m));
  if (coeffs_.size() > rank) {
    std::ostringstream os;
    os << "KOElement: " << coeffs_.size() << " coefficients, but y^"
       << rank + 1 << " = 0 in the KO-ring of CP^" << m << " (d_m = " << rank
       << ")";
    throw std::invalid_argument(os.str());
  }
  coeffs_.resize(rank, Int(0));
  if (m % 4 == 1 && rank > 0) {
    // 2 y^{2t+1} = 0: the top coefficient lives in Z/2
    Int& top = coeffs_.back();
    top = ((top % 2) + 2) % 2;
  }
}

KOElement KOElement::zero(long m) { return KOElement(m, {}); }

KOElement KOElement::y_power(long m, long k) {
  if (k < 1 || k > ko_rank(m))
    throw std::invalid_argument("y_power: k out of range 1..d_m");
  std::vector<Int> c(static_cast<size_t>(k), Int(0));
  c.back() = 1;
  return KOElement(m, std::move(c));
}

long KOElement::t() const {
  if (m_ % 2 != 0) throw std::logic_error("KOElement: t() needs even m");
  return m_ / 2;
}

bool KOElement::is_zero() const {
  for (const Int& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

long KOElement::top_index() const {
  for (size_t k = coeffs_.size(); k > 0; --k)
    if (sgn(coeffs_[k - 1]) != 0) return static_cast<long>(k);
  return 0;
}

Series KOElement::to_series() const {
  const long T = t();
  Series s(static_cast<int>(T));
  for (size_t k = 0; k < coeffs_.size(); ++k)
    s.set_coeff(static_cast<int>(k) + 1, Rat(coeffs_[k]));
  return s;
}

KOElement operator+(const KOElement& a, const KOElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("KOElement: mixed m");
  std::vector<Int> c(a.coeffs_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return KOElement(a.m_, std::move(c));
}

std::string KOElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    Int c = coeffs_[k];
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (c != 1) os << c.get_str() << "*";
    os << "y";
    if (k > 0) os << "^" << k + 1;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Memo table for the b_{r,s} / d_{n,s} systems; append-only under a lock.
class CoeffTable {
 public:
  static CoeffTable& instance() {
    static CoeffTable table;
    return table;
  }

  Int brs(long r, long s) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = brs_.find({r, s}); it != brs_.end()) return it->second;
    }
    Int value = brs_closed_form(r, s);
    std::lock_guard<std::mutex> lock(mu_);
    return brs_.emplace(std::make_pair(r, s), std::move(value)).first->second;
  }

  std::vector<Int> dns(long n) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = dns_.find(n); it != dns_.end()) return it->second;
    }
    // downward recurrence from d_{n,n} = 1
    std::vector<Int> row(static_cast<size_t>(n), Int(0));
    row[static_cast<size_t>(n) - 1] = 1;
    for (long s = n - 1; s >= 1; --s) {
      Int acc(0);
      for (long u = s + 1; u <= n; ++u)
        acc += row[static_cast<size_t>(u) - 1] * brs(u, s);
      row[static_cast<size_t>(s) - 1] = -acc;
    }
    std::lock_guard<std::mutex> lock(mu_);
    return dns_.emplace(n, std::move(row)).first->second;
  }

 private:
  static Int brs_closed_form(long r, long s) {
    auto binom = [](long n, long k) {
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(k));
      return b;
    };
    auto neg2_pow = [](long e) {
      Int v;
      mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
      return e % 2 == 0 ? v : Int(-v);
    };
    Int total = neg2_pow(r - s) * binom(r, s);
    for (long j = s + 2; j <= r; j += 2)  // j > s with j - s even
      total += neg2_pow(r - j) * binom(r, j) * binom(j, (j - s) / 2);
    return total;
  }

  std::mutex mu_;
  std::map<std::pair<long, long>, Int> brs_;
  std::map<long, std::vector<Int>> dns_;
};

void require_even_m(long m, const char* who) {
  if (m < 2 || m % 2 != 0) {
    std::ostringstream os;
    os << who << ": needs even m >= 2, got " << m;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

Int brs(long r, long s) {
  if (s < 0 || s > r) throw std::invalid_argument("brs: needs 0 <= s <= r");
  return CoeffTable::instance().brs(r, s);
}

std::vector<Int> dns(long n) {
  if (n < 1) throw std::invalid_argument("dns: n must be >= 1");
  return CoeffTable::instance().dns(n);
}

Series adams_generator(long n, long m) {
  if (n < 1) throw std::invalid_argument("adams_generator: n must be >= 1");
  require_even_m(m, "adams_generator");
  const long T = m / 2;
  const std::vector<Int> row = dns(n);
  Series s(static_cast<int>(T));
  for (long j = 1; j <= std::min(n, T); ++j)
    s.set_coeff(static_cast<int>(j), Rat(row[static_cast<size_t>(j) - 1]));
  return s;
}

Series adams_element(long n, const Series& x) {
  if (n < 1) throw std::invalid_argument("adams_element: n must be >= 1");
  if (n == 1) return x;
  const long m = 2L * x.order();
  return x.compose(adams_generator(n, m));
}

Series adams_element(long n, const KOElement& x) {
  return adams_element(n, x.to_series());
}

Series adams_element_recurrence(long n, const KOElement& x) {
  if (n < 1) throw std::invalid_argument("adams_element: n must be >= 1");
  const long T = x.t();
  // psi^n(y^k) = sum_j d_{kn,j} y^j - sum_{l<k} d_{k,l} psi^n(y^l)
  std::vector<Series> psi;
  psi.reserve(static_cast<size_t>(T));
  for (long k = 1; k <= T; ++k) {
    const std::vector<Int> top = dns(k * n);
    Series s(static_cast<int>(T));
    for (long j = 1; j <= std::min(k * n, T); ++j)
      s.set_coeff(static_cast<int>(j), Rat(top[static_cast<size_t>(j) - 1]));
    if (k >= 2) {
      const std::vector<Int> rowk = dns(k);
      for (long l = 1; l < k; ++l)
        s = s - Rat(rowk[static_cast<size_t>(l) - 1]) * psi[static_cast<size_t>(l) - 1];
    }
    psi.push_back(std::move(s));
  }
  Series out(static_cast<int>(T));
  for (size_t k = 0; k < x.coeffs().size(); ++k)
    if (sgn(x.coeffs()[k]) != 0) out = out + Rat(x.coeffs()[k]) * psi[k];
  return out;
}

KOElement realify_line_bundle(long n, long m) {
  if (n < 1) throw std::invalid_argument("realify_line_bundle: n must be >= 1");
  std::vector<Int> row = dns(n);
  const auto rank = static_cast<size_t>(ko_rank(m));
  if (row.size() > rank) row.resize(rank);
  return KOElement(m, std::move(row));
}

OddReduction reduce_odd_m(const KOElement& x) {
  const long m = x.m();
  if (m % 2 == 0)
    throw std::invalid_argument("reduce_odd_m: element already has even m");
  std::vector<Int> c = x.coeffs();
  if (m % 4 == 3) return {KOElement(m - 1, std::move(c)), false};
  // m = 4t+1: the top Z/2 coefficient decides the lcm-with-2 flag
  const bool lcm2 = !c.empty() && c.back() == 1;
  c.pop_back();
  return {KOElement(m - 1, std::move(c)), lcm2};
}

Series adams_quotient(const Series& u, long p) {
  if (sgn(u.coeff(0)) != 0)
    throw std::invalid_argument("adams_quotient: u(0) must be 0");
  const long m = 2L * u.order();
  const Series one = Series::one(u.order());
  return (one + u.compose(adams_generator(p, m))) * (one + u).inverse();
}

}  // namespace jorder
