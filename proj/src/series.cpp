#include "jorder/series.hpp"

#include <sstream>
#include <stdexcept>

namespace jorder {

namespace {

void require_same_order(const Series& f, const Series& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("series: mismatched truncation orders");
}

}  // namespace

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  c_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

Series::Series(int order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (order < 0 || c_.size() != static_cast<size_t>(order) + 1)
    throw std::invalid_argument("series: coefficient count must be order+1");
}

Series Series::one(int order) { return constant(order, Rat(1)); }

Series Series::constant(int order, const Rat& c) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::generator(int order) {
  Series s(order);
  if (order < 1) throw std::invalid_argument("series: y needs order >= 1");
  s.c_[1] = 1;
  return s;
}

bool Series::is_zero() const {
  for (const Rat& a : c_)
    if (sgn(a) != 0) return false;
  return true;
}

Series Series::operator-() const {
  Series out(order());
  for (size_t k = 0; k < c_.size(); ++k) out.c_[k] = -c_[k];
  return out;
}

Series operator+(const Series& f, const Series& g) {
  require_same_order(f, g);
  Series out(f.order());
  for (size_t k = 0; k < f.c_.size(); ++k) out.c_[k] = f.c_[k] + g.c_[k];
  return out;
}

Series operator-(const Series& f, const Series& g) {
  require_same_order(f, g);
  Series out(f.order());
  for (size_t k = 0; k < f.c_.size(); ++k) out.c_[k] = f.c_[k] - g.c_[k];
  return out;
}

Series operator*(const Series& f, const Series& g) {
  require_same_order(f, g);
  const size_t n = f.c_.size();
  Series out(f.order());
  for (size_t i = 0; i < n; ++i) {
    if (sgn(f.c_[i]) == 0) continue;
    for (size_t j = 0; j + i < n; ++j) {
      if (sgn(g.c_[j]) == 0) continue;
      out.c_[i + j] += f.c_[i] * g.c_[j];
    }
  }
  return out;
}

Series operator*(const Rat& c, const Series& f) {
  Series out(f.order());
  for (size_t k = 0; k < f.c_.size(); ++k) out.c_[k] = c * f.c_[k];
  return out;
}

Series Series::inverse() const {
  if (sgn(c_[0]) == 0)
    throw std::invalid_argument("series: inverse of a non-unit");
  Series out(order());
  const Rat lead = 1 / c_[0];
  out.c_[0] = lead;
  for (size_t k = 1; k < c_.size(); ++k) {
    Rat acc(0);
    for (size_t i = 1; i <= k; ++i) acc += c_[i] * out.c_[k - i];
    out.c_[k] = -acc * lead;
  }
  return out;
}

Series Series::pow(const Int& e) const {
  if (sgn(e) < 0) {
    if (sgn(c_[0]) == 0)
      throw std::invalid_argument("series: negative power of a non-unit");
    return inverse().pow(Int(-e));
  }
  Series result = one(order());
  Series base = *this;
  Int k = e;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = result * base;
    k >>= 1;
    if (sgn(k) > 0) base = base * base;
  }
  return result;
}

Series Series::sqrt_unit() const {
  if (c_[0] != 1)
    throw std::invalid_argument("series: sqrt_unit needs constant term 1");
  Series out(order());
  out.c_[0] = 1;
  for (size_t k = 1; k < c_.size(); ++k) {
    Rat acc(0);
    for (size_t i = 1; i < k; ++i) acc += out.c_[i] * out.c_[k - i];
    out.c_[k] = (c_[k] - acc) / 2;
  }
  return out;
}

Series Series::compose(const Series& g) const {
  require_same_order(*this, g);
  if (sgn(g.c_[0]) != 0)
    throw std::invalid_argument("series: compose needs g(0) = 0");
  // Horner over the series ring
  Series result = constant(order(), c_.back());
  for (int k = order() - 1; k >= 0; --k) {
    result = result * g;
    result.c_[0] += c_[static_cast<size_t>(k)];
  }
  return result;
}

Series Series::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw std::invalid_argument("series: bad truncation");
  Series out(new_order);
  for (int k = 0; k <= new_order; ++k) out.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
  return out;
}

bool Series::p_integral(const Int& p) const {
  for (const Rat& a : c_)
    if (mpz_divisible_p(a.get_den_mpz_t(), p.get_mpz_t())) return false;
  return true;
}

bool Series::integral() const {
  for (const Rat& a : c_)
    if (a.get_den() != 1) return false;
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].get_str();
    if (k == 1) os << "*y";
    if (k > 1) os << "*y^" << k;
  }
  if (first) os << "0";
  os << " (mod y^" << c_.size() << ")";
  return os.str();
}

}  // namespace jorder
