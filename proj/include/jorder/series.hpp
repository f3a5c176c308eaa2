#ifndef JORDER_SERIES_HPP
#define JORDER_SERIES_HPP

#include <string>
#include <vector>

#include "jorder/rational.hpp"

namespace jorder {

/// Formal power series over Q truncated at y^{T+1}: coefficients a_0..a_T.
/// Values are immutable in spirit; every operation returns a new series.
/// Binary operations require equal truncation orders (callers truncate
/// first), anything else is a usage error.
class Series {
 public:
  explicit Series(int order);
  Series(int order, std::vector<Rat> coeffs);

  static Series one(int order);
  static Series constant(int order, const Rat& c);
  static Series generator(int order);  // the series y

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  void set_coeff(int k, Rat v) { c_[static_cast<size_t>(k)] = std::move(v); }
  bool is_zero() const;

  Series operator-() const;
  friend Series operator+(const Series& f, const Series& g);
  friend Series operator-(const Series& f, const Series& g);
  friend Series operator*(const Series& f, const Series& g);
  friend Series operator*(const Rat& c, const Series& f);
  friend Series operator*(const Series& f, const Rat& c) { return c * f; }
  friend bool operator==(const Series& f, const Series& g) = default;

  Series inverse() const;          // requires a_0 != 0
  Series pow(const Int& e) const;  // binary exponentiation; e < 0 inverts
  Series pow(long e) const { return pow(Int(e)); }
  Series sqrt_unit() const;        // requires a_0 = 1; the unique root g(0)=1
  Series compose(const Series& g) const;  // this(g(y)); requires g(0) = 0
  Series truncated(int new_order) const;  // new_order <= order()

  bool p_integral(const Int& p) const;  // every coefficient has nu_p >= 0
  bool integral() const;                // every denominator is 1

  std::string str() const;

 private:
  std::vector<Rat> c_;
};

}  // namespace jorder

#endif  // JORDER_SERIES_HPP
