#ifndef HARDYZ_THETA_LAURENT_HPP
#define HARDYZ_THETA_LAURENT_HPP

#include <map>
#include <string>

#include "hardyz/mpoly.hpp"
#include "hardyz/rational.hpp"

namespace hardyz {

// Laurent polynomial in the mollifier-length exponent theta; exact
// coefficients, exact evaluation at rational theta > 0.
class ThetaLaurent {
 public:
  ThetaLaurent() = default;

  static ThetaLaurent constant(const Rational& c) {
    ThetaLaurent r;
    r.set(0, c);
    return r;
  }
  // Interpret a univariate polynomial in theta, shifting every power by
  // `shift` (e.g. shift = -4 divides by theta^4).
  static ThetaLaurent from_poly(const MPoly& p, std::size_t theta_var, int shift);

  void set(int power, const Rational& c) {
    if (c.is_zero())
      coeffs_.erase(power);
    else
      coeffs_[power] = c;
  }
  Rational coeff(int power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_power() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_power() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  ThetaLaurent operator-() const;
  ThetaLaurent& operator+=(const ThetaLaurent& o);
  friend ThetaLaurent operator+(ThetaLaurent a, const ThetaLaurent& b) { return a += b; }
  ThetaLaurent& operator-=(const ThetaLaurent& o);
  friend ThetaLaurent operator-(ThetaLaurent a, const ThetaLaurent& b) { return a -= b; }
  friend ThetaLaurent operator*(const ThetaLaurent& a, const ThetaLaurent& b);
  ThetaLaurent& operator*=(const Rational& c);
  friend ThetaLaurent operator*(ThetaLaurent a, const Rational& c) { return a *= c; }
  friend bool operator==(const ThetaLaurent& a, const ThetaLaurent& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const ThetaLaurent& a, const ThetaLaurent& b) { return !(a == b); }

  // Exact value at rational theta > 0.
  Rational eval(const Rational& theta) const;
  double eval_double(double theta) const;

  // Descending powers: "52/1215*th + 491/5040 + 563/6300/th + 1/1512/th^4".
  std::string str() const;
  // {"1": "52/1215", "0": "491/5040", "-1": "563/6300", ...}
  std::map<std::string, std::string> to_json_map() const;

 private:
  std::map<int, Rational> coeffs_;
};

}  // namespace hardyz

#endif  // HARDYZ_THETA_LAURENT_HPP
