#include "hardyz/theta_laurent.hpp"

#include <cmath>
#include <sstream>

namespace hardyz {

ThetaLaurent ThetaLaurent::from_poly(const MPoly& p, std::size_t theta_var, int shift) {
  ThetaLaurent r;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && i != theta_var)
        throw std::invalid_argument("ThetaLaurent::from_poly: polynomial not univariate in theta");
    r.set(int(e[theta_var]) + shift, r.coeff(int(e[theta_var]) + shift) + c);
  }
  return r;
}

ThetaLaurent ThetaLaurent::operator-() const {
  ThetaLaurent r;
  for (const auto& [p, c] : coeffs_) r.coeffs_[p] = -c;
  return r;
}

ThetaLaurent& ThetaLaurent::operator+=(const ThetaLaurent& o) {
  for (const auto& [p, c] : o.coeffs_) set(p, coeff(p) + c);
  return *this;
}

ThetaLaurent& ThetaLaurent::operator-=(const ThetaLaurent& o) {
  for (const auto& [p, c] : o.coeffs_) set(p, coeff(p) - c);
  return *this;
}

ThetaLaurent operator*(const ThetaLaurent& a, const ThetaLaurent& b) {
  ThetaLaurent r;
  for (const auto& [pa, ca] : a.coeffs_)
    for (const auto& [pb, cb] : b.coeffs_) r.set(pa + pb, r.coeff(pa + pb) + ca * cb);
  return r;
}

ThetaLaurent& ThetaLaurent::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

Rational ThetaLaurent::eval(const Rational& theta) const {
  if (theta.sign() <= 0) throw std::domain_error("ThetaLaurent::eval: theta must be positive");
  Rational acc(0);
  for (const auto& [p, c] : coeffs_) {
    if (p >= 0)
      acc += c * theta.pow(unsigned(p));
    else
      acc += c / theta.pow(unsigned(-p));
  }
  return acc;
}

double ThetaLaurent::eval_double(double theta) const {
  double acc = 0;
  for (const auto& [p, c] : coeffs_) acc += c.to_double() * std::pow(theta, p);
  return acc;
}

std::string ThetaLaurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [p, c] = *it;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    os << c.str();
    if (p == 1)
      os << "*th";
    else if (p > 1)
      os << "*th^" << p;
    else if (p == -1)
      os << "/th";
    else if (p < -1)
      os << "/th^" << -p;
  }
  return os.str();
}

std::map<std::string, std::string> ThetaLaurent::to_json_map() const {
  std::map<std::string, std::string> m;
  for (const auto& [p, c] : coeffs_) m[std::to_string(p)] = c.str();
  return m;
}

}  // namespace hardyz
