#include "hardyz/mpoly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hardyz {

std::size_t Ring::index(std::string_view var) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == var) return i;
  throw std::invalid_argument("Ring: unknown variable '" + std::string(var) + "'");
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<Ring>(std::move(names));
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
  MPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(ExpVec(p.ring_->size(), 0), c);
  return p;
}

MPoly MPoly::var(RingPtr ring, std::size_t idx) {
  MPoly p(std::move(ring));
  if (idx >= p.ring_->size()) throw std::out_of_range("MPoly::var: index");
  ExpVec e(p.ring_->size(), 0);
  e[idx] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MPoly MPoly::var(RingPtr ring, std::string_view name) {
  std::size_t idx = ring->index(name);
  return var(std::move(ring), idx);
}

MPoly MPoly::monomial(RingPtr ring, const ExpVec& e, const Rational& c) {
  MPoly p(std::move(ring));
  if (e.size() != p.ring_->size()) throw std::invalid_argument("MPoly::monomial: exponent size");
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint8_t x) { return x == 0; });
}

Rational MPoly::constant_term() const {
  ExpVec zero(ring_->size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::as_constant() const {
  if (!is_constant()) throw std::logic_error("MPoly::as_constant: non-constant polynomial");
  return constant_term();
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

unsigned MPoly::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

bool MPoly::involves(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

void MPoly::check_same_ring(const MPoly& o) const {
  if (ring_ == o.ring_) return;
  if (ring_ && o.ring_ && ring_->names() == o.ring_->names()) return;
  throw std::invalid_argument("MPoly: mixed rings");
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  a.check_same_ring(b);
  return a.terms_ == b.terms_;
}

MPoly MPoly::mul(const MPoly& a, const MPoly& b, const std::vector<std::uint8_t>* cap) {
  a.check_same_ring(b);
  MPoly r(a.ring_);
  const std::size_t n = a.ring_->size();
  ExpVec e(n, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool keep = true;
      for (std::size_t i = 0; i < n; ++i) {
        unsigned s = unsigned(ea[i]) + unsigned(eb[i]);
        if (s > 255 || (cap && s > (*cap)[i])) {
          keep = false;
          break;
        }
        e[i] = static_cast<std::uint8_t>(s);
      }
      if (keep) r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(ring_, Rational(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

MPoly MPoly::pow_capped(unsigned e, const std::vector<std::uint8_t>& cap) const {
  MPoly r = constant(ring_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = mul(r, *this, &cap);
  return r;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(long(e[var])));
  }
  return r;
}

MPoly MPoly::antiderivative(std::size_t var) const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    ExpVec d = e;
    d[var] += 1;
    r.add_term(d, c / Rational(long(d[var])));
  }
  return r;
}

MPoly MPoly::integrate_unit(std::size_t var) const {
  // sum over terms: coeff/(e+1), dropping the var
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    ExpVec d = e;
    d[var] = 0;
    r.add_term(d, c / Rational(long(e[var]) + 1));
  }
  return r;
}

MPoly MPoly::integrate_box(std::span<const std::size_t> vars) const {
  MPoly r = *this;
  for (auto v : vars) r = r.integrate_unit(v);
  return r;
}

MPoly MPoly::integrate_upto(std::size_t var, const MPoly& upper) const {
  if (upper.involves(var))
    throw std::invalid_argument("MPoly::integrate_upto: upper limit involves the variable");
  return antiderivative(var).substitute(var, upper);
}

MPoly MPoly::substitute(std::size_t var, const MPoly& replacement) const {
  check_same_ring(replacement);
  // Group by exponent of var, then Horner in the replacement.
  unsigned dmax = degree(var);
  std::vector<MPoly> bucket(dmax + 1, MPoly(ring_));
  for (const auto& [e, c] : terms_) {
    ExpVec d = e;
    unsigned k = d[var];
    d[var] = 0;
    bucket[k].add_term(d, c);
  }
  MPoly r = bucket[dmax];
  for (unsigned k = dmax; k-- > 0;) r = r * replacement + bucket[k];
  return r;
}

MPoly MPoly::mixed_derivative_at_zero(std::span<const std::size_t> vars) const {
  std::vector<bool> listed(ring_->size(), false);
  for (auto v : vars) {
    if (listed[v]) throw std::invalid_argument("mixed_derivative_at_zero: repeated variable");
    listed[v] = true;
  }
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    bool match = true;
    for (std::size_t i = 0; i < e.size() && match; ++i)
      if (listed[i] && e[i] != 1) match = false;
    if (!match) continue;
    ExpVec d = e;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (listed[i]) d[i] = 0;
    r.add_term(d, c);
  }
  return r;
}

Rational MPoly::eval(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("MPoly::eval: point size");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

double MPoly::eval_double(std::span<const double> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("MPoly::eval_double: point size");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool has_var = false;
    for (auto x : e)
      if (x) has_var = true;
    if (!has_var) {
      os << a.str();
      continue;
    }
    bool printed = false;
    if (a != Rational(1)) {
      os << a.str();
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (printed) os << "*";
      os << ring_->name(i);
      if (e[i] > 1) os << "^" << unsigned(e[i]);
      printed = true;
    }
  }
  return os.str();
}

namespace {

// int_0^1 t^m (1-t)^n dt = m! n! / (m+n+1)!
Rational beta01(unsigned m, unsigned n) {
  return factorial(m) * factorial(n) / factorial(m + n + 1);
}

}  // namespace

Rational integrate_region_T(const MPoly& p, const std::array<std::size_t, 4>& tvars) {
  std::vector<bool> allowed(p.ring()->size(), false);
  for (auto v : tvars) allowed[v] = true;
  Rational total(0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && !allowed[i])
        throw std::invalid_argument("integrate_region_T: polynomial involves a non-t variable");
    const unsigned a = e[tvars[0]], b = e[tvars[1]], cc = e[tvars[2]], d = e[tvars[3]];
    // Per branch the inner t1,t2,t4 integrals are elementary and the outer
    // integral is a Beta integral; both branches share the same Beta factor.
    Rational beta = beta01(b + cc + 1, a + d + 2);
    Rational branches = Rational(1, long(b) + 1) + Rational(1, long(cc) + 1);
    total += c * beta * branches / Rational((long(a) + 1) * (long(d) + 1));
  }
  return total;
}

}  // namespace hardyz
