#include "mfcat/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace mfcat {

std::string Monomial::str() const {
  static constexpr char names[3] = {'x', 'y', 'z'};
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (e[v] > 1) out += '^' + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

Poly Poly::var(int v) {
  Monomial m;
  m.e[v] = 1;
  return Poly(m);
}

GaussRat Poly::constant_term() const { return coeff(Monomial{}); }

GaussRat Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRat() : it->second;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  Poly r(1L);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

Poly Poly::derivative(int v) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[v] == 0) continue;
    Monomial d = m;
    d.e[v] -= 1;
    r.add_term(d, c * GaussRat(static_cast<long>(m.e[v])));
  }
  return r;
}

Poly Poly::shifted(const Monomial& s) const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m * s, c);
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational a = abs(c.re());
      if (a != 1 || m.is_one()) coef = a.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      Rational a = abs(c.im());
      coef = a == 1 ? "I" : a.get_str() + "*I";
    } else {
      coef = c.str();  // parenthesised
    }
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (!coef.empty()) {
      os << coef;
      if (!m.is_one()) os << '*';
    }
    if (!m.is_one()) os << m.str();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace mfcat
