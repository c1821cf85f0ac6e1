#pragma once

// Polynomials in x, y, z over Q(i).

#include "mfcat/gauss.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace mfcat {

/// Exponent triple (i, j, k) of x^i y^j z^k.
struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(int i, int j, int k) : e{i, j, k} {}

  int operator[](int v) const { return e[v]; }
  int total() const { return e[0] + e[1] + e[2]; }
  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]};
  }
  bool divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Descending lexicographic order on exponents, so x^3 precedes y^4 precedes z^2.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e > b.e; }

  std::string str() const;
};

class Poly {
public:
  using Terms = std::map<Monomial, GaussRat>;

  Poly() = default;
  Poly(long c) { add_term(Monomial{}, GaussRat(c)); }  // NOLINT(google-explicit-constructor)
  Poly(GaussRat c) { add_term(Monomial{}, std::move(c)); }  // NOLINT
  Poly(const Monomial& m, GaussRat c = GaussRat(1)) { add_term(m, std::move(c)); }

  static Poly x() { return Poly(Monomial{1, 0, 0}); }
  static Poly y() { return Poly(Monomial{0, 1, 0}); }
  static Poly z() { return Poly(Monomial{0, 0, 1}); }
  static Poly var(int v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Nonzero constant polynomial.
  bool is_constant() const { return terms_.size() == 1 && terms_.begin()->first.is_one(); }
  GaussRat constant_term() const;
  GaussRat coeff(const Monomial& m) const;

  /// Adds c*m, dropping the entry when it cancels.
  void add_term(const Monomial& m, const GaussRat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussRat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
  friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(int n) const;
  Poly derivative(int v) const;
  /// Monomial-wise multiplication by x^i y^j z^k.
  Poly shifted(const Monomial& m) const;

  /// Prints in the expression grammar accepted by parse_poly.
  std::string str() const;

private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace mfcat
