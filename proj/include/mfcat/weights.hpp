#pragma once

// Weight systems, weighted degrees, regularity and Jacobi-ring dimensions.

#include "mfcat/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfcat {

struct WeightSystem {
  int a = 1, b = 1, c = 1, h = 1;

  WeightSystem() = default;
  /// Throws std::invalid_argument unless all entries are positive and gcd(a,b,c) = 1.
  WeightSystem(int a_, int b_, int c_, int h_);

  int weight(int v) const { return v == 0 ? a : (v == 1 ? b : c); }
  /// Integer weight a*i + b*j + c*k; the degree is 2*weight/h.
  long weight(const Monomial& m) const {
    return static_cast<long>(a) * m[0] + static_cast<long>(b) * m[1] + static_cast<long>(c) * m[2];
  }
  Rational degree(const Monomial& m) const { return make_rational(2 * weight(m), h); }
  Rational var_degree(int v) const { return make_rational(2 * weight(v), h); }
  /// Degree d as an integer weight d*h/2, or nullopt when not integral.
  std::optional<long> weight_of_degree(const Rational& d) const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  std::string str() const;
};

/// Degree of a weighted-homogeneous p; nullopt when p mixes degrees.
/// Throws std::invalid_argument on the zero polynomial.
std::optional<Rational> weighted_degree(const Poly& p, const WeightSystem& w);

struct RegularityReport {
  bool is_regular = false;
  std::vector<int> exponents;
  int epsilon = 0;
  int milnor_number = 0;
};

RegularityReport regularity(const WeightSystem& w);

/// Monomials of degree d, descending lexicographic; empty for negative or unattainable d.
std::vector<Monomial> monomial_basis(const WeightSystem& w, const Rational& d);
std::vector<Monomial> monomials_of_weight(const WeightSystem& w, long t);

struct JacobiDims {
  int total_dim = 0;
  /// graded_dims[t] = dimension in degree 2t/h.
  std::vector<int> graded_dims;
};

/// Throws std::runtime_error when the dimension exceeds the regularity prediction.
JacobiDims milnor_poincare(const Poly& f, const WeightSystem& w);

enum class Family { A, D, E };

struct ADEType {
  Family family = Family::A;
  int l = 1;

  /// Accepts "A3", "D5", "E6" (case-insensitive family letter). Throws std::invalid_argument.
  static ADEType parse(const std::string& s);
  /// Throws std::invalid_argument for A_0, D_{<4}, E other than 6,7,8.
  void validate() const;
  std::string str() const;
  /// Coxeter number.
  int h() const;
  friend bool operator==(const ADEType&, const ADEType&) = default;
};

struct ADEPolynomial {
  Poly f;
  WeightSystem w;
};

/// The defining polynomial and weight system; b is used only for A_l (1 <= b <= l).
ADEPolynomial ade_polynomial(const ADEType& t, int b = 1);

}  // namespace mfcat
