#pragma once

// Exact arithmetic in Q(i): rationals via GMP, Gaussian rationals as pairs.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mfcat {

using Rational = mpq_class;

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);
/// num/den in canonical form (mpq_class's two-argument constructor does not reduce).
Rational make_rational(long num, long den);
std::string to_string(const Rational& q);

/// Floor of a rational as a plain integer (values here are tiny).
long floor_int(const Rational& q);
long ceil_int(const Rational& q);
bool is_integer(const Rational& q);

class GaussRat {
public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRat conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error for zero.
  GaussRat inverse() const;

  GaussRat operator-() const { return {-re_, -im_}; }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// Total order (re, then im) used only for canonical sorting.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Renders as "3", "-I", "1/2+3*I", "(1/2-I)" style fragments usable by the parser.
  std::string str() const;

private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

}  // namespace mfcat
