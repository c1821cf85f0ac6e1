#include "mfcat/parser.hpp"

#include <cctype>

namespace mfcat {

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  int peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : -1;
  }

  Poly expr() {
    bool neg = false;
    int c = peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Poly t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      int c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        std::size_t at = ++pos_;
        Poly d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (!d.is_constant()) throw ParseError("divisor is not a constant", at);
        acc *= d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("exponent not a nonnegative integer", start);
    long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_] - '0');
      if (e > 100000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return base.pow(static_cast<int>(e));
  }

  Poly atom() {
    int c = peek();
    std::size_t at = pos_;
    switch (c) {
      case 'x': ++pos_; return Poly::x();
      case 'y': ++pos_; return Poly::y();
      case 'z': ++pos_; return Poly::z();
      case 'I': ++pos_; return Poly(GaussRat::i());
      case '(': {
        ++pos_;
        Poly p = expr();
        if (peek() != ')') throw ParseError("expected ')'", pos_);
        ++pos_;
        return p;
      }
      default: break;
    }
    if (c >= 0 && std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(GaussRat(Rational(mpz_class(std::string(s_.substr(start, pos_ - start))))));
    }
    if (c < 0) throw ParseError("unexpected end of input", at);
    throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", at);
  }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace mfcat
