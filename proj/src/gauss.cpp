#include "mfcat/gauss.hpp"

#include <cctype>
#include <sstream>

namespace mfcat {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || ((c == '-' || c == '+') && k == 0);
    if (!ok) throw std::invalid_argument("malformed rational: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long floor_int(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

long ceil_int(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
  if (is_real()) return GaussRat(Rational(1) / re_);
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRat::str() const {
  std::ostringstream os;
  if (is_real()) {
    os << re_;
    return os.str();
  }
  auto imag = [&](std::ostringstream& out, const Rational& v, bool lead) {
    if (v == 1) {
      out << (lead ? "" : "+") << "I";
    } else if (v == -1) {
      out << "-I";
    } else {
      if (!lead && sgn(v) > 0) out << "+";
      out << v << "*I";
    }
  };
  if (sgn(re_) == 0) {
    imag(os, im_, true);
    return os.str();
  }
  os << "(" << re_;
  imag(os, im_, false);
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

}  // namespace mfcat
