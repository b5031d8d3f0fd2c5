#include "nilreal/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace nilreal {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

// ---------------------------------------------------------------------------
// Quaternion

Quaternion Quaternion::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero quaternion");
  return {a_ / n, -b_ / n, -c_ / n, -d_ / n};
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& o) {
  Rational a = a_ * o.a_ - b_ * o.b_ - c_ * o.c_ - d_ * o.d_;
  Rational b = a_ * o.b_ + b_ * o.a_ + c_ * o.d_ - d_ * o.c_;
  Rational c = a_ * o.c_ - b_ * o.d_ + c_ * o.a_ + d_ * o.b_;
  Rational d = a_ * o.d_ + b_ * o.c_ - c_ * o.b_ + d_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

ComplexBlock quat_to_complex_block(const Quaternion& q) {
  GaussianRational z1(q.a(), q.b());
  GaussianRational z2(q.c(), q.d());
  return {{{z1, -z2}, {z2.conj(), z1.conj()}}};
}

// ---------------------------------------------------------------------------
// Scalar

std::string_view ring_name(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
  }
  return "?";
}

Scalar Scalar::from_int(Ring r, long v) { return from_rational(r, Rational(v)); }

Scalar Scalar::from_rational(Ring r, const Rational& v) {
  Scalar s(v);
  s.ring_ = r;
  return s;
}

Scalar Scalar::imag_unit(Ring r) {
  if (r == Ring::R) throw std::invalid_argument("R has no square root of -1");
  Scalar s(Quaternion::i());
  s.ring_ = r;
  return s;
}

Scalar Scalar::embed(Ring target) const {
  if (static_cast<int>(target) < static_cast<int>(ring_))
    throw std::invalid_argument("cannot embed " + std::string(ring_name(ring_)) + " scalar into " +
                                std::string(ring_name(target)));
  Scalar s = *this;
  s.ring_ = target;
  return s;
}

bool Scalar::is_real() const {
  return sgn(value_.b()) == 0 && sgn(value_.c()) == 0 && sgn(value_.d()) == 0;
}

Rational Scalar::as_rational() const {
  if (!is_real()) throw std::domain_error("scalar " + to_string() + " is not real");
  return value_.a();
}

GaussianRational Scalar::as_gaussian() const {
  if (sgn(value_.c()) != 0 || sgn(value_.d()) != 0)
    throw std::domain_error("scalar " + to_string() + " is not in Q(i)");
  return {value_.a(), value_.b()};
}

Scalar Scalar::conj() const {
  if (ring_ == Ring::R) return *this;
  Scalar s = *this;
  s.value_ = value_.conj();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar s = *this;
  if (ring_ == Ring::R) {
    s.value_ = Quaternion(1 / value_.a());
  } else {
    s.value_ = value_.inverse();
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.value_ = -value_;
  return s;
}

void Scalar::require_same_ring(const Scalar& o) const {
  if (ring_ != o.ring_)
    throw std::invalid_argument("mixed-ring arithmetic: " + std::string(ring_name(ring_)) + " vs " +
                                std::string(ring_name(o.ring_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_ring(o);
  value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_ring(o);
  value_ -= o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_ring(o);
  switch (ring_) {
    case Ring::R:
      value_ = Quaternion(value_.a() * o.value_.a());
      break;
    case Ring::C: {
      const Rational& a = value_.a();
      const Rational& b = value_.b();
      const Rational& c = o.value_.a();
      const Rational& d = o.value_.b();
      value_ = Quaternion(a * c - b * d, a * d + b * c);
      break;
    }
    case Ring::H:
      value_ *= o.value_;
      break;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Rational& r) {
  value_ = Quaternion(value_.a() * r, value_.b() * r, value_.c() * r, value_.d() * r);
  return *this;
}

std::string Scalar::to_string() const {
  const Rational* parts[4] = {&value_.a(), &value_.b(), &value_.c(), &value_.d()};
  const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int u = 0; u < 4; ++u) {
    const Rational& x = *parts[u];
    if (sgn(x) == 0) continue;
    std::string coef = x.get_str();
    bool neg = sgn(x) < 0;
    if (neg) coef.erase(0, 1);
    if (u > 0 && coef == "1") coef.clear();
    if (neg) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += coef;
    out += units[u];
  }
  return out.empty() ? "0" : out;
}

Scalar parse_scalar(std::string_view text, Ring ring) {
  Rational coords[4] = {0, 0, 0, 0};
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty scalar");

  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("malformed scalar '" + s + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    std::string num = s.substr(start, pos - start);
    int unit = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      unit = s[pos] == 'i' ? 1 : (s[pos] == 'j' ? 2 : 3);
      ++pos;
    }
    if (num.empty() && unit == 0) throw std::invalid_argument("malformed scalar '" + s + "'");
    Rational value(1);
    if (!num.empty()) {
      if (num.front() == '/' || num.back() == '/' || num.find('/') != num.rfind('/'))
        throw std::invalid_argument("malformed rational '" + num + "'");
      value = Rational(num);
      if (value.get_den() == 0) throw std::invalid_argument("zero denominator in '" + num + "'");
      value.canonicalize();
    }
    coords[unit] += sign * value;
  }
  if (ring == Ring::R && (sgn(coords[1]) != 0 || sgn(coords[2]) != 0 || sgn(coords[3]) != 0))
    throw std::invalid_argument("'" + s + "' is not a real scalar");
  if (ring == Ring::C && (sgn(coords[2]) != 0 || sgn(coords[3]) != 0))
    throw std::invalid_argument("'" + s + "' is not in Q(i)");
  Scalar out = Scalar::from_rational(ring, 0);
  Quaternion q(coords[0], coords[1], coords[2], coords[3]);
  if (ring == Ring::H) return Scalar(q);
  if (ring == Ring::C) return Scalar(GaussianRational(coords[0], coords[1]));
  return Scalar(coords[0]);
}

}  // namespace nilreal
