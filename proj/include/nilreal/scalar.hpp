#ifndef NILREAL_SCALAR_HPP
#define NILREAL_SCALAR_HPP

#include <array>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nilreal {

/// Exact rational number; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on a zero denominator.
Rational make_rational(long num, long den = 1);

std::string to_string(const Rational& r);

/// Element of Q(i). The square root of -1 used throughout the library lives here.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re) : re_(re), im_(0) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Rational quaternion a + b i + c j + d k with i^2 = j^2 = k^2 = ijk = -1.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational a, Rational b = 0, Rational c = 0, Rational d = 0)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  Quaternion(long a) : a_(a) {}
  explicit Quaternion(const GaussianRational& z) : a_(z.re()), b_(z.im()) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Quaternion conj() const { return {a_, -b_, -c_, -d_}; }
  /// q * conj(q), always a non-negative rational.
  Rational norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  Quaternion inverse() const;

  Quaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Quaternion& o);

  friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend Quaternion operator*(Quaternion p, const Quaternion& q) { return p *= q; }
  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
  }

 private:
  Rational a_{0};
  Rational b_{0};
  Rational c_{0};
  Rational d_{0};
};

using ComplexBlock = std::array<std::array<GaussianRational, 2>, 2>;

/// Writes q = z1 + z2 j and returns [[z1, -z2], [conj z2, conj z1]].
/// This is a ring homomorphism H -> M_2(Q(i)) and sends conj(q) to the conjugate transpose.
ComplexBlock quat_to_complex_block(const Quaternion& q);

enum class Ring { R, C, H };

std::string_view ring_name(Ring r);

/// An exact scalar tagged with its base ring. R sits inside C inside H
/// (a real scalar has only the first coordinate, a complex one the first two).
/// Arithmetic between different rings throws std::invalid_argument; lift
/// explicitly with embed().
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : value_(std::move(r)) {}
  Scalar(const GaussianRational& z) : ring_(Ring::C), value_(z) {}
  Scalar(Quaternion q) : ring_(Ring::H), value_(std::move(q)) {}

  static Scalar zero(Ring r) { return from_int(r, 0); }
  static Scalar one(Ring r) { return from_int(r, 1); }
  static Scalar from_int(Ring r, long v);
  static Scalar from_rational(Ring r, const Rational& v);
  /// sqrt(-1) in C, or the quaternion unit i in H.
  static Scalar imag_unit(Ring r);

  Ring ring() const { return ring_; }
  const Quaternion& quaternion() const { return value_; }
  Scalar embed(Ring target) const;

  bool is_zero() const { return value_.is_zero(); }
  bool is_real() const;
  const Rational& real_part() const { return value_.a(); }
  /// Throws std::domain_error unless is_real().
  Rational as_rational() const;
  /// Throws std::domain_error for a scalar with j or k components.
  GaussianRational as_gaussian() const;

  /// sigma_c: identity on R, complex/quaternionic conjugation otherwise.
  Scalar conj() const;
  /// Norm form s * conj(s).
  Rational norm() const { return value_.norm(); }
  /// Throws std::domain_error for zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& r);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& r) { return a *= r; }
  friend Scalar operator*(const Rational& r, Scalar a) { return a *= r; }
  /// Ring equality plus value equality.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  void require_same_ring(const Scalar& o) const;

  Ring ring_ = Ring::R;
  Quaternion value_;
};

inline Scalar conjugate(const Scalar& s) { return s.conj(); }

/// Parses "3/2", "-i", "1+2i", "1/2-3/4j+k" into a scalar of the given ring.
/// Throws std::invalid_argument on malformed text or units the ring lacks.
Scalar parse_scalar(std::string_view text, Ring ring);

}  // namespace nilreal

#endif  // NILREAL_SCALAR_HPP
