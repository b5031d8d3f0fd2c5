#include <gtest/gtest.h>

#include <random>

#include "nilreal/scalar.hpp"

using namespace nilreal;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return make_rational(num(rng), den(rng));
}

Quaternion random_quaternion(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

Scalar random_scalar(std::mt19937& rng, Ring r) {
  switch (r) {
    case Ring::R: return Scalar(random_rational(rng));
    case Ring::C: return Scalar(GaussianRational(random_rational(rng), random_rational(rng)));
    case Ring::H: return Scalar(random_quaternion(rng));
  }
  return {};
}

ComplexBlock mul(const ComplexBlock& a, const ComplexBlock& b) {
  ComplexBlock c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

}  // namespace

TEST(Rational, StaysInLowestTerms) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ReciprocalProductIsExactlyOne) {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    Rational a = random_rational(rng);
    if (sgn(a) == 0) continue;
    Rational b = 1 / a;
    EXPECT_EQ(a * b, 1);
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Scalar(make_rational(3, 2))), Scalar(make_rational(3, 2)));
  EXPECT_EQ(conjugate(Scalar(GaussianRational(1, 2))), Scalar(GaussianRational(1, -2)));
  EXPECT_EQ(conjugate(Scalar(Quaternion(0, 1, 1, 0))), Scalar(Quaternion(0, -1, -1, 0)));
}

TEST(Conjugate, InvolutiveAntiAutomorphism) {
  std::mt19937 rng(5);
  for (Ring r : {Ring::R, Ring::C, Ring::H})
    for (int k = 0; k < 100; ++k) {
      Scalar x = random_scalar(rng, r), y = random_scalar(rng, r);
      EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
      EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
      EXPECT_EQ(x.conj().conj(), x);
    }
}

TEST(Quaternion, UnitRelations) {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  EXPECT_EQ(i * i, Quaternion(-1));
  EXPECT_EQ(j * j, Quaternion(-1));
  EXPECT_EQ(k * k, Quaternion(-1));
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * j * k, Quaternion(-1));
}

TEST(Quaternion, DivisionRing) {
  std::mt19937 rng(7);
  for (int n = 0; n < 100; ++n) {
    Quaternion q = random_quaternion(rng);
    if (q.is_zero()) continue;
    EXPECT_EQ(q * q.inverse(), Quaternion(1));
    EXPECT_EQ(q.inverse() * q, Quaternion(1));
  }
  EXPECT_THROW(Quaternion().inverse(), std::domain_error);
}

TEST(ComplexBlock, Examples) {
  ComplexBlock one = quat_to_complex_block(Quaternion(1));
  EXPECT_EQ(one[0][0], GaussianRational(1));
  EXPECT_EQ(one[0][1], GaussianRational(0));
  EXPECT_EQ(one[1][0], GaussianRational(0));
  EXPECT_EQ(one[1][1], GaussianRational(1));

  ComplexBlock j = quat_to_complex_block(Quaternion::j());
  EXPECT_EQ(j[0][0], GaussianRational(0));
  EXPECT_EQ(j[0][1], GaussianRational(-1));
  EXPECT_EQ(j[1][0], GaussianRational(1));
  EXPECT_EQ(j[1][1], GaussianRational(0));

  ComplexBlock i = quat_to_complex_block(Quaternion::i());
  EXPECT_EQ(i[0][0], GaussianRational::i());
  EXPECT_EQ(i[1][1], -GaussianRational::i());
  EXPECT_EQ(i[0][1], GaussianRational(0));
  EXPECT_EQ(i[1][0], GaussianRational(0));

  EXPECT_EQ(mul(i, j), quat_to_complex_block(Quaternion::k()));
}

TEST(ComplexBlock, InjectiveRingHomomorphism) {
  std::mt19937 rng(3);
  for (int n = 0; n < 100; ++n) {
    Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
    EXPECT_EQ(mul(quat_to_complex_block(p), quat_to_complex_block(q)), quat_to_complex_block(p * q));
    ComplexBlock s = quat_to_complex_block(p + q), a = quat_to_complex_block(p), b = quat_to_complex_block(q);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) EXPECT_EQ(s[r][c], a[r][c] + b[r][c]);
    if (!p.is_zero()) {
      ComplexBlock z = quat_to_complex_block(p);
      EXPECT_FALSE(z[0][0].is_zero() && z[0][1].is_zero());
    }
  }
}

TEST(Scalar, MixedRingsRejected) {
  Scalar r(Rational(1));
  Scalar c(GaussianRational(0, 1));
  EXPECT_THROW(r + c, std::invalid_argument);
  EXPECT_THROW(r * c, std::invalid_argument);
  EXPECT_EQ(r.embed(Ring::C) + c, Scalar(GaussianRational(1, 1)));
  EXPECT_THROW(c.embed(Ring::R), std::invalid_argument);
}

TEST(Scalar, EmbeddingsAreCoherent) {
  std::mt19937 rng(13);
  for (int n = 0; n < 50; ++n) {
    Scalar x = random_scalar(rng, Ring::C), y = random_scalar(rng, Ring::C);
    EXPECT_EQ((x * y).embed(Ring::H), x.embed(Ring::H) * y.embed(Ring::H));
    EXPECT_EQ(x.conj().embed(Ring::H), x.embed(Ring::H).conj());
    Scalar a = random_scalar(rng, Ring::R);
    EXPECT_EQ(a.embed(Ring::C).embed(Ring::H), a.embed(Ring::H));
  }
}

TEST(Scalar, Parsing) {
  EXPECT_EQ(parse_scalar("3/2", Ring::R), Scalar(make_rational(3, 2)));
  EXPECT_EQ(parse_scalar("-i", Ring::C), Scalar(GaussianRational(0, -1)));
  EXPECT_EQ(parse_scalar("1+2i", Ring::C), Scalar(GaussianRational(1, 2)));
  EXPECT_EQ(parse_scalar("1/2-3/4j+k", Ring::H),
            Scalar(Quaternion(make_rational(1, 2), 0, make_rational(-3, 4), 1)));
  EXPECT_THROW(parse_scalar("j", Ring::C), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/", Ring::R), std::invalid_argument);
  EXPECT_THROW(parse_scalar("", Ring::R), std::invalid_argument);
}

TEST(Scalar, ImagUnitSquaresToMinusOne) {
  for (Ring r : {Ring::C, Ring::H}) {
    Scalar i = Scalar::imag_unit(r);
    EXPECT_EQ(i * i, Scalar::from_int(r, -1));
  }
  EXPECT_THROW(Scalar::imag_unit(Ring::R), std::invalid_argument);
}
