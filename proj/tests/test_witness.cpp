#include <gtest/gtest.h>

#include "nilreal/oracle.hpp"
#include "support.hpp"

using namespace nilreal;
using nilreal::testing::sweep_families;

namespace {

Scalar R(long v) { return Scalar(Rational(v)); }
Scalar C(long re, long im) { return Scalar(GaussianRational(re, im)); }

SignedYoungDiagram D(const std::string& s) { return parse_diagram(s); }

TripleData T(const FamilySpec& f, const std::string& d) { return build_representative(f, D(d)); }

void expect_verified(const TripleData& t, const Witness& w) {
  WitnessReport r = verify_witness(t, w);
  EXPECT_TRUE(r.anticommutes);
  EXPECT_TRUE(r.square_ok);
  EXPECT_TRUE(r.form_ok);
  EXPECT_TRUE(r.det_ok);
  EXPECT_TRUE(r.component_ok);
  EXPECT_TRUE(verify_group_level(t, w));
}

/// Multiplies g on the right by -1 on the chain (d, j).
Mat flip_chain(const Mat& g, const TripleData& t, int d, int j) {
  Mat n = Mat::identity(g.rows(), g.ring());
  for (int l = 0; l < d; ++l) {
    std::size_t pos = t.basis.position(d, j, l);
    n(pos, pos) = Scalar::from_int(g.ring(), -1);
  }
  return g * n;
}

}  // namespace

TEST(GeneralLinear, Examples) {
  EXPECT_EQ(witness_general_linear(T(FamilySpec::sl_r(2), "2(1,0)")).g, Mat::diagonal({R(1), R(-1)}));
  EXPECT_EQ(witness_general_linear(T(FamilySpec::sl_r(3), "3(1,0)")).g, Mat::diagonal({R(-1), R(1), R(-1)}));
  EXPECT_TRUE(witness_general_linear(T(FamilySpec::sl_r(1), "1(1,0)")).g.is_identity());
  Witness w = witness_general_linear(T(FamilySpec::sl_c(2), "2(1,0)"));
  EXPECT_EQ(w.kind, WitnessKind::strong);
  EXPECT_EQ(w.claimed_group.family, Family::GL_C);
  expect_verified(T(FamilySpec::sl_c(2), "2(1,0)"), w);
}

TEST(SlC, Examples) {
  TripleData two = T(FamilySpec::sl_c(2), "2(1,0)");
  Witness w = witness_sl_C(two);
  EXPECT_EQ(w.g, Mat::diagonal({C(0, 1), C(0, -1)}));
  EXPECT_EQ(w.kind, WitnessKind::projective);
  EXPECT_EQ(w.claimed_square, SquareClaim::minus_identity);
  expect_verified(two, w);

  TripleData tw1 = T(FamilySpec::sl_c(3), "2(1,0)+1(1,0)");
  Witness s = witness_sl_C(tw1);
  EXPECT_EQ(s.kind, WitnessKind::strong);
  EXPECT_EQ(determinant(s.g), C(1, 0));
  expect_verified(tw1, s);

  TripleData twotwo = T(FamilySpec::sl_c(4), "2(2,0)");
  Witness v = witness_sl_C(twotwo);
  EXPECT_EQ(v.kind, WitnessKind::strong);
  EXPECT_EQ(v.g, Mat::diagonal({C(1, 0), C(-1, 0), C(1, 0), C(-1, 0)}));
  expect_verified(twotwo, v);
}

TEST(SlR, Examples) {
  EXPECT_THROW(witness_sl_R(T(FamilySpec::sl_r(2), "2(1,0)")), NotReal);
  EXPECT_THROW(witness_sl_R(T(FamilySpec::sl_r(6), "4(1,0)+2(1,0)")), NotReal);
  for (const char* d : {"2(2,0)", "2(1,0)+1(2,0)"}) {
    TripleData t = T(FamilySpec::sl_r(4), d);
    Witness w = witness_sl_R(t);
    EXPECT_EQ(w.kind, WitnessKind::strong);
    EXPECT_EQ(determinant(w.g), R(1));
    expect_verified(t, w);
  }
  TripleData t21 = T(FamilySpec::sl_r(3), "2(1,0)+1(1,0)");
  EXPECT_EQ(witness_sl_R(t21).g, Mat::diagonal({R(1), R(-1), R(-1)}));
}

TEST(SlH, AlwaysStrong) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : enumerate_diagrams(FamilySpec::sl_h(n))) {
      TripleData t = build_representative(FamilySpec::sl_h(n), d);
      Witness w = witness_sl_H(t);
      EXPECT_EQ(w.kind, WitnessKind::strong);
      expect_verified(t, w);
    }
}

TEST(SoC, Examples) {
  TripleData ones = T(FamilySpec::so_c(3), "1(3,0)");
  EXPECT_TRUE(witness_so_n_C(ones).g.is_identity());
  TripleData twotwo = T(FamilySpec::so_c(4), "2(2,0)");
  Witness sw = witness_so_n_C(twotwo);
  EXPECT_FALSE(sw.g == Mat::diagonal({C(1, 0), C(-1, 0), C(1, 0), C(-1, 0)}));
  EXPECT_TRUE(sw.g(0, 0).is_zero());
  expect_verified(twotwo, sw);
  TripleData t31 = T(FamilySpec::so_c(4), "3(1,0)+1(1,0)");
  Witness w = witness_so_n_C(t31);
  EXPECT_EQ(w.g, Mat::diagonal({C(-1, 0), C(1, 0), C(-1, 0), C(1, 0)}));
  expect_verified(t31, w);
}

TEST(SpC, Examples) {
  TripleData two = T(FamilySpec::sp_c(1), "2(1,0)");
  EXPECT_THROW(witness_sp_n_C(two, SpCMode::strong), NotStronglyReal);
  Witness real = witness_sp_n_C(two, SpCMode::real);
  EXPECT_EQ(real.g, Mat::diagonal({C(0, 1), C(0, -1)}));
  expect_verified(two, real);
  Witness proj = witness_sp_n_C(two, SpCMode::projective);
  EXPECT_EQ(proj.claimed_square, SquareClaim::minus_identity);
  expect_verified(two, proj);

  TripleData twotwo = T(FamilySpec::sp_c(2), "2(2,0)");
  Witness strong = witness_sp_n_C(twotwo, SpCMode::strong);
  EXPECT_TRUE((strong.g * strong.g).is_identity());
  EXPECT_TRUE(strong.g(0, 0).is_zero());
  expect_verified(twotwo, strong);
}

TEST(Su, Examples) {
  EXPECT_THROW(witness_su_pq(T(FamilySpec::su(1, 1), "2(1,0)")), NotReal);
  TripleData t = T(FamilySpec::su(2, 2), "2(1,1)");
  expect_verified(t, witness_su_pq(t));
  TripleData z = T(FamilySpec::su(1, 1), "1(1,1)");
  EXPECT_TRUE(witness_su_pq(z).g.is_identity());
}

TEST(SoPQ, Examples) {
  TripleData t = T(FamilySpec::so(2, 1), "3(0,1)");
  EXPECT_THROW(witness_so_pq(t, SOTarget::identity_component), NotRealInIdentityComponent);
  Witness full = witness_so_pq(t, SOTarget::full_group);
  EXPECT_EQ(full.kind, WitnessKind::strong);
  EXPECT_EQ(in_group(full.g, t.group).component_sign.value_or(0), -1);
  ASSERT_TRUE(full.claimed_component);
  EXPECT_EQ(*full.claimed_component, ComponentClaim::non_identity);
  expect_verified(t, full);

  TripleData t33 = T(FamilySpec::so_identity(3, 3), "3(1,1)");
  Witness id = witness_so_pq(t33, SOTarget::identity_component);
  EXPECT_EQ(in_group(id.g, t33.group).component_sign.value_or(0), 1);
  expect_verified(t33, id);
  // Two chains of size 3 contribute one flip each, so the base witness is already in SO^0.
  TripleData t33full = T(FamilySpec::so(3, 3), "3(1,1)");
  EXPECT_EQ(in_group(witness_so_pq(t33full, SOTarget::full_group).g, t33full.group).component_sign.value_or(0), 1);
}

TEST(SoPQ, DoubleFlipAcrossDifferentRows) {
  // Each odd part carries one sign only, yet chains of opposite sign exist.
  TripleData t = T(FamilySpec::so_identity(1, 3), "3(1,0)+1(0,1)");
  Witness w = witness_so_pq(t, SOTarget::identity_component);
  expect_verified(t, w);
  EXPECT_EQ(in_group(w.g, t.group).component_sign.value_or(0), 1);
}

TEST(SoPQ, ComponentOfLongOddRows) {
  // Chains of size 3 and 5 mod 8 put the base witness outside SO^0; 1 and 7 mod 8 do not.
  struct Case {
    FamilySpec f;
    const char* d;
    int sign;
  };
  for (const Case& c : {Case{FamilySpec::so(3, 2), "5(1,0)", -1}, Case{FamilySpec::so(4, 3), "7(0,1)", 1},
                        Case{FamilySpec::so(3, 4), "7(1,0)", 1}, Case{FamilySpec::so(1, 2), "3(1,0)", -1},
                        Case{FamilySpec::so(5, 4), "9(1,0)", 1}}) {
    TripleData t = T(c.f, c.d);
    Witness w = witness_so_pq(t, SOTarget::full_group);
    EXPECT_EQ(in_group(w.g, t.group).component_sign.value_or(0), c.sign) << c.d;
    expect_verified(t, w);
  }
}

TEST(SoStar, Examples) {
  EXPECT_THROW(witness_so_star(T(FamilySpec::so_star(2), "2(1,0)")), NotReal);
  TripleData t = T(FamilySpec::so_star(4), "2(1,1)");
  expect_verified(t, witness_so_star(t));
  TripleData z = T(FamilySpec::so_star(1), "1(1,0)");
  EXPECT_TRUE(witness_so_star(z).g.is_identity());
}

TEST(SpR, Examples) {
  EXPECT_THROW(witness_sp_n_R(T(FamilySpec::sp_r(1), "2(1,0)")), NotReal);
  TripleData t = T(FamilySpec::sp_r(2), "2(1,1)");
  expect_verified(t, witness_sp_n_R(t));
  TripleData z = T(FamilySpec::sp_r(1), "1(2,0)");
  EXPECT_TRUE(witness_sp_n_R(z).g.is_identity());
}

TEST(SpPQ, Examples) {
  TripleData two = T(FamilySpec::sp_pq(1, 1), "2(1,0)");
  EXPECT_THROW(witness_sp_pq(two, SpPQMode::strong), NotStronglyReal);
  Witness real = witness_sp_pq(two, SpPQMode::real);
  EXPECT_EQ(real.claimed_square, SquareClaim::minus_identity);
  EXPECT_TRUE((-(real.g * real.g)).is_identity());
  expect_verified(two, real);

  TripleData three = T(FamilySpec::sp_pq(1, 2), "3(1,0)");
  Witness s = witness_sp_pq(three, SpPQMode::strong);
  Scalar one = Scalar::one(Ring::H);
  EXPECT_EQ(s.g, Mat::diagonal({-one, one, -one}));
  expect_verified(three, s);
}

TEST(Witnesses, EveryReturnedWitnessVerifiesOnSweep) {
  for (const auto& fam : sweep_families(7))
    for (const auto& d : enumerate_diagrams(fam)) {
      SCOPED_TRACE(fam.to_string() + " " + d.to_string());
      TripleData t = build_representative(fam, d);
      for (GroupVariant v : {GroupVariant::standard, GroupVariant::projective}) {
        try {
          Witness w = best_witness(t, v);
          expect_verified(t, w);
          if (w.kind == WitnessKind::strong) EXPECT_EQ(w.claimed_square, SquareClaim::identity);
          if (w.kind == WitnessKind::projective) EXPECT_NE(w.claimed_square, SquareClaim::unspecified);
          BlockForm bf = matrix_in_B(w.g, t);
          EXPECT_TRUE(bf.block_upper_triangular);
          EXPECT_EQ(bf.epsilon, -1);
          EXPECT_TRUE(bf.epsilon_pattern);
        } catch (const ObstructionError&) {
        }
      }
    }
}

TEST(SoIdentity, ObstructedOrbitsHaveNoWitnessInAnyCentralizerComponent) {
  // Every element of SO(p,q) reversing X is g0 times a centralizer element; the component
  // group of the centralizer is generated by sign changes on single odd chains. Try all
  // det-one products of those against the base witness.
  int obstructed = 0;
  for (int size = 1; size <= 8; ++size)
    for (int p = size; p >= 0; --p) {
      const FamilySpec fam = FamilySpec::so(p, size - p);
      for (const auto& d : enumerate_diagrams(fam)) {
        const bool blocked = so_identity_obstructed(d);
        TripleData t = build_representative(fam, d);
        Mat g0 = witness_so_pq(t, SOTarget::full_group).g;
        std::vector<std::pair<int, int>> chains;
        for (const auto& row : d.rows())
          if (row.d % 2 == 1)
            for (int j = 0; j < row.t; ++j) chains.emplace_back(row.d, j);
        bool reached_identity = false;
        for (unsigned mask = 0; mask < (1u << chains.size()); ++mask) {
          if (__builtin_popcount(mask) % 2) continue;
          Mat g = g0;
          for (std::size_t c = 0; c < chains.size(); ++c)
            if (mask & (1u << c)) g = flip_chain(g, t, chains[c].first, chains[c].second);
          ASSERT_EQ(g * t.X, -(t.X * g));
          MembershipReport m = in_group(g, t.group);
          ASSERT_TRUE(m.form_ok && m.det_ok);
          if (m.component_sign.value_or(0) == 1) reached_identity = true;
        }
        EXPECT_EQ(reached_identity, !blocked) << fam.to_string() << " " << d.to_string();
        obstructed += blocked;
      }
    }
  EXPECT_GT(obstructed, 0);
}

TEST(Semisimple, SlTwo) {
  SemisimpleElement s = SemisimpleElement::sl({GaussianRational(3), GaussianRational(-3)});
  Witness w = witness_semisimple(s);
  EXPECT_NE(w.kind, WitnessKind::strong);
  EXPECT_TRUE(w.g(0, 0).is_zero() && w.g(1, 1).is_zero());
  EXPECT_TRUE(verify_witness_against(s.matrix(), w).all());
}

TEST(Semisimple, SlFourSwap) {
  SemisimpleElement s = SemisimpleElement::sl({GaussianRational(1), GaussianRational(2), GaussianRational(-1), GaussianRational(-2)});
  Witness w = witness_semisimple(s);
  EXPECT_EQ(w.kind, WitnessKind::strong);
  Scalar o = C(1, 0), z = C(0, 0);
  EXPECT_EQ(w.g, Mat::from_rows({{z, z, o, z}, {z, z, z, o}, {o, z, z, z}, {z, o, z, z}}));
  EXPECT_TRUE(verify_witness_against(s.matrix(), w).all());
}

TEST(Semisimple, SoTwoRotation) {
  SemisimpleElement s = SemisimpleElement::so({GaussianRational(2)}, 2);
  EXPECT_THROW(witness_semisimple(s, GroupVariant::standard), NotReal);
  Witness w = witness_semisimple(s, GroupVariant::full);
  EXPECT_EQ(w.kind, WitnessKind::strong);
  EXPECT_EQ(determinant(w.g), C(-1, 0));
  EXPECT_EQ(w.claimed_group.family, Family::O_C);
  EXPECT_TRUE(verify_witness_against(s.matrix(), w).all());
}

TEST(Semisimple, WitnessesVerifyAcrossShapes) {
  const std::vector<std::vector<GaussianRational>> sl_cases = {
      {1, -1, 0}, {1, 2, -1, -2}, {GaussianRational(1, 1), GaussianRational(-1, -1)}, {1, -1, 1, -1, 2, -2}, {5, -5, 0, 0}};
  for (const auto& e : sl_cases) {
    SemisimpleElement s = SemisimpleElement::sl(e);
    EXPECT_TRUE(verify_witness_against(s.matrix(), witness_semisimple(s)).all());
  }
  const std::vector<std::vector<GaussianRational>> sp_cases = {{1}, {1, 1}, {1, 2}, {0, 3}, {2, 2, 3}, {GaussianRational(0, 1), 4}};
  for (const auto& h : sp_cases) {
    SemisimpleElement s = SemisimpleElement::sp(h);
    EXPECT_TRUE(verify_witness_against(s.matrix(), witness_semisimple(s)).all());
  }
  for (int n : {3, 4, 5, 6, 7, 8}) {
    std::vector<GaussianRational> x;
    for (int k = 1; k <= n / 2; ++k) x.push_back(k);
    SemisimpleElement s = SemisimpleElement::so(x, n);
    EXPECT_TRUE(verify_witness_against(s.matrix(), witness_semisimple(s, GroupVariant::full)).all());
    if (n % 2 == 1 || n % 4 == 0)
      EXPECT_TRUE(verify_witness_against(s.matrix(), witness_semisimple(s)).all()) << n;
    else
      EXPECT_THROW(witness_semisimple(s), NotReal);
  }
}
