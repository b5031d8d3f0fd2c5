#include "nilreal/oracle.hpp"

#include <map>

namespace nilreal {

namespace {

bool is_triple(const Mat& X, const Mat& H, const Mat& Y) {
  if (!X.is_square() || !(X.rows() == H.rows() && H.rows() == Y.rows())) return false;
  if (!(X.ring() == H.ring() && H.ring() == Y.ring())) return false;
  Rational two = 2;
  return commutator(H, X) == two * X && commutator(H, Y) == Rational(-2) * Y && commutator(X, Y) == H;
}

std::map<int, int> partition_from_ranks(const Mat& X) {
  const std::size_t n = X.rows();
  std::vector<std::size_t> r{n};
  Mat p = Mat::identity(n, X.ring());
  while (r.back() > 0) {
    p = p * X;
    r.push_back(rank(p));
    if (r.size() > n + 2) throw std::invalid_argument("X is not nilpotent");
  }
  r.push_back(0);
  std::map<int, int> parts;
  // #parts >= k equals r[k-1] - r[k].
  for (std::size_t k = 1; k + 1 < r.size(); ++k) {
    long at_least_k = static_cast<long>(r[k - 1] - r[k]);
    long at_least_k1 = static_cast<long>(r[k] - r[k + 1]);
    if (at_least_k - at_least_k1 > 0) parts[static_cast<int>(k)] = static_cast<int>(at_least_k - at_least_k1);
  }
  return parts;
}

/// Basis (as columns) of L(d-1) = ker Y cap ker X^d cap ker(H - (1-d)).
Mat lowest_weight_space(const Mat& X, const Mat& H, const Mat& Y, int d) {
  const Ring r = X.ring();
  Mat shifted = H - Scalar::from_int(r, 1 - d) * Mat::identity(H.rows(), r);
  return kernel(stack_rows(stack_rows(Y, power(X, static_cast<unsigned>(d))), shifted));
}

int hermitian_plus_count(const Mat& b, Sigma sigma) {
  return signature(FormSpec{b, sigma, 1}).first;
}

}  // namespace

SignedYoungDiagram diagram_from_triple(const Mat& X, const Mat& H, const Mat& Y, const std::optional<FormSpec>& form,
                                       Family family) {
  if (!is_triple(X, H, Y)) throw std::invalid_argument("diagram_from_triple: not an sl2-triple");
  if (form) {
    GroupSpec g = GroupSpec::make(family, form);
    if (!in_algebra(X, g)) throw std::invalid_argument("diagram_from_triple: X is not in the algebra");
  }
  std::map<int, int> parts = partition_from_ranks(X);
  std::vector<SignedPart> rows;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const int d = it->first, t = it->second;
    SignedPart row{d, t, t, 0};
    if (form && row_sign_rule(family, d) == RowSigns::free) {
      Mat L = lowest_weight_space(X, H, Y, d);
      if (static_cast<int>(L.cols()) != t) throw std::logic_error("lowest-weight space has the wrong dimension");
      Mat XL = power(X, static_cast<unsigned>(d - 1)) * L;
      Mat b = sigma_transpose(L, form->sigma) * form->gram * XL;
      // For su on even rows b is skew-Hermitian; -sqrt(-1) b is Hermitian with +sqrt(-1) counted as +1.
      if (family == Family::SU_pq && d % 2 == 0) b = Scalar(GaussianRational(0, -1)) * b;
      row.p = hermitian_plus_count(b, form->sigma);
      row.q = t - row.p;
    }
    rows.push_back(row);
  }
  return canonicalize(family, SignedYoungDiagram(rows));
}

int sl_r_orientation(const Mat& X, const Mat& H, const Mat& Y) {
  std::map<int, int> parts = partition_from_ranks(X);
  const std::size_t n = X.rows();
  Mat cols(n, n, X.ring());
  std::size_t c = 0;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const int d = it->first;
    Mat L = lowest_weight_space(X, H, Y, d);
    for (std::size_t j = 0; j < L.cols(); ++j) {
      Mat v = L.column(j);
      for (int l = 0; l < d; ++l, ++c) {
        for (std::size_t i = 0; i < n; ++i) cols(i, c) = v(i, 0);
        v = X * v;
      }
    }
  }
  return sgn(determinant(cols).as_rational()) > 0 ? 1 : -1;
}

bool reality_by_diagram(const TripleData& t) {
  const Family f = t.family.family;
  if (f == Family::SO_pq_identity)
    throw UnsupportedFamily("diagram equality does not decide reality in SO(p,q)^0");
  Mat mX = -t.X, mY = -t.Y;
  SignedYoungDiagram a = diagram_from_triple(t.X, t.H, t.Y, t.form, f);
  SignedYoungDiagram b = diagram_from_triple(mX, t.H, mY, t.form, f);
  if (!(a == b)) return false;
  if (f == Family::SL_R && partition_predicates(a.partition()).in_Peven)
    return sl_r_orientation(t.X, t.H, t.Y) == sl_r_orientation(mX, t.H, mY);
  return true;
}

WitnessReport verify_witness_against(const Mat& target, const Witness& w) {
  WitnessReport rep;
  try {
    const Mat& g = w.g;
    if (!g.is_square() || g.rows() != target.rows() || g.ring() != target.ring()) return rep;
    rep.anticommutes = g * target == -(target * g);
    Mat sq = g * g;
    switch (w.claimed_square) {
      case SquareClaim::identity: rep.square_ok = sq.is_identity(); break;
      case SquareClaim::minus_identity: rep.square_ok = (-sq).is_identity(); break;
      case SquareClaim::unspecified: rep.square_ok = true; break;
    }
    if (w.kind == WitnessKind::strong && w.claimed_square != SquareClaim::identity) rep.square_ok = false;
    if (w.kind == WitnessKind::projective && w.claimed_square == SquareClaim::unspecified) rep.square_ok = false;
    if (!is_invertible(g)) return rep;
    MembershipReport m = in_group(g, w.claimed_group);
    rep.form_ok = m.form_ok;
    rep.det_ok = m.det_ok;
    rep.component_ok = true;
    if (w.claimed_component) {
      int want = *w.claimed_component == ComponentClaim::identity ? 1 : -1;
      rep.component_ok = m.component_sign.has_value() && *m.component_sign == want;
    }
    if (w.claimed_group.family == Family::SO_pq_identity)
      rep.component_ok = rep.component_ok && m.component_sign.value_or(-1) == 1;
  } catch (const std::exception&) {
    // A malformed witness simply fails the remaining checks.
  }
  return rep;
}

WitnessReport verify_witness(const TripleData& t, const Witness& w) { return verify_witness_against(t.X, w); }

bool verify_group_level(const TripleData& t, const Witness& w) {
  Mat u = exp_nilpotent(t.X);
  if (!is_invertible(w.g)) return false;
  return (w.g * u * inverse(w.g) * u).is_identity();
}

CentralizerReport centralizer_checks(const TripleData& t, const Mat& tau) {
  if (!(tau * t.X == t.X * tau)) throw std::invalid_argument("centralizer_checks: tau does not commute with X");
  CentralizerReport rep;
  BlockForm bf = matrix_in_B(tau, t);
  rep.block_upper_triangular = bf.block_upper_triangular;

  Mat diag_B(bf.matrix.rows(), bf.matrix.cols(), tau.ring());
  for (const auto& blk : t.basis.blocks())
    for (std::size_t a = 0; a < blk.size; ++a)
      for (std::size_t b = 0; b < blk.size; ++b) diag_B(blk.start + a, blk.start + b) = bf.matrix(blk.start + a, blk.start + b);
  Mat tau_d = from_B_order(diag_B, t);
  rep.diagonal_part_commutes = tau_d * t.X == t.X * tau_d && tau_d * t.H == t.H * tau_d && tau_d * t.Y == t.Y * tau_d;

  rep.forms_preserved = true;
  if (t.form) {
    for (const auto& row : t.diagram.rows()) {
      const std::size_t tt = static_cast<std::size_t>(row.t);
      Mat A(tt, tt, tau.ring());
      Mat B(tt, tt, tau.ring());
      for (std::size_t a = 0; a < tt; ++a)
        for (std::size_t b = 0; b < tt; ++b) {
          A(a, b) = tau(t.basis.position(row.d, static_cast<int>(a), 0), t.basis.position(row.d, static_cast<int>(b), 0));
          B(a, b) = t.form->gram(t.basis.position(row.d, static_cast<int>(a), 0),
                                 t.basis.position(row.d, static_cast<int>(b), row.d - 1));
        }
      if (!(sigma_transpose(A, t.form->sigma) * B * A == B)) rep.forms_preserved = false;
    }
  }
  if (t.family.family == Family::SL_R && partition_predicates(t.diagram.partition()).in_Peven)
    rep.det_positive = sgn(determinant(tau).as_rational()) > 0;
  return rep;
}

}  // namespace nilreal
