#include "nilreal/representative.hpp"

#include <stdexcept>

namespace nilreal {

BasisIndex::BasisIndex(const Partition& p) : partition_(p) {
  for (const auto& part : p.parts())
    for (int j = 0; j < part.t; ++j)
      for (int l = 0; l < part.d; ++l) chain_.push_back({part.d, j, l});
  for (int k = 1; k <= p.largest(); ++k)
    for (const auto& part : p.parts()) {
      if (part.d < k) continue;
      int l = part.d - k;
      blocks_.push_back({part.d, l, b_order_.size(), static_cast<std::size_t>(part.t)});
      for (int j = 0; j < part.t; ++j) b_order_.push_back(position(part.d, j, l));
    }
}

std::size_t BasisIndex::position(int d, int j, int l) const {
  std::size_t pos = 0;
  for (const auto& part : partition_.parts()) {
    if (part.d == d) {
      if (j < 0 || j >= part.t || l < 0 || l >= d) throw std::out_of_range("chain index out of range");
      return pos + static_cast<std::size_t>(j * d + l);
    }
    pos += static_cast<std::size_t>(part.d * part.t);
  }
  throw std::out_of_range("no part of size " + std::to_string(d));
}

Scalar l0_form_value(Family f, const SignedPart& row, int j, int jp) {
  const Ring r = family_ring(f);
  const bool odd = row.d % 2 == 1;
  const int half = row.t / 2;
  auto diag_sign = [&](const Scalar& unit) {
    if (j != jp) return Scalar::zero(r);
    return j < row.p ? unit : -unit;
  };
  // Skew pairing <v_j, X^{d-1} v_{j+t/2}> = 1, <v_{j+t/2}, X^{d-1} v_j> = -1.
  auto hyperbolic = [&]() {
    if (jp == j + half && j < half) return Scalar::one(r);
    if (j == jp + half && jp < half) return Scalar::from_int(r, -1);
    return Scalar::zero(r);
  };
  auto constant_diag = [&](const Scalar& c) { return j == jp ? c : Scalar::zero(r); };
  switch (f) {
    case Family::SO_C:
    case Family::O_C:
      return odd ? constant_diag(Scalar::one(r)) : hyperbolic();
    case Family::Sp_C:
      return odd ? hyperbolic() : constant_diag(Scalar::one(r));
    case Family::SU_pq:
      return diag_sign(odd ? Scalar::one(r) : Scalar::imag_unit(r));
    case Family::SO_pq:
    case Family::SO_pq_identity:
      return odd ? diag_sign(Scalar::one(r)) : hyperbolic();
    case Family::SOstar:
      return odd ? constant_diag(Scalar(Quaternion::j())) : diag_sign(Scalar::one(r));
    case Family::Sp_nR:
      return odd ? hyperbolic() : diag_sign(Scalar::one(r));
    case Family::Sp_pq:
      return odd ? diag_sign(Scalar::one(r)) : constant_diag(Scalar(Quaternion::j()));
    default:
      throw std::invalid_argument("family " + family_name(f) + " has no invariant form");
  }
}

TripleData build_representative(const FamilySpec& fam, const SignedYoungDiagram& dg) {
  if (!validate_diagram(fam, dg))
    throw std::invalid_argument("diagram " + dg.to_string() + " is not valid for " + fam.to_string());
  const Ring r = family_ring(fam.family);
  TripleData t;
  t.family = fam;
  t.diagram = canonicalize(fam.family, dg);
  t.n = dg.total();
  t.basis = BasisIndex(dg.partition());
  const std::size_t n = static_cast<std::size_t>(t.n);
  t.X = Mat(n, n, r);
  t.H = Mat(n, n, r);
  t.Y = Mat(n, n, r);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const ChainIndex& c = t.basis.at(pos);
    t.H(pos, pos) = Scalar::from_int(r, 2 * c.l + 1 - c.d);
    if (c.l + 1 < c.d) t.X(pos + 1, pos) = Scalar::one(r);
    if (c.l > 0) t.Y(pos - 1, pos) = Scalar::from_int(r, c.l * (c.d - c.l));
  }
  auto type = family_form_type(fam.family);
  if (type) {
    Mat gram(n, n, r);
    for (const auto& row : t.diagram.rows())
      for (int j = 0; j < row.t; ++j)
        for (int jp = 0; jp < row.t; ++jp) {
          Scalar c = l0_form_value(fam.family, row, j, jp);
          if (c.is_zero()) continue;
          for (int l = 0; l < row.d; ++l) {
            Scalar v = l % 2 == 0 ? c : -c;
            gram(t.basis.position(row.d, j, l), t.basis.position(row.d, jp, row.d - 1 - l)) = v;
          }
        }
    t.form = FormSpec{gram, type->first, type->second};
  }
  t.group = GroupSpec::make(fam.family, t.form);
  return t;
}

BlockForm matrix_in_B(const Mat& tau, const TripleData& t) {
  const std::size_t n = static_cast<std::size_t>(t.n);
  if (!tau.is_square() || tau.rows() != n) throw std::invalid_argument("matrix_in_B: dimension mismatch");
  const auto& order = t.basis.b_order();
  BlockForm out;
  out.matrix = Mat(n, n, tau.ring());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.matrix(a, b) = tau(order[a], order[b]);

  const auto& blocks = t.basis.blocks();
  std::vector<std::size_t> block_of(n);
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t i = 0; i < blocks[k].size; ++i) block_of[blocks[k].start + i] = k;
  out.block_upper_triangular = true;
  for (std::size_t a = 0; a < n && out.block_upper_triangular; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (block_of[a] > block_of[b] && !out.matrix(a, b).is_zero()) {
        out.block_upper_triangular = false;
        break;
      }
  for (const auto& blk : blocks) out.diagonal_blocks.push_back(out.matrix.block(blk.start, blk.start, blk.size, blk.size));

  Mat X = t.X.ring() == tau.ring() ? t.X : t.X.embed(tau.ring());
  if (tau * X == -(X * tau)) {
    out.epsilon = -1;
  } else if (tau * X == X * tau) {
    out.epsilon = 1;
  }
  if (out.epsilon) {
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const auto& blk = blocks[k];
      std::size_t top = 0;
      while (!(blocks[top].d == blk.d && blocks[top].l == blk.d - 1)) ++top;
      bool negate = *out.epsilon == -1 && (blk.d - 1 - blk.l) % 2 == 1;
      Mat expect = negate ? -out.diagonal_blocks[top] : out.diagonal_blocks[top];
      if (!(out.diagonal_blocks[k] == expect)) out.epsilon_pattern = false;
    }
  }
  return out;
}

Mat from_B_order(const Mat& m, const TripleData& t) {
  const auto& order = t.basis.b_order();
  Mat out(m.rows(), m.cols(), m.ring());
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) out(order[a], order[b]) = m(a, b);
  return out;
}

}  // namespace nilreal
