#ifndef NILREAL_REPRESENTATIVE_HPP
#define NILREAL_REPRESENTATIVE_HPP

#include <optional>
#include <vector>

#include "nilreal/diagram.hpp"

namespace nilreal {

/// Basis vector X^l v^d_j (j is 0-based).
struct ChainIndex {
  int d = 0;
  int j = 0;
  int l = 0;
  friend bool operator==(const ChainIndex&, const ChainIndex&) = default;
};

/// A block B^l(d) = {X^l v^d_j : j} of the ordered basis B.
struct BasisBlock {
  int d = 0;
  int l = 0;
  std::size_t start = 0;  // first position inside B
  std::size_t size = 0;   // t_d
};

/// Two orderings of the adapted basis. Matrices of TripleData are written in
/// chain order: parts by decreasing d, then j, then l = 0..d-1. The ordered
/// basis B = B(1) v ... v B(d_1) groups vectors by k = d - l.
class BasisIndex {
 public:
  BasisIndex() = default;
  explicit BasisIndex(const Partition& p);

  std::size_t size() const { return chain_.size(); }
  const ChainIndex& at(std::size_t chain_pos) const { return chain_[chain_pos]; }
  std::size_t position(int d, int j, int l) const;
  /// b_order()[k] is the chain position of the k-th vector of B.
  const std::vector<std::size_t>& b_order() const { return b_order_; }
  const std::vector<BasisBlock>& blocks() const { return blocks_; }

 private:
  std::vector<ChainIndex> chain_;
  std::vector<std::size_t> b_order_;
  std::vector<BasisBlock> blocks_;
  Partition partition_;
};

struct TripleData {
  FamilySpec family;
  SignedYoungDiagram diagram;
  int n = 0;
  Mat X, H, Y;
  std::optional<FormSpec> form;
  GroupSpec group;
  BasisIndex basis;

  Ring ring() const { return X.ring(); }
};

/// The value <v_j, X^{d-1} v_j'> used for rows of length d; defines the Gram matrix.
Scalar l0_form_value(Family f, const SignedPart& row, int j, int jp);

/// Throws std::invalid_argument when the diagram is not valid for the family.
TripleData build_representative(const FamilySpec& fam, const SignedYoungDiagram& d);

struct BlockForm {
  Mat matrix;
  bool block_upper_triangular = false;
  std::vector<Mat> diagonal_blocks;
  /// Set when tau X = eps X tau for eps = +1 or -1.
  std::optional<int> epsilon;
  /// With epsilon set: every block of B^l(d) equals eps^(d-1-l) times the block of B^{d-1}(d).
  bool epsilon_pattern = true;
};

/// Rewrites tau (given in chain order) in the ordered basis B.
BlockForm matrix_in_B(const Mat& tau, const TripleData& t);

/// Converts a matrix written in B order back to chain order.
Mat from_B_order(const Mat& m, const TripleData& t);

}  // namespace nilreal

#endif  // NILREAL_REPRESENTATIVE_HPP
