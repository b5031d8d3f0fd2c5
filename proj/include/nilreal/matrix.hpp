#ifndef NILREAL_MATRIX_HPP
#define NILREAL_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nilreal/scalar.hpp"

namespace nilreal {

/// Dense row-major matrix whose entries all live in one ring.
/// Vectors are columns and scalars act on them from the right, so over H the
/// space D^n is a right vector space and matrices act by left multiplication.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Ring ring);

  static Mat zero(std::size_t n, Ring ring) { return Mat(n, n, ring); }
  static Mat identity(std::size_t n, Ring ring);
  static Mat diagonal(const std::vector<Scalar>& entries);
  /// Builds a matrix from nested row data, lifting every entry into the largest ring present.
  static Mat from_rows(const std::vector<std::vector<Scalar>>& rows);
  /// Column vector e_i of length n.
  static Mat unit_vector(std::size_t n, std::size_t i, Ring ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Ring ring() const { return ring_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Bounds-checked access; throws std::out_of_range.
  const Scalar& at(std::size_t i, std::size_t j) const;
  /// Stores s, lifting it into the matrix ring. Throws if s lives in a larger ring.
  void set(std::size_t i, std::size_t j, const Scalar& s);

  Mat embed(Ring target) const;
  Mat transpose() const;
  /// Entrywise sigma (complex or quaternionic conjugation).
  Mat conj() const;
  Mat column(std::size_t j) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  /// s * M multiplies every entry on the left by s.
  friend Mat operator*(const Scalar& s, const Mat& m);
  /// M * s multiplies every entry on the right by s.
  friend Mat operator*(const Mat& m, const Scalar& s);
  friend Mat operator*(const Rational& r, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string to_string() const;

 private:
  void require_compatible(const Mat& o, const char* what) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Ring ring_ = Ring::R;
  std::vector<Scalar> data_;
};

Mat commutator(const Mat& a, const Mat& b);
Mat power(const Mat& m, unsigned k);
/// Direct sum (block diagonal) of the given blocks.
Mat direct_sum(const std::vector<Mat>& blocks);

/// Reduced row echelon form built from left row operations, valid over H.
struct RowEchelon {
  Mat reduced;
  std::vector<std::size_t> pivot_cols;
};
RowEchelon row_echelon(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis of {x : m x = 0} as the columns of the returned matrix (possibly 0 columns).
Mat kernel(const Mat& m);
/// Throws std::domain_error if m is singular.
Mat inverse(const Mat& m);
bool is_invertible(const Mat& m);
/// Vertical concatenation; kernel(stack_rows(a, b)) = ker a ∩ ker b.
Mat stack_rows(const Mat& a, const Mat& b);
/// Horizontal concatenation.
Mat hstack(const Mat& a, const Mat& b);

/// Exact determinant over R or C by Bareiss elimination.
Scalar determinant(const Mat& m);
/// Replaces each quaternion entry by its 2x2 complex block.
Mat complex_embedding(const Mat& m);
/// Determinant of the complex embedding of a quaternionic matrix.
Rational reduced_norm(const Mat& m);

/// True iff m^k = 0 for some k <= dim.
bool is_nilpotent(const Mat& m);
/// sum_k X^k / k!. Throws std::invalid_argument if X is not nilpotent.
Mat exp_nilpotent(const Mat& x);

}  // namespace nilreal

#endif  // NILREAL_MATRIX_HPP
