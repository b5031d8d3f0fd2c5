#include "nilreal/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace nilreal {

Mat::Mat(std::size_t rows, std::size_t cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols, Scalar::zero(ring)) {}

Mat Mat::identity(std::size_t n, Ring ring) {
  Mat m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

Mat Mat::diagonal(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw std::invalid_argument("diagonal of empty list");
  Ring r = entries.front().ring();
  Mat m(entries.size(), entries.size(), r);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix literal");
  Ring r = Ring::R;
  for (const auto& row : rows)
    for (const auto& s : row)
      if (static_cast<int>(s.ring()) > static_cast<int>(r)) r = s.ring();
  Mat m(rows.size(), rows.front().size(), r);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::unit_vector(std::size_t n, std::size_t i, Ring ring) {
  Mat v(n, 1, ring);
  v(i, 0) = Scalar::one(ring);
  return v;
}

const Scalar& Mat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(i, j);
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  (*this)(i, j) = s.ring() == ring_ ? s : s.embed(ring_);
}

Mat Mat::embed(Ring target) const {
  Mat m(rows_, cols_, target);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].embed(target);
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_, ring_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::conj() const {
  Mat m = *this;
  for (auto& s : m.data_) s = s.conj();
  return m;
}

Mat Mat::column(std::size_t j) const { return block(0, j, rows_, 1); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Mat m(nr, nc, ring_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const { return is_square() && *this == identity(rows_, ring_); }

Scalar Mat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Scalar t = Scalar::zero(ring_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

void Mat::require_compatible(const Mat& o, const char* what) const {
  if (ring_ != o.ring_) throw std::invalid_argument(std::string(what) + ": ring mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

Mat& Mat::operator+=(const Mat& o) {
  require_compatible(o, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_compatible(o, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.ring_ != b.ring_) throw std::invalid_argument("matrix product: ring mismatch");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Mat m(a.rows_, b.cols_, a.ring_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) m(i, j) += aik * bkj;
      }
    }
  return m;
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat r = m;
  Scalar t = s.ring() == m.ring_ ? s : s.embed(m.ring_);
  for (auto& e : r.data_) e = t * e;
  return r;
}

Mat operator*(const Mat& m, const Scalar& s) {
  Mat r = m;
  Scalar t = s.ring() == m.ring_ ? s : s.embed(m.ring_);
  for (auto& e : r.data_) e = e * t;
  return r;
}

Mat operator*(const Rational& q, const Mat& m) {
  Mat r = m;
  for (auto& e : r.data_) e *= q;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat power(const Mat& m, unsigned k) {
  if (!m.is_square()) throw std::invalid_argument("power of non-square matrix");
  Mat r = Mat::identity(m.rows(), m.ring());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

Mat direct_sum(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct sum of nothing");
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat m(r, c, blocks.front().ring());
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.set(r0 + i, c0 + j, b(i, j));
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

RowEchelon row_echelon(const Mat& m) {
  RowEchelon out{m, {}};
  Mat& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Scalar inv = a(row, col).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = inv * a(row, j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Mat& m) { return row_echelon(m).pivot_cols.size(); }

Mat kernel(const Mat& m) {
  RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(m.cols(), free_cols.size(), m.ring());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = Scalar::one(m.ring());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) basis(e.pivot_cols[r], k) = -e.reduced(r, f);
  }
  return basis;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  RowEchelon e = row_echelon(hstack(m, Mat::identity(n, m.ring())));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat stack_rows(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols() || a.ring() != b.ring()) throw std::invalid_argument("stack_rows mismatch");
  Mat m(a.rows() + b.rows(), a.cols(), a.ring());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.ring() != b.ring()) throw std::invalid_argument("hstack mismatch");
  Mat m(a.rows(), a.cols() + b.cols(), a.ring());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Scalar determinant(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.ring() == Ring::H) throw std::invalid_argument("determinant over H is undefined; use reduced_norm");
  const std::size_t n = m.rows();
  const Ring r = m.ring();
  if (n == 0) return Scalar::one(r);
  Mat a = m;
  Scalar prev = Scalar::one(r);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return Scalar::zero(r);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      negate = !negate;
    }
    Scalar prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) * prev_inv;
    prev = a(k, k);
  }
  Scalar d = a(n - 1, n - 1);
  return negate ? -d : d;
}

Mat complex_embedding(const Mat& m) {
  if (m.ring() != Ring::H) throw std::invalid_argument("complex_embedding expects a quaternionic matrix");
  Mat c(2 * m.rows(), 2 * m.cols(), Ring::C);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      ComplexBlock b = quat_to_complex_block(m(i, j).quaternion());
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) c(2 * i + u, 2 * j + v) = Scalar(b[u][v]);
    }
  return c;
}

Rational reduced_norm(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("reduced norm of non-square matrix");
  return determinant(complex_embedding(m.embed(Ring::H))).as_rational();
}

bool is_nilpotent(const Mat& m) {
  if (!m.is_square()) return false;
  return power(m, static_cast<unsigned>(m.rows())).is_zero();
}

Mat exp_nilpotent(const Mat& x) {
  if (!x.is_square()) throw std::invalid_argument("exp of non-square matrix");
  Mat result = Mat::identity(x.rows(), x.ring());
  Mat term = result;
  for (std::size_t k = 1; k <= x.rows(); ++k) {
    term = make_rational(1, static_cast<long>(k)) * (term * x);
    if (term.is_zero()) return result;
    result += term;
  }
  throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace nilreal
