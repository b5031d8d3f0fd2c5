#ifndef NILREAL_TEST_SUPPORT_HPP
#define NILREAL_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "nilreal/representative.hpp"

namespace nilreal::testing {

/// Every family instance whose matrix size (over its own ring) is at most max_size.
/// Signature families run over all p + q = size; sp(n,C) and sp(n,R) over even sizes.
inline std::vector<FamilySpec> sweep_families(int max_size) {
  std::vector<FamilySpec> out;
  for (int s = 1; s <= max_size; ++s) {
    out.push_back(FamilySpec::sl_r(s));
    out.push_back(FamilySpec::sl_c(s));
    out.push_back(FamilySpec::sl_h(s));
    out.push_back(FamilySpec::so_c(s));
    out.push_back(FamilySpec{Family::O_C, s, 0, 0});
    out.push_back(FamilySpec::so_star(s));
    if (s % 2 == 0) {
      out.push_back(FamilySpec::sp_c(s / 2));
      out.push_back(FamilySpec::sp_r(s / 2));
    }
    for (int p = s; p >= 0; --p) {
      out.push_back(FamilySpec::su(p, s - p));
      out.push_back(FamilySpec::so(p, s - p));
      out.push_back(FamilySpec::so_identity(p, s - p));
      out.push_back(FamilySpec::sp_pq(p, s - p));
    }
  }
  return out;
}

/// Basis of {Z in gl_n : Z X = X Z} over R or C, found by solving the linear system on n^2 unknowns.
inline std::vector<Mat> gl_centralizer_basis(const Mat& X) {
  const std::size_t n = X.rows();
  const Ring r = X.ring();
  Mat sys(n * n, n * n, r);
  // Row (i, j) of Z X - X Z = sum_k Z_ik X_kj - X_ik Z_kj.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        sys(i * n + j, i * n + k) += X(k, j);
        sys(i * n + j, k * n + j) -= X(i, k);
      }
  Mat ker = kernel(sys);
  std::vector<Mat> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Mat z(n, n, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z(i, j) = ker(i * n + j, c);
    basis.push_back(z);
  }
  return basis;
}

/// Random integer combination of the given matrices.
inline Mat random_combination(const std::vector<Mat>& basis, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  Mat out(basis.front().rows(), basis.front().cols(), basis.front().ring());
  for (const auto& b : basis) out += Scalar::from_int(b.ring(), d(rng)) * b;
  return out;
}

}  // namespace nilreal::testing

#endif  // NILREAL_TEST_SUPPORT_HPP
