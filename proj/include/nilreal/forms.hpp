#ifndef NILREAL_FORMS_HPP
#define NILREAL_FORMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilreal/matrix.hpp"

namespace nilreal {

enum class Sigma { identity, conjugation };

/// An epsilon-sigma Hermitian form <x, y> = sigma(x)^t gram y.
struct FormSpec {
  Mat gram;
  Sigma sigma = Sigma::identity;
  int epsilon = 1;

  /// Throws std::invalid_argument unless gram is square, invertible and
  /// epsilon-sigma symmetric.
  void validate() const;
};

/// sigma(m)^t for the given sigma.
Mat sigma_transpose(const Mat& m, Sigma sigma);

Scalar form_eval(const FormSpec& f, const Mat& x, const Mat& y);

/// I_{p,q} = diag(1 (p times), -1 (q times)) over the given ring.
Mat standard_ipq(int p, int q, Ring ring = Ring::R);
/// J_n = [[0, -I_n], [I_n, 0]].
Mat standard_j(int n, Ring ring = Ring::R);

enum class Family {
  SL_R,
  SL_C,
  SL_H,
  GL_R,
  GL_C,
  GL_H,
  SO_C,
  O_C,
  Sp_C,
  SU_pq,
  SO_pq,
  SO_pq_identity,
  SOstar,
  Sp_nR,
  Sp_pq,
};

enum class DetCondition { det_one, nrd_one, none };

std::string family_name(Family f);
Ring family_ring(Family f);
/// The (sigma, epsilon) pair of the family's invariant form, or nullopt for the linear families.
std::optional<std::pair<Sigma, int>> family_form_type(Family f);
DetCondition family_det_condition(Family f);

struct GroupSpec {
  Family family = Family::GL_C;
  std::optional<FormSpec> form;
  DetCondition det_condition = DetCondition::none;

  /// Checks ring, sigma, epsilon and det condition against the family table.
  static GroupSpec make(Family family, std::optional<FormSpec> form = std::nullopt);
  Ring ring() const { return family_ring(family); }
};

bool in_algebra(const Mat& z, const GroupSpec& g);

struct MembershipReport {
  bool form_ok = false;
  bool det_ok = false;
  std::optional<int> component_sign;
};

/// Throws std::domain_error when g is singular.
MembershipReport in_group(const Mat& g, const GroupSpec& group);

/// Result of congruence diagonalization: sigma(basis)^t gram basis = diag(diagonal).
struct Congruence {
  Mat basis;
  std::vector<Rational> diagonal;
};

/// Diagonalizes a Hermitian (epsilon = +1) form. Works over R, C and H.
/// Throws std::invalid_argument if the form is not Hermitian.
Congruence congruence_diagonalize(const FormSpec& f);

/// Sylvester signature (p, q) of a Hermitian form. For quaternionic forms the
/// count is taken on the complex embedding and halved.
std::pair<int, int> signature(const FormSpec& f);

/// Sign of det of (projection to a maximal positive subspace) o g restricted to it.
/// Throws std::invalid_argument if g does not preserve the form.
int so_component_sign(const Mat& g, const FormSpec& f);

}  // namespace nilreal

#endif  // NILREAL_FORMS_HPP
