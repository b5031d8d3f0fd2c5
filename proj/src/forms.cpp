#include "nilreal/forms.hpp"

#include <stdexcept>

namespace nilreal {

Mat sigma_transpose(const Mat& m, Sigma sigma) {
  return sigma == Sigma::conjugation ? m.conj().transpose() : m.transpose();
}

void FormSpec::validate() const {
  if (!gram.is_square()) throw std::invalid_argument("Gram matrix is not square");
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  if (!(Scalar::from_int(gram.ring(), epsilon) * sigma_transpose(gram, sigma) == gram))
    throw std::invalid_argument("Gram matrix is not epsilon-sigma symmetric");
  if (!is_invertible(gram)) throw std::invalid_argument("Gram matrix is singular");
}

Scalar form_eval(const FormSpec& f, const Mat& x, const Mat& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != f.gram.rows() || y.rows() != f.gram.rows())
    throw std::invalid_argument("form_eval: dimension mismatch");
  return (sigma_transpose(x, f.sigma) * f.gram * y)(0, 0);
}

Mat standard_ipq(int p, int q, Ring ring) {
  Mat m(p + q, p + q, ring);
  for (int i = 0; i < p + q; ++i) m(i, i) = Scalar::from_int(ring, i < p ? 1 : -1);
  return m;
}

Mat standard_j(int n, Ring ring) {
  Mat m(2 * n, 2 * n, ring);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = Scalar::from_int(ring, -1);
    m(n + i, i) = Scalar::one(ring);
  }
  return m;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SL_R: return "sl_r";
    case Family::SL_C: return "sl_c";
    case Family::SL_H: return "sl_h";
    case Family::GL_R: return "gl_r";
    case Family::GL_C: return "gl_c";
    case Family::GL_H: return "gl_h";
    case Family::SO_C: return "so_c";
    case Family::O_C: return "o_c";
    case Family::Sp_C: return "sp_c";
    case Family::SU_pq: return "su";
    case Family::SO_pq: return "so";
    case Family::SO_pq_identity: return "so_identity";
    case Family::SOstar: return "so_star";
    case Family::Sp_nR: return "sp_r";
    case Family::Sp_pq: return "sp_hq";
  }
  return "?";
}

Ring family_ring(Family f) {
  switch (f) {
    case Family::SL_R:
    case Family::GL_R:
    case Family::SO_pq:
    case Family::SO_pq_identity:
    case Family::Sp_nR:
      return Ring::R;
    case Family::SL_C:
    case Family::GL_C:
    case Family::SO_C:
    case Family::O_C:
    case Family::Sp_C:
    case Family::SU_pq:
      return Ring::C;
    case Family::SL_H:
    case Family::GL_H:
    case Family::SOstar:
    case Family::Sp_pq:
      return Ring::H;
  }
  return Ring::R;
}

std::optional<std::pair<Sigma, int>> family_form_type(Family f) {
  switch (f) {
    case Family::SO_C:
    case Family::O_C:
    case Family::SO_pq:
    case Family::SO_pq_identity:
      return std::make_pair(Sigma::identity, 1);
    case Family::Sp_C:
    case Family::Sp_nR:
      return std::make_pair(Sigma::identity, -1);
    case Family::SU_pq:
    case Family::Sp_pq:
      return std::make_pair(Sigma::conjugation, 1);
    case Family::SOstar:
      return std::make_pair(Sigma::conjugation, -1);
    default:
      return std::nullopt;
  }
}

DetCondition family_det_condition(Family f) {
  switch (f) {
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
    case Family::O_C:
      return DetCondition::none;
    case Family::SL_H:
    case Family::SOstar:
    case Family::Sp_pq:
      return DetCondition::nrd_one;
    default:
      return DetCondition::det_one;
  }
}

GroupSpec GroupSpec::make(Family family, std::optional<FormSpec> form) {
  auto type = family_form_type(family);
  if (type.has_value() != form.has_value())
    throw std::invalid_argument("family " + family_name(family) +
                                (type ? " requires an invariant form" : " takes no invariant form"));
  if (form) {
    if (form->gram.ring() != family_ring(family))
      throw std::invalid_argument("form ring does not match family " + family_name(family));
    if (form->sigma != type->first || form->epsilon != type->second)
      throw std::invalid_argument("form type does not match family " + family_name(family));
    form->validate();
  }
  return GroupSpec{family, std::move(form), family_det_condition(family)};
}

namespace {

void require_square_in(const Mat& m, const GroupSpec& g, const char* what) {
  if (!m.is_square()) throw std::invalid_argument(std::string(what) + ": matrix not square");
  if (m.ring() != g.ring()) throw std::invalid_argument(std::string(what) + ": wrong ring");
  if (g.form && g.form->gram.rows() != m.rows())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

bool has_trace_condition(Family f) {
  return f != Family::GL_R && f != Family::GL_C && f != Family::GL_H && f != Family::O_C;
}

}  // namespace

bool in_algebra(const Mat& z, const GroupSpec& g) {
  require_square_in(z, g, "in_algebra");
  if (g.form) {
    const FormSpec& f = *g.form;
    if (!(sigma_transpose(z, f.sigma) * f.gram + f.gram * z).is_zero()) return false;
  }
  if (has_trace_condition(g.family)) {
    Scalar t = z.trace();
    // Over H only the reduced trace 2 Re tr(Z) is meaningful.
    if (g.ring() == Ring::H ? sgn(t.real_part()) != 0 : !t.is_zero()) return false;
  }
  return true;
}

MembershipReport in_group(const Mat& g, const GroupSpec& group) {
  require_square_in(g, group, "in_group");
  if (!is_invertible(g)) throw std::domain_error("in_group: matrix is singular");
  MembershipReport rep;
  rep.form_ok = true;
  if (group.form) {
    const FormSpec& f = *group.form;
    rep.form_ok = sigma_transpose(g, f.sigma) * f.gram * g == f.gram;
  }
  switch (group.det_condition) {
    case DetCondition::none:
      rep.det_ok = true;
      break;
    case DetCondition::det_one:
      rep.det_ok = determinant(g) == Scalar::one(g.ring());
      break;
    case DetCondition::nrd_one:
      rep.det_ok = reduced_norm(g) == 1;
      break;
  }
  if ((group.family == Family::SO_pq || group.family == Family::SO_pq_identity) && rep.form_ok)
    rep.component_sign = so_component_sign(g, *group.form);
  return rep;
}

Congruence congruence_diagonalize(const FormSpec& f) {
  if (f.epsilon != 1) throw std::invalid_argument("signature requires a Hermitian (epsilon = +1) form");
  const Mat& g0 = f.gram;
  if (!g0.is_square() || !(sigma_transpose(g0, f.sigma) == g0))
    throw std::invalid_argument("Gram matrix is not Hermitian");
  if (f.sigma == Sigma::identity && g0.ring() != Ring::R)
    throw std::invalid_argument("signature of a complex-bilinear form is undefined");

  const std::size_t n = g0.rows();
  const Ring r = g0.ring();
  Mat a = g0;
  Mat s = Mat::identity(n, r);
  auto sig = [&](const Scalar& x) { return f.sigma == Sigma::conjugation ? x.conj() : x; };
  // Basis change e_k <- e_k + e_i * beta applied as a congruence on a.
  auto add_multiple = [&](std::size_t k, std::size_t i, const Scalar& beta) {
    for (std::size_t row = 0; row < n; ++row) {
      a(row, k) += a(row, i) * beta;
      s(row, k) += s(row, i) * beta;
    }
    Scalar sb = sig(beta);
    for (std::size_t col = 0; col < n; ++col) a(k, col) += sb * a(i, col);
  };

  std::vector<Rational> diag;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && !a(i, i).is_zero()) piv = i;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw std::invalid_argument("Gram matrix is degenerate");
      // e_i + e_j * sigma(a_ij) has norm 2 |a_ij|^2 > 0.
      add_multiple(pi, pj, sig(a(pi, pj)));
      piv = pi;
    }
    Scalar inv = a(piv, piv).inverse();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == piv || done[k] || a(piv, k).is_zero()) continue;
      add_multiple(k, piv, -(inv * a(piv, k)));
    }
    done[piv] = true;
  }
  for (std::size_t i = 0; i < n; ++i) diag.push_back(a(i, i).as_rational());
  return {s, diag};
}

std::pair<int, int> signature(const FormSpec& f) {
  if (f.gram.ring() == Ring::H) {
    if (f.sigma != Sigma::conjugation || f.epsilon != 1)
      throw std::invalid_argument("quaternionic signature needs a Hermitian form");
    auto [p, q] = signature(FormSpec{complex_embedding(f.gram), Sigma::conjugation, 1});
    return {p / 2, q / 2};
  }
  Congruence c = congruence_diagonalize(f);
  int p = 0, q = 0;
  for (const auto& d : c.diagonal) (sgn(d) > 0 ? p : q) += 1;
  return {p, q};
}

int so_component_sign(const Mat& g, const FormSpec& f) {
  if (g.ring() != Ring::R || f.gram.ring() != Ring::R)
    throw std::invalid_argument("so_component_sign expects real matrices");
  if (!(g.transpose() * f.gram * g == f.gram))
    throw std::invalid_argument("so_component_sign: g does not preserve the form");
  Congruence c = congruence_diagonalize(f);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < c.diagonal.size(); ++i)
    if (sgn(c.diagonal[i]) > 0) pos.push_back(i);
  if (pos.empty()) return 1;  // SO(0, q) is connected
  Mat gs = g * c.basis;
  Mat st = c.basis.transpose() * f.gram;
  Mat m(pos.size(), pos.size(), Ring::R);
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b) {
      Rational v = 0;
      for (std::size_t k = 0; k < g.rows(); ++k)
        v += st(pos[a], k).real_part() * gs(k, pos[b]).real_part();
      m(a, b) = Scalar(Rational(v / c.diagonal[pos[a]]));
    }
  return sgn(determinant(m).as_rational()) > 0 ? 1 : -1;
}

}  // namespace nilreal
