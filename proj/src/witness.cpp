#include "nilreal/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nilreal {

std::string kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::strong: return "strong";
    case WitnessKind::real: return "real";
    case WitnessKind::projective: return "projective";
  }
  return "?";
}

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

/// Sign of the diagonal witness on X^l v^d: flips on rows of length 3 mod 4.
int row_sign(int d, int l) { return d % 4 == 3 ? parity_sign(l + 1) : parity_sign(l); }

/// Writes g(X^l v^d_src) = X^l v^d_dst * c for every l.
void map_chain(Mat& g, const TripleData& t, int d, int src, int dst, const std::function<Scalar(int)>& coeff) {
  for (int l = 0; l < d; ++l) g(t.basis.position(d, dst, l), t.basis.position(d, src, l)) = coeff(l);
}

void negate_chain(Mat& g, const TripleData& t, int d, int j) {
  for (int l = 0; l < d; ++l) {
    std::size_t col = t.basis.position(d, j, l);
    for (std::size_t r = 0; r < g.rows(); ++r) g(r, col) = -g(r, col);
  }
}

Mat diagonal_base(const TripleData& t) {
  const Ring r = t.ring();
  Mat g(t.n, t.n, r);
  for (const auto& row : t.diagram.rows())
    for (int j = 0; j < row.t; ++j)
      map_chain(g, t, row.d, j, j, [&](int l) { return Scalar::from_int(r, row_sign(row.d, l)); });
  return g;
}

/// Odd rows diagonal, even rows swapped j <-> j + t/2 with coefficient (-1)^l.
Mat odd_diagonal_even_swap(const TripleData& t) {
  const Ring r = t.ring();
  Mat g(t.n, t.n, r);
  for (const auto& row : t.diagram.rows()) {
    if (row.d % 2 == 1) {
      for (int j = 0; j < row.t; ++j)
        map_chain(g, t, row.d, j, j, [&](int l) { return Scalar::from_int(r, row_sign(row.d, l)); });
      continue;
    }
    if (row.t % 2) throw std::logic_error("even row with odd multiplicity cannot be swapped");
    int h = row.t / 2;
    for (int j = 0; j < h; ++j) {
      auto c = [&](int l) { return Scalar::from_int(r, parity_sign(l)); };
      map_chain(g, t, row.d, j, j + h, c);
      map_chain(g, t, row.d, j + h, j, c);
    }
  }
  return g;
}

void require_family(const TripleData& t, std::initializer_list<Family> allowed, const char* op) {
  for (Family f : allowed)
    if (t.family.family == f) return;
  throw std::invalid_argument(std::string(op) + ": wrong family " + family_name(t.family.family));
}

void require_even_rows_balanced(const TripleData& t, const char* family_label) {
  for (const auto& row : t.diagram.rows())
    if (row.d % 2 == 0 && row.p != row.q)
      throw NotReal(std::string(family_label) + ": even part " + std::to_string(row.d) + " has p != q in " +
                    t.diagram.to_string());
}

Witness make(Mat g, SquareClaim sq, GroupSpec group, WitnessKind kind,
             std::optional<ComponentClaim> comp = std::nullopt) {
  return Witness{std::move(g), sq, std::move(group), comp, kind};
}

Family gl_of(Ring r) {
  switch (r) {
    case Ring::R: return Family::GL_R;
    case Ring::C: return Family::GL_C;
    case Ring::H: return Family::GL_H;
  }
  return Family::GL_C;
}

ComponentClaim predicted_component(const SignedYoungDiagram& dg) {
  return so_witness_component_parity(dg) == 0 ? ComponentClaim::identity : ComponentClaim::non_identity;
}

Witness sl_witness(const TripleData& t, Family group_family) {
  Mat g = diagonal_base(t);
  if (determinant(g) == Scalar::from_int(t.ring(), -1)) {
    const auto& rows = t.diagram.rows();
    auto it = std::find_if(rows.rbegin(), rows.rend(), [](const SignedPart& r) { return r.d % 2 == 1; });
    if (it == rows.rend()) throw std::logic_error("determinant fix needs an odd part");
    negate_chain(g, t, it->d, 0);
  }
  return make(std::move(g), SquareClaim::identity, GroupSpec::make(group_family), WitnessKind::strong);
}

}  // namespace

Witness witness_general_linear(const TripleData& t) {
  return make(diagonal_base(t), SquareClaim::identity, GroupSpec::make(gl_of(t.ring())), WitnessKind::strong);
}

Witness witness_sl_H(const TripleData& t) {
  require_family(t, {Family::SL_H}, "witness_sl_H");
  return make(diagonal_base(t), SquareClaim::identity, t.group, WitnessKind::strong);
}

Witness witness_sl_C(const TripleData& t) {
  require_family(t, {Family::SL_C}, "witness_sl_C");
  if (!partition_predicates(t.diagram.partition()).in_Ptilde_e) return sl_witness(t, Family::SL_C);
  // Every part is even here; g(X^l v) = (-1)^l sqrt(-1) X^l v squares to -Id.
  const Scalar i = Scalar::imag_unit(Ring::C);
  Mat g(t.n, t.n, Ring::C);
  for (const auto& row : t.diagram.rows())
    for (int j = 0; j < row.t; ++j)
      map_chain(g, t, row.d, j, j, [&](int l) { return l % 2 == 0 ? i : -i; });
  return make(std::move(g), SquareClaim::minus_identity, t.group, WitnessKind::projective);
}

Witness witness_sl_R(const TripleData& t) {
  require_family(t, {Family::SL_R}, "witness_sl_R");
  if (partition_predicates(t.diagram.partition()).in_Ptilde_e)
    throw NotReal("sl_R: partition " + t.diagram.partition().to_string() + " is even, not very even, odd E2 count");
  return sl_witness(t, Family::SL_R);
}

Witness witness_so_n_C(const TripleData& t) {
  require_family(t, {Family::SO_C, Family::O_C}, "witness_so_n_C");
  return make(odd_diagonal_even_swap(t), SquareClaim::identity, t.group, WitnessKind::strong);
}

Witness witness_sp_n_C(const TripleData& t, SpCMode mode) {
  require_family(t, {Family::Sp_C}, "witness_sp_n_C");
  const Scalar i = Scalar::imag_unit(Ring::C);
  auto pm_i = [&](int k) { return k % 2 == 0 ? i : -i; };
  Mat g(t.n, t.n, Ring::C);
  switch (mode) {
    case SpCMode::real: {
      for (const auto& row : t.diagram.rows())
        for (int j = 0; j < row.t; ++j) {
          if (row.d % 2 == 1)
            map_chain(g, t, row.d, j, j, [&](int l) { return Scalar::from_int(Ring::C, parity_sign(l)); });
          else
            map_chain(g, t, row.d, j, j, pm_i);
        }
      return make(std::move(g), SquareClaim::unspecified, t.group, WitnessKind::real);
    }
    case SpCMode::strong: {
      for (const auto& row : t.diagram.rows())
        if (row.d % 2 == 0 && row.t % 2 == 1)
          throw NotStronglyReal("sp_C: even part " + std::to_string(row.d) + " has odd multiplicity");
      for (const auto& row : t.diagram.rows()) {
        if (row.d % 2 == 1) {
          for (int j = 0; j < row.t; ++j)
            map_chain(g, t, row.d, j, j, [&](int l) { return Scalar::from_int(Ring::C, row_sign(row.d, l)); });
          continue;
        }
        int h = row.t / 2;
        for (int j = 0; j < h; ++j) {
          map_chain(g, t, row.d, j, j + h, pm_i);
          map_chain(g, t, row.d, j + h, j, [&](int l) { return pm_i(l + 1); });
        }
      }
      return make(std::move(g), SquareClaim::identity, t.group, WitnessKind::strong);
    }
    case SpCMode::projective: {
      for (const auto& row : t.diagram.rows())
        for (int j = 0; j < row.t; ++j) {
          bool second_half = row.d % 2 == 1 && j >= row.t / 2;
          map_chain(g, t, row.d, j, j, [&](int l) { return pm_i(second_half ? l + 1 : l); });
        }
      return make(std::move(g), SquareClaim::minus_identity, t.group, WitnessKind::projective);
    }
  }
  throw std::logic_error("unknown sp_C mode");
}

Witness witness_su_pq(const TripleData& t) {
  require_family(t, {Family::SU_pq}, "witness_su_pq");
  require_even_rows_balanced(t, "su");
  return make(odd_diagonal_even_swap(t), SquareClaim::identity, t.group, WitnessKind::strong);
}

Witness witness_so_pq(const TripleData& t, SOTarget target) {
  require_family(t, {Family::SO_pq, Family::SO_pq_identity}, "witness_so_pq");
  Mat g = odd_diagonal_even_swap(t);
  if (target == SOTarget::full_group) {
    return make(std::move(g), SquareClaim::identity, GroupSpec::make(Family::SO_pq, t.form), WitnessKind::strong,
                predicted_component(t.diagram));
  }
  if (so_component_sign(g, *t.form) < 0) {
    const SignedPart* plus = nullptr;
    const SignedPart* minus = nullptr;
    for (const auto& row : t.diagram.rows()) {
      if (row.d % 2 == 0) continue;
      if (!plus && row.p > 0) plus = &row;
      if (!minus && row.q > 0) minus = &row;
    }
    if (!plus || !minus)
      throw NotRealInIdentityComponent("so(" + std::to_string(t.family.p) + "," + std::to_string(t.family.q) +
                                       "): " + t.diagram.to_string() + " is not real in the identity component");
    negate_chain(g, t, plus->d, 0);
    negate_chain(g, t, minus->d, minus->p);
  }
  return make(std::move(g), SquareClaim::identity, GroupSpec::make(Family::SO_pq_identity, t.form),
              WitnessKind::strong, ComponentClaim::identity);
}

Witness witness_so_star(const TripleData& t) {
  require_family(t, {Family::SOstar}, "witness_so_star");
  require_even_rows_balanced(t, "so*");
  return make(odd_diagonal_even_swap(t), SquareClaim::identity, t.group, WitnessKind::strong);
}

Witness witness_sp_n_R(const TripleData& t) {
  require_family(t, {Family::Sp_nR}, "witness_sp_n_R");
  require_even_rows_balanced(t, "sp_R");
  return make(odd_diagonal_even_swap(t), SquareClaim::identity, t.group, WitnessKind::strong);
}

Witness witness_sp_pq(const TripleData& t, SpPQMode mode) {
  require_family(t, {Family::Sp_pq}, "witness_sp_pq");
  const Scalar qi(Quaternion::i());
  auto pm_i = [&](int k) { return k % 2 == 0 ? qi : -qi; };
  Mat g(t.n, t.n, Ring::H);
  if (mode == SpPQMode::real) {
    for (const auto& row : t.diagram.rows())
      for (int j = 0; j < row.t; ++j) map_chain(g, t, row.d, j, j, pm_i);
    return make(std::move(g), SquareClaim::minus_identity, t.group, WitnessKind::real);
  }
  for (const auto& row : t.diagram.rows())
    if (row.d % 2 == 0 && row.t % 2 == 1)
      throw NotStronglyReal("sp(p,q): even part " + std::to_string(row.d) + " has odd multiplicity");
  for (const auto& row : t.diagram.rows()) {
    if (row.d % 2 == 1) {
      for (int j = 0; j < row.t; ++j)
        map_chain(g, t, row.d, j, j, [&](int l) { return Scalar::from_int(Ring::H, row_sign(row.d, l)); });
      continue;
    }
    int h = row.t / 2;
    for (int j = 0; j < h; ++j) {
      map_chain(g, t, row.d, j, j + h, pm_i);
      map_chain(g, t, row.d, j + h, j, [&](int l) { return pm_i(l + 1); });
    }
  }
  return make(std::move(g), SquareClaim::identity, t.group, WitnessKind::strong);
}

Witness best_witness(const TripleData& t, GroupVariant variant) {
  switch (t.family.family) {
    case Family::SL_R: return witness_sl_R(t);
    case Family::SL_C: return witness_sl_C(t);
    case Family::SL_H: return witness_sl_H(t);
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
      return witness_general_linear(t);
    case Family::SO_C:
    case Family::O_C:
      return witness_so_n_C(t);
    case Family::Sp_C:
      try {
        return witness_sp_n_C(t, SpCMode::strong);
      } catch (const NotStronglyReal&) {
        return witness_sp_n_C(t, variant == GroupVariant::projective ? SpCMode::projective : SpCMode::real);
      }
    case Family::SU_pq: return witness_su_pq(t);
    case Family::SO_pq:
      return witness_so_pq(t, variant == GroupVariant::identity_component ? SOTarget::identity_component
                                                                          : SOTarget::full_group);
    case Family::SO_pq_identity: return witness_so_pq(t, SOTarget::identity_component);
    case Family::SOstar: return witness_so_star(t);
    case Family::Sp_nR: return witness_sp_n_R(t);
    case Family::Sp_pq:
      try {
        return witness_sp_pq(t, SpPQMode::strong);
      } catch (const NotStronglyReal&) {
        return witness_sp_pq(t, SpPQMode::real);
      }
  }
  throw std::logic_error("unhandled family");
}

// ---------------------------------------------------------------------------
// Semisimple elements

SemisimpleElement SemisimpleElement::sl(std::vector<GaussianRational> eigenvalues) {
  SemisimpleElement s{Family::SL_C, std::move(eigenvalues), 0};
  s.n = static_cast<int>(s.values.size());
  s.validate();
  return s;
}

SemisimpleElement SemisimpleElement::sp(std::vector<GaussianRational> h) {
  SemisimpleElement s{Family::Sp_C, std::move(h), 0};
  s.n = static_cast<int>(s.values.size());
  s.validate();
  return s;
}

SemisimpleElement SemisimpleElement::so(std::vector<GaussianRational> x, int n) {
  SemisimpleElement s{Family::SO_C, std::move(x), n};
  s.validate();
  return s;
}

void SemisimpleElement::validate() const {
  if (values.empty()) throw std::invalid_argument("semisimple element needs at least one value");
  switch (family) {
    case Family::SL_C: {
      GaussianRational sum;
      for (const auto& v : values) sum += v;
      if (!sum.is_zero()) throw std::invalid_argument("sl eigenvalues must sum to zero");
      if (n != static_cast<int>(values.size())) throw std::invalid_argument("sl: n must equal eigenvalue count");
      break;
    }
    case Family::Sp_C:
      if (n != static_cast<int>(values.size())) throw std::invalid_argument("sp: n must equal the number of h_j");
      break;
    case Family::SO_C:
    case Family::O_C: {
      int m = static_cast<int>(values.size());
      if (n != 2 * m && n != 2 * m + 1) throw std::invalid_argument("so: n must be 2m or 2m+1");
      break;
    }
    default:
      throw std::invalid_argument("semisimple elements are supported for sl_c, sp_c and so_c only");
  }
}

int SemisimpleElement::dim() const { return family == Family::Sp_C ? 2 * n : n; }

Mat SemisimpleElement::matrix() const {
  Mat h(dim(), dim(), Ring::C);
  switch (family) {
    case Family::SL_C:
      for (int i = 0; i < n; ++i) h(i, i) = Scalar(values[i]);
      break;
    case Family::Sp_C:
      for (int i = 0; i < n; ++i) {
        h(i, i) = Scalar(values[i]);
        h(n + i, n + i) = Scalar(-values[i]);
      }
      break;
    default:
      for (std::size_t j = 0; j < values.size(); ++j) {
        h(2 * j, 2 * j + 1) = Scalar(values[j]);
        h(2 * j + 1, 2 * j) = Scalar(-values[j]);
      }
      break;
  }
  return h;
}

GroupSpec SemisimpleElement::group(GroupVariant variant) const {
  switch (family) {
    case Family::SL_C: return GroupSpec::make(Family::SL_C);
    case Family::Sp_C: return GroupSpec::make(Family::Sp_C, FormSpec{standard_j(n, Ring::C), Sigma::identity, -1});
    default: {
      Family f = variant == GroupVariant::full ? Family::O_C : Family::SO_C;
      return GroupSpec::make(f, FormSpec{Mat::identity(n, Ring::C), Sigma::identity, 1});
    }
  }
}

std::vector<GaussianRational> SemisimpleElement::eigenvalues() const {
  std::vector<GaussianRational> out;
  const GaussianRational i = GaussianRational::i();
  switch (family) {
    case Family::SL_C: return values;
    case Family::Sp_C:
      for (const auto& h : values) out.push_back(h);
      for (const auto& h : values) out.push_back(-h);
      return out;
    default:
      // [[0, x], [-x, 0]] has eigenvalues +- i x.
      for (const auto& x : values) {
        out.push_back(i * x);
        out.push_back(-(i * x));
      }
      if (n % 2 == 1) out.push_back(GaussianRational());
      return out;
  }
}

namespace {

/// A fixed choice of one element from each pair {z, -z}.
bool positive_ish(const GaussianRational& z) { return sgn(z.re()) > 0 || (sgn(z.re()) == 0 && sgn(z.im()) > 0); }

std::string key(const GaussianRational& z) { return z.re().get_str() + "," + z.im().get_str(); }

Witness semisimple_sl(const SemisimpleElement& s) {
  const int n = s.n;
  std::vector<int> partner(n, -1);
  std::vector<int> zeros;
  for (int a = 0; a < n; ++a) {
    if (s.values[a].is_zero()) {
      zeros.push_back(a);
      continue;
    }
    if (partner[a] >= 0) continue;
    for (int b = 0; b < n; ++b)
      if (b != a && partner[b] < 0 && s.values[b] == -s.values[a]) {
        partner[a] = b;
        partner[b] = a;
        break;
      }
    if (partner[a] < 0) throw NotReal("sl: eigenvalue multiset is not symmetric under negation");
  }
  int pairs = 0;
  for (int a = 0; a < n; ++a)
    if (partner[a] > a) ++pairs;
  Mat g(n, n, Ring::C);
  GroupSpec group = s.group();
  if (pairs % 2 == 0 || !zeros.empty()) {
    for (int a = 0; a < n; ++a)
      if (partner[a] >= 0) g(partner[a], a) = Scalar::one(Ring::C);
    for (int z : zeros) g(z, z) = Scalar::one(Ring::C);
    if (pairs % 2 == 1) g(zeros.front(), zeros.front()) = Scalar::from_int(Ring::C, -1);
    return Witness{std::move(g), SquareClaim::identity, group, std::nullopt, WitnessKind::strong};
  }
  // J_1 blocks on each pair: e_a -> e_b, e_b -> -e_a.
  for (int a = 0; a < n; ++a)
    if (partner[a] > a) {
      g(partner[a], a) = Scalar::one(Ring::C);
      g(a, partner[a]) = Scalar::from_int(Ring::C, -1);
    }
  return Witness{std::move(g), SquareClaim::minus_identity, group, std::nullopt, WitnessKind::projective};
}

Witness semisimple_sp(const SemisimpleElement& s) {
  const int n = s.n;
  GroupSpec group = s.group();
  std::map<std::string, std::vector<int>> classes;
  std::vector<std::string> order;
  for (int j = 0; j < n; ++j) {
    if (s.values[j].is_zero()) continue;
    GaussianRational mu = positive_ish(s.values[j]) ? s.values[j] : -s.values[j];
    auto k = key(mu);
    if (!classes.count(k)) order.push_back(k);
    classes[k].push_back(j);
  }
  bool strong = true;
  for (const auto& [k, idx] : classes) strong = strong && idx.size() % 2 == 0;
  Mat g(2 * n, 2 * n, Ring::C);
  if (!strong) {
    return Witness{standard_j(n, Ring::C), SquareClaim::minus_identity, group, std::nullopt,
                   WitnessKind::projective};
  }
  // Symplectic pairs (u_j, w_j) with <w_j, u_j> = 1, u_j in the eigenspace of the positive-ish value.
  struct Signed {
    int pos;
    int sign;
  };
  auto u = [&](int j) { return positive_ish(s.values[j]) ? Signed{j, 1} : Signed{n + j, 1}; };
  auto w = [&](int j) { return positive_ish(s.values[j]) ? Signed{n + j, 1} : Signed{j, -1}; };
  auto put = [&](Signed from, Signed to, int c) { g(to.pos, from.pos) = Scalar::from_int(Ring::C, c * from.sign * to.sign); };
  for (int j = 0; j < n; ++j)
    if (s.values[j].is_zero()) {
      g(j, j) = Scalar::one(Ring::C);
      g(n + j, n + j) = Scalar::one(Ring::C);
    }
  for (const auto& k : order) {
    const auto& idx = classes[k];
    for (std::size_t a = 0; a + 1 < idx.size(); a += 2) {
      int j1 = idx[a], j2 = idx[a + 1];
      put(u(j1), w(j2), 1);
      put(u(j2), w(j1), -1);
      put(w(j2), u(j1), 1);
      put(w(j1), u(j2), -1);
    }
  }
  return Witness{std::move(g), SquareClaim::identity, group, std::nullopt, WitnessKind::strong};
}

Witness semisimple_so(const SemisimpleElement& s, GroupVariant variant) {
  const int n = s.n;
  const int m = static_cast<int>(s.values.size());
  GroupSpec group = s.group(variant);
  Mat g = Mat::identity(n, Ring::C);
  for (int j = 0; j < m; ++j)
    if (!s.values[j].is_zero()) g(2 * j + 1, 2 * j + 1) = Scalar::from_int(Ring::C, -1);
  bool need_fix = determinant(g) == Scalar::from_int(Ring::C, -1) && variant != GroupVariant::full;
  if (need_fix) {
    if (n % 2 == 1) {
      g(n - 1, n - 1) = Scalar::from_int(Ring::C, -1);
    } else {
      auto it = std::find_if(s.values.begin(), s.values.end(), [](const GaussianRational& x) { return x.is_zero(); });
      if (it == s.values.end())
        throw NotReal("so: no zero eigenvalue and n = 2 mod 4; not real in SO(n,C)");
      // Reflecting a block with x_j = 0 still negates H on it (H is zero there).
      auto z = static_cast<std::size_t>(it - s.values.begin());
      g(2 * z + 1, 2 * z + 1) = Scalar::from_int(Ring::C, -1);
    }
  }
  return Witness{std::move(g), SquareClaim::identity, group, std::nullopt, WitnessKind::strong};
}

}  // namespace

Witness witness_semisimple(const SemisimpleElement& s, GroupVariant variant) {
  s.validate();
  switch (s.family) {
    case Family::SL_C: return semisimple_sl(s);
    case Family::Sp_C: return semisimple_sp(s);
    default: return semisimple_so(s, variant);
  }
}

}  // namespace nilreal
