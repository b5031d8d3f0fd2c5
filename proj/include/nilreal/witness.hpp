#ifndef NILREAL_WITNESS_HPP
#define NILREAL_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilreal/errors.hpp"
#include "nilreal/representative.hpp"

namespace nilreal {

enum class WitnessKind { strong, real, projective };
/// A real witness need not square to a central element, hence `unspecified`.
enum class SquareClaim { identity, minus_identity, unspecified };
enum class ComponentClaim { identity, non_identity };
enum class GroupVariant { standard, identity_component, projective, full };

std::string kind_name(WitnessKind k);

/// A conjugator g with g X g^{-1} = -X together with what it claims about itself.
struct Witness {
  Mat g;
  SquareClaim claimed_square = SquareClaim::unspecified;
  GroupSpec claimed_group;
  std::optional<ComponentClaim> claimed_component;
  WitnessKind kind = WitnessKind::real;
};

enum class SpCMode { real, strong, projective };
enum class SpPQMode { real, strong };
enum class SOTarget { full_group, identity_component };

/// (-1)^l on rows with d even or d = 1 mod 4, (-1)^(l+1) on rows with d = 3 mod 4; claims GL.
Witness witness_general_linear(const TripleData& t);
/// The same matrix, claimed in SL_n(H).
Witness witness_sl_H(const TripleData& t);
Witness witness_sl_C(const TripleData& t);
Witness witness_sl_R(const TripleData& t);
Witness witness_so_n_C(const TripleData& t);
Witness witness_sp_n_C(const TripleData& t, SpCMode mode);
Witness witness_su_pq(const TripleData& t);
Witness witness_so_pq(const TripleData& t, SOTarget target);
Witness witness_so_star(const TripleData& t);
Witness witness_sp_n_R(const TripleData& t);
Witness witness_sp_pq(const TripleData& t, SpPQMode mode);

/// Strongest witness the library constructs for this orbit and group variant:
/// a strong one when it exists, otherwise a real or projective one.
/// Throws an ObstructionError when the orbit is not real.
Witness best_witness(const TripleData& t, GroupVariant variant = GroupVariant::standard);

/// Semisimple element of sl_n(C), sp(n,C) or so(n,C) in the canonical Cartan form.
///  sl: `values` are the n diagonal eigenvalues (sum zero);
///  sp: `values` are h_1..h_n and H = diag(h, -h) for the form J_n;
///  so: `values` are x_1..x_m, H is block diagonal with blocks [[0, x], [-x, 0]]
///      for the form I_n, plus a trailing zero when n = 2m + 1.
struct SemisimpleElement {
  Family family = Family::SL_C;
  std::vector<GaussianRational> values;
  int n = 0;

  static SemisimpleElement sl(std::vector<GaussianRational> eigenvalues);
  static SemisimpleElement sp(std::vector<GaussianRational> h);
  static SemisimpleElement so(std::vector<GaussianRational> x, int n);

  /// Throws std::invalid_argument if the data is not in canonical form.
  void validate() const;
  Mat matrix() const;
  /// Matrix size.
  int dim() const;
  GroupSpec group(GroupVariant variant = GroupVariant::standard) const;
  /// Full eigenvalue multiset of matrix().
  std::vector<GaussianRational> eigenvalues() const;
};

Witness witness_semisimple(const SemisimpleElement& s, GroupVariant variant = GroupVariant::standard);

}  // namespace nilreal

#endif  // NILREAL_WITNESS_HPP
