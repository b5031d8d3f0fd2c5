#include "nilreal/classify.hpp"

#include <map>

namespace nilreal {

namespace {

bool even_rows_balanced(const SignedYoungDiagram& d) {
  for (const auto& row : d.rows())
    if (row.d % 2 == 0 && row.p != row.q) return false;
  return true;
}

bool even_multiplicities_even(const SignedYoungDiagram& d) {
  for (const auto& row : d.rows())
    if (row.d % 2 == 0 && row.t % 2 == 1) return false;
  return true;
}

RealityStatus status(bool real, bool strong, std::optional<bool> projective, Family context) {
  if (strong) projective = true;
  return RealityStatus{real, strong, projective, context};
}

}  // namespace

bool so_identity_obstructed(const SignedYoungDiagram& d) {
  bool has_plus = false, has_minus = false;
  for (const auto& row : d.rows())
    if (row.d % 2 == 1) {
      has_plus = has_plus || row.p > 0;
      has_minus = has_minus || row.q > 0;
    }
  // Flipping one chain of each sign is the only way the centralizer changes component.
  return !(has_plus && has_minus) && so_witness_component_parity(d) == 1;
}

RealityStatus classify_nilpotent(const FamilySpec& fam, const SignedYoungDiagram& d, GroupVariant variant) {
  if (!validate_diagram(fam, d))
    throw std::invalid_argument("diagram " + d.to_string() + " is not valid for " + fam.to_string());
  const Family f = fam.family;
  const PartitionPredicates pr = partition_predicates(d.partition());
  switch (f) {
    case Family::SL_C:
      return status(true, !pr.in_Ptilde_e, true, f);
    case Family::SL_R: {
      bool ok = !pr.in_Ptilde_e;
      return status(ok, ok, std::nullopt, f);
    }
    case Family::SL_H:
    case Family::GL_R:
    case Family::GL_C:
    case Family::GL_H:
    case Family::SO_C:
    case Family::O_C:
      return status(true, true, true, f);
    case Family::Sp_C:
      return status(true, even_multiplicities_even(d), true, f);
    case Family::SU_pq:
    case Family::SOstar:
    case Family::Sp_nR: {
      bool ok = even_rows_balanced(d);
      return status(ok, ok, std::nullopt, f);
    }
    case Family::SO_pq:
    case Family::SO_pq_identity: {
      if (f == Family::SO_pq && variant != GroupVariant::identity_component) return status(true, true, std::nullopt, f);
      bool ok = !so_identity_obstructed(d);
      return status(ok, ok, std::nullopt, Family::SO_pq_identity);
    }
    case Family::Sp_pq:
      return status(true, even_multiplicities_even(d), true, f);
  }
  throw std::logic_error("unhandled family");
}

RealityStatus classify_semisimple(const SemisimpleElement& s, GroupVariant variant) {
  s.validate();
  std::vector<GaussianRational> eig = s.eigenvalues();
  bool has_zero = false;
  for (const auto& e : eig) has_zero = has_zero || e.is_zero();
  const int n = s.dim();
  switch (s.family) {
    case Family::SL_C: {
      std::map<std::pair<std::string, std::string>, int> balance;
      for (const auto& e : eig) {
        if (e.is_zero()) continue;
        bool pos = sgn(e.re()) > 0 || (sgn(e.re()) == 0 && sgn(e.im()) > 0);
        GaussianRational m = pos ? e : -e;
        balance[{m.re().get_str(), m.im().get_str()}] += pos ? 1 : -1;
      }
      bool real = true;
      for (const auto& [k, v] : balance) real = real && v == 0;
      bool strong = real && (has_zero || n % 4 != 2);
      return status(real, strong, real ? std::optional<bool>(true) : std::nullopt, Family::SL_C);
    }
    case Family::Sp_C: {
      std::map<std::pair<std::string, std::string>, int> mult;
      for (const auto& e : eig)
        if (!e.is_zero()) mult[{e.re().get_str(), e.im().get_str()}] += 1;
      bool strong = true;
      for (const auto& [k, v] : mult) strong = strong && v % 2 == 0;
      return status(true, strong, true, Family::Sp_C);
    }
    default: {
      if (variant == GroupVariant::full) return status(true, true, true, Family::O_C);
      bool ok = has_zero || n % 4 != 2;
      return status(ok, ok, std::nullopt, Family::SO_C);
    }
  }
}

}  // namespace nilreal
