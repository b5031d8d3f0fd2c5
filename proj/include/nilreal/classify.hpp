#ifndef NILREAL_CLASSIFY_HPP
#define NILREAL_CLASSIFY_HPP

#include <optional>

#include "nilreal/witness.hpp"

namespace nilreal {

struct RealityStatus {
  bool real = false;
  bool strongly_real = false;
  /// Left empty where no projective statement is available.
  std::optional<bool> projectively_strongly_real;
  Family group_context = Family::GL_C;
};

/// Verdicts from the combinatorial criteria. For so(p,q) the identity-component
/// verdict is requested either with family SO_pq_identity or variant identity_component.
/// Throws std::invalid_argument when the diagram is invalid for the family.
RealityStatus classify_nilpotent(const FamilySpec& fam, const SignedYoungDiagram& d,
                                 GroupVariant variant = GroupVariant::standard);

/// The identity-component obstruction for so(p,q): true when the orbit is not real in SO(p,q)^0.
bool so_identity_obstructed(const SignedYoungDiagram& d);

/// Throws std::invalid_argument when the data is not in canonical form.
RealityStatus classify_semisimple(const SemisimpleElement& s, GroupVariant variant = GroupVariant::standard);

}  // namespace nilreal

#endif  // NILREAL_CLASSIFY_HPP
