#ifndef NILREAL_ORACLE_HPP
#define NILREAL_ORACLE_HPP

#include <optional>

#include "nilreal/classify.hpp"

namespace nilreal {

/// Recomputes the signed diagram of an sl2-triple. Signs come from the induced
/// forms b_d(u, w) = <u, X^{d-1} w> on the lowest-weight spaces L(d-1).
/// Throws std::invalid_argument if {X, H, Y} is not an sl2-triple.
SignedYoungDiagram diagram_from_triple(const Mat& X, const Mat& H, const Mat& Y, const std::optional<FormSpec>& form,
                                       Family family);

/// Orientation of a triple for sl_n(R) with an even partition: the sign of the
/// determinant of the vectors X^l v_j (chain order, v_j spanning each L(d-1)).
/// This separates the two SL_n(R)-orbits sharing one even partition.
int sl_r_orientation(const Mat& X, const Mat& H, const Mat& Y);

/// Compares the invariants of (X, H, Y) and (-X, H, -Y).
/// Throws UnsupportedFamily for SO_pq_identity.
bool reality_by_diagram(const TripleData& t);

struct WitnessReport {
  bool anticommutes = false;
  bool square_ok = false;
  bool form_ok = false;
  bool det_ok = false;
  bool component_ok = false;
  bool all() const { return anticommutes && square_ok && form_ok && det_ok && component_ok; }
};

/// Checks every claim of W against the element `target` (X, or a semisimple H). Never throws.
WitnessReport verify_witness_against(const Mat& target, const Witness& w);
WitnessReport verify_witness(const TripleData& t, const Witness& w);

/// g exp(X) g^{-1} exp(X) = Id.
bool verify_group_level(const TripleData& t, const Witness& w);

struct CentralizerReport {
  bool block_upper_triangular = false;
  bool diagonal_part_commutes = false;  // with X, H and Y
  bool forms_preserved = false;         // diagonal blocks preserve each b_d
  std::optional<bool> det_positive;     // sl_n(R) with an even partition only
  bool all() const { return block_upper_triangular && diagonal_part_commutes && forms_preserved && det_positive.value_or(true); }
};

/// Throws std::invalid_argument unless tau commutes with X.
CentralizerReport centralizer_checks(const TripleData& t, const Mat& tau);

}  // namespace nilreal

#endif  // NILREAL_ORACLE_HPP
