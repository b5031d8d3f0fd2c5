#ifndef NILREAL_DIAGRAM_HPP
#define NILREAL_DIAGRAM_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilreal/forms.hpp"

namespace nilreal {

/// A part size d together with its multiplicity t_d.
struct Part {
  int d = 0;
  int t = 0;
  friend bool operator==(const Part&, const Part&) = default;
};

/// Partition stored as (d, t_d) pairs with d strictly decreasing.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; merges repeated sizes. Throws on d < 1 or t < 1.
  explicit Partition(std::vector<Part> parts);
  /// From a flat list of row lengths, e.g. {3, 3, 1}.
  static Partition from_rows(const std::vector<int>& rows);

  const std::vector<Part>& parts() const { return parts_; }
  int total() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front().d; }
  int multiplicity(int d) const;
  /// "[3^2,2^2,1^4]"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

struct PartClasses {
  std::set<int> N, E, O, O1, O3, E2;
};

PartClasses part_classes(const Partition& p);

struct PartitionPredicates {
  bool in_Peven = false;
  bool in_Pveven = false;
  bool in_P1 = false;
  bool in_Pm1 = false;
  bool in_Ptilde_e = false;
};

PartitionPredicates partition_predicates(const Partition& p);

/// All partitions of n, largest parts first (reverse lexicographic).
std::vector<Partition> partitions_of(int n);

/// One row class of a signed diagram: t rows of length d, p of them starting +1.
struct SignedPart {
  int d = 0;
  int t = 0;
  int p = 0;
  int q = 0;
  friend bool operator==(const SignedPart&, const SignedPart&) = default;
};

/// Signed Young diagram in canonical form: only the counts (p_d, q_d) are kept,
/// so diagrams that differ by permuting rows of equal length compare equal.
class SignedYoungDiagram {
 public:
  SignedYoungDiagram() = default;
  explicit SignedYoungDiagram(std::vector<SignedPart> rows);
  /// Every row labelled +1.
  static SignedYoungDiagram unsigned_from(const Partition& p);

  const std::vector<SignedPart>& rows() const { return rows_; }
  Partition partition() const;
  int total() const;
  const SignedPart& row(int d) const;

  /// "3(0,1)+1(2,0)"
  std::string to_string() const;

  friend bool operator==(const SignedYoungDiagram&, const SignedYoungDiagram&) = default;

 private:
  std::vector<SignedPart> rows_;
};

/// Parses the canonical text form; "d^t(p,q)" segments are also accepted.
SignedYoungDiagram parse_diagram(const std::string& text);

/// Total (+1, -1) box counts under the modified alternation rule.
std::pair<int, int> diagram_signature(const SignedYoungDiagram& d);

/// Parity of the number of sign flips the standard so(p,q) witness (diagonal
/// (-1)^l or (-1)^(l+1) on odd chains, pair swaps on even rows) induces on a
/// maximal positive subspace. A chain of odd size d contributes ceil((d-1)/4),
/// so rows with d = 3, 5 mod 8 count t; rows with d = 2 mod 4 count t/2.
/// Odd parity means the witness lies outside SO(p,q)^0.
int so_witness_component_parity(const SignedYoungDiagram& d);

/// A family together with its size parameters. `dim` is the matrix size over the
/// family's ring; p and q are the target signature for su, so and sp(p,q).
struct FamilySpec {
  Family family = Family::SL_C;
  int dim = 1;
  int p = 0;
  int q = 0;

  static FamilySpec sl_r(int n) { return {Family::SL_R, n, 0, 0}; }
  static FamilySpec sl_c(int n) { return {Family::SL_C, n, 0, 0}; }
  static FamilySpec sl_h(int n) { return {Family::SL_H, n, 0, 0}; }
  static FamilySpec so_c(int n) { return {Family::SO_C, n, 0, 0}; }
  /// sp(n, C) acting on C^{2n}.
  static FamilySpec sp_c(int n) { return {Family::Sp_C, 2 * n, 0, 0}; }
  static FamilySpec su(int p, int q) { return {Family::SU_pq, p + q, p, q}; }
  static FamilySpec so(int p, int q) { return {Family::SO_pq, p + q, p, q}; }
  static FamilySpec so_identity(int p, int q) { return {Family::SO_pq_identity, p + q, p, q}; }
  /// so*(2n) acting on H^n.
  static FamilySpec so_star(int n) { return {Family::SOstar, n, 0, 0}; }
  /// sp(n, R) acting on R^{2n}.
  static FamilySpec sp_r(int n) { return {Family::Sp_nR, 2 * n, 0, 0}; }
  static FamilySpec sp_pq(int p, int q) { return {Family::Sp_pq, p + q, p, q}; }

  bool has_signature() const;
  std::string to_string() const;
};

/// How a family treats the signs of a row class.
enum class RowSigns { free, all_plus, balanced };
RowSigns row_sign_rule(Family f, int d);

bool validate_diagram(const FamilySpec& fam, const SignedYoungDiagram& d);

/// Replaces forced sign counts by their stored values (unsigned families: all +1).
/// Free rows are left untouched.
SignedYoungDiagram canonicalize(Family f, const SignedYoungDiagram& d);

std::vector<SignedYoungDiagram> enumerate_diagrams(const FamilySpec& fam);

}  // namespace nilreal

#endif  // NILREAL_DIAGRAM_HPP
