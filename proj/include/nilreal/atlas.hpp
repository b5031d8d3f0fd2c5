#ifndef NILREAL_ATLAS_HPP
#define NILREAL_ATLAS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nilreal/oracle.hpp"

namespace nilreal::atlas {

struct Verification {
  bool anticommutes = false;
  bool square_ok = false;
  bool form_ok = false;
  bool det_ok = false;
  bool component_ok = false;
  std::optional<bool> group_level;
};

struct OrbitRecord {
  std::string family;
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> q;
  std::string partition;
  std::string signs;
  std::optional<bool> real;
  std::optional<bool> strongly_real;
  std::optional<bool> projectively_strongly_real;
  std::string witness_kind = "none";
  std::optional<Verification> verification;
  std::optional<bool> oracle_agrees;
  /// Whether the verdicts agree with which witness constructions succeed.
  std::optional<bool> predicate_agrees;
  /// Report mode only: triple, Gram, rank, round-trip, sign-flip and block checks.
  std::optional<bool> structure_ok;

  /// True when no recorded check failed.
  bool healthy() const;
};

enum class Mode { enumerate, classify, verify, report };

/// Processes one orbit. `fault` perturbs one witness entry before verification.
OrbitRecord process_orbit(const FamilySpec& fam, const SignedYoungDiagram& d, GroupVariant variant, Mode mode,
                          bool fault = false);

/// Every structural check run by report mode; returns an empty string on success,
/// otherwise a description of the first failure.
std::string structure_failure(const TripleData& t, const std::optional<Witness>& w);

std::string to_json(const std::vector<OrbitRecord>& records);
std::string to_csv(const std::vector<OrbitRecord>& records);

/// Runs the command line; returns 0 on success, 1 on any failed check, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilreal::atlas

#endif  // NILREAL_ATLAS_HPP
