#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "domtk/cnf.hpp"
#include "domtk/perturbation.hpp"
#include "domtk/reduction.hpp"

namespace domtk {

// Instance ceiling for verify(): full minimum-set enumeration must stay
// feasible on the gadget graphs.
inline constexpr int kMaxVerifyVariables = 6;
inline constexpr int kMaxVerifyClauses = 12;

struct ClaimOutcome {
  std::string id;  // "C3.1" .. "T5"
  bool passed = false;
  std::string details;  // witness data; nonempty when passed is false
};

struct TargetSummary {
  ReductionTarget target = ReductionTarget::kBondage;
  int domination_value = 0;  // gamma of the artifact (gamma_t for total)
  std::string perturbation;  // rendered bondage/total-bondage/reinforcement value
};

struct VerificationReport {
  int variable_count = 0;
  int clause_count = 0;
  bool satisfiable = false;
  std::vector<TargetSummary> targets;
  std::vector<ClaimOutcome> claims;

  bool all_passed() const;
};

// Reads a truth assignment off a minimum (total) dominating set of the
// artifact, per the case split matching the artifact's target. Throws if
// the set does not have the structure the minimum-set claims guarantee.
Assignment assignment_from_gamma_set(const ReductionArtifact& art,
                                     const VertexSet& d);

// Inverse direction: one literal vertex per variable according to t, plus
// the target's completion vertices ({s_2}, or {s_2, s_4, v_1..v_n}). For
// the reinforcement artifact the bare n literal vertices are returned;
// they dominate the graph once an edge from the hub to a true literal is
// added.
VertexSet gamma_set_from_assignment(const ReductionArtifact& art,
                                    const Assignment& t);

// Machine-checks every claim of the requested constructions by exact
// computation. Claims are evaluated independently; a failure never aborts
// the rest of the report.
VerificationReport verify(const CnfFormula& f,
                          const std::set<ReductionTarget>& targets);

std::string report_json(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

}  // namespace domtk
