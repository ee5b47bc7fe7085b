#pragma once

#include <string>
#include <vector>

#include "domtk/graph.hpp"

namespace domtk {

// Result of a minimal edge-perturbation search. `witness` is the
// lexicographically first qualifying edge set of minimum size.
struct PerturbationResult {
  enum class Status { kValue, kNonexistent, kZero };

  Status status = Status::kNonexistent;
  int value = 0;  // meaningful only when status == kValue
  std::vector<Edge> witness;

  bool is_one() const { return status == Status::kValue && value == 1; }
};

std::string to_string(const PerturbationResult& r);

// Smallest k <= cap such that removing some k edges increases the
// domination number; kNonexistent if no such set within cap. Throws on an
// edgeless graph.
PerturbationResult bondage_number(const Graph& g, int cap);

// Same for the total domination number. Edge sets whose removal isolates a
// vertex are not candidates. Throws if g has an isolated vertex.
PerturbationResult total_bondage_number(const Graph& g, int cap);

// Smallest k <= cap such that adding some k non-edges decreases the
// domination number. kZero when the domination number is already 1.
PerturbationResult reinforcement_number(const Graph& g, int cap);

}  // namespace domtk
