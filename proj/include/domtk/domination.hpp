#pragma once

#include <vector>

#include "domtk/graph.hpp"

namespace domtk {

struct DominationResult {
  int value = 0;
  VertexSet witness;  // a minimum (total) dominating set attaining `value`
};

bool is_dominating_set(const Graph& g, const VertexSet& d);
bool is_total_dominating_set(const Graph& g, const VertexSet& d);

// Exact minimum dominating set via iterative-deepening branch and bound.
DominationResult domination_number(const Graph& g);

// Exact minimum total dominating set. Throws if g has an isolated vertex
// (the parameter is undefined there).
DominationResult total_domination_number(const Graph& g);

// Decision variants: is there a (total) dominating set of size <= k?
// Cheaper than the full solve when only a bound is needed.
bool has_dominating_set(const Graph& g, int k);
bool has_total_dominating_set(const Graph& g, int k);

// Complete, duplicate-free list of all minimum (total) dominating sets in
// ascending order. Exhaustive sweep over all subsets of the minimum size;
// intended for desk-scale graphs only.
std::vector<VertexSet> enumerate_minimum_dominating_sets(const Graph& g,
                                                         bool total);

}  // namespace domtk
