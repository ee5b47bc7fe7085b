#pragma once

// Naive, unpruned reference oracles. Kept deliberately independent of the
// library's search code: plain subset sweeps in increasing size.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "domtk/cnf.hpp"
#include "domtk/graph.hpp"

namespace oracles {

inline bool dominates(const domtk::Graph& g, std::uint32_t mask, bool total) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool covered = !total && ((mask >> v) & 1);
    for (int u = 0; u < g.vertex_count() && !covered; ++u)
      if (((mask >> u) & 1) && g.has_edge(u, v)) covered = true;
    if (!covered) return false;
  }
  return true;
}

// Minimum (total) dominating set size by sweeping all subsets grouped by
// size. Returns nullopt when no set of any size works (total domination
// with an isolated vertex).
inline std::optional<int> min_domination(const domtk::Graph& g, bool total) {
  const int n = g.vertex_count();
  for (int k = 0; k <= n; ++k)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == k && dominates(g, mask, total)) return k;
  return std::nullopt;
}

inline std::vector<std::uint32_t> all_min_sets(const domtk::Graph& g,
                                               bool total) {
  std::vector<std::uint32_t> out;
  auto k = min_domination(g, total);
  if (!k) return out;
  for (std::uint32_t mask = 0; mask < (1u << g.vertex_count()); ++mask)
    if (std::popcount(mask) == *k && dominates(g, mask, total))
      out.push_back(mask);
  return out;
}

// Smallest edge subset of size <= cap whose removal increases the (total)
// domination number; -1 when none exists. Total mode skips removals that
// isolate a vertex.
inline int min_bondage(const domtk::Graph& g, int cap, bool total) {
  const auto& edges = g.edges();
  const int e = static_cast<int>(edges.size());
  const int base = *min_domination(g, total);
  for (int k = 1; k <= cap && k <= e; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<domtk::Edge> removed;
      for (int i = 0; i < e; ++i)
        if ((mask >> i) & 1) removed.push_back(edges[static_cast<std::size_t>(i)]);
      domtk::Graph h = g.remove_edges(removed);
      if (total && h.has_isolated_vertex()) continue;
      if (*min_domination(h, total) > base) return k;
    }
  }
  return -1;
}

// Smallest non-edge subset of size <= cap whose addition decreases the
// domination number; 0 when gamma is already 1, -1 when none exists.
inline int min_reinforcement(const domtk::Graph& g, int cap) {
  const int base = *min_domination(g, false);
  if (base <= 1) return 0;
  const auto pool = g.non_edges();
  const int e = static_cast<int>(pool.size());
  for (int k = 1; k <= cap && k <= e; ++k)
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<domtk::Edge> added;
      for (int i = 0; i < e; ++i)
        if ((mask >> i) & 1) added.push_back(pool[static_cast<std::size_t>(i)]);
      if (*min_domination(g.add_edges(added), false) < base) return k;
    }
  return -1;
}

inline domtk::Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<domtk::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < edge_prob)
        edges.emplace_back(u, v);
  return domtk::Graph(n, std::move(edges));
}

}  // namespace oracles
