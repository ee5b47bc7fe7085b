#pragma once

#include <string>

#include "domtk/cnf.hpp"
#include "domtk/graph.hpp"

namespace fixtures {

// The running example: n=4, m=3 with clauses
// {u1,u2,~u3}, {~u1,u2,u4}, {~u2,u3,u4}.
inline domtk::CnfFormula example_formula() {
  return domtk::parse_dimacs("p cnf 4 3\n1 2 -3 0\n-1 2 4 0\n-2 3 4 0\n");
}

// All 8 sign patterns over 3 variables; unsatisfiable.
inline domtk::CnfFormula complete_unsat_formula() {
  std::string text = "p cnf 3 8\n";
  for (int mask = 0; mask < 8; ++mask) {
    for (int i = 0; i < 3; ++i)
      text += std::to_string((mask >> i) & 1 ? -(i + 1) : i + 1) + " ";
    text += "0\n";
  }
  return domtk::parse_dimacs(text);
}

inline domtk::Graph path(int n) {
  std::vector<domtk::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return domtk::Graph(n, std::move(edges));
}

inline domtk::Graph cycle(int n) {
  std::vector<domtk::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return domtk::Graph(n, std::move(edges));
}

inline domtk::Graph complete(int n) {
  std::vector<domtk::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return domtk::Graph(n, std::move(edges));
}

// K_{1,3} with the center at vertex 0.
inline domtk::Graph star4() {
  return domtk::Graph(4, {{0, 1}, {0, 2}, {0, 3}});
}

inline domtk::Graph edgeless(int n) { return domtk::Graph(n, {}); }

}  // namespace fixtures
