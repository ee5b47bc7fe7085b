#include "domtk/perturbation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "domtk/domination.hpp"

namespace domtk {

namespace {

// Visits all k-subsets of `pool` in lexicographic order; stops when the
// callback returns true and reports the accepting subset.
bool first_subset(const std::vector<Edge>& pool, int k,
                  const std::function<bool(const std::vector<Edge>&)>& accept,
                  std::vector<Edge>& out) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Edge> subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i)
      subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    if (accept(subset)) {
      out = subset;
      return true;
    }
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

PerturbationResult sweep(const std::vector<Edge>& pool, int cap,
                         const std::function<bool(const std::vector<Edge>&)>& accept) {
  cap = std::min(cap, static_cast<int>(pool.size()));
  for (int k = 1; k <= cap; ++k) {
    std::vector<Edge> witness;
    if (first_subset(pool, k, accept, witness))
      return {PerturbationResult::Status::kValue, k, std::move(witness)};
  }
  return {};
}

}  // namespace

std::string to_string(const PerturbationResult& r) {
  switch (r.status) {
    case PerturbationResult::Status::kZero:
      return "ZERO";
    case PerturbationResult::Status::kNonexistent:
      return "NONEXISTENT";
    case PerturbationResult::Status::kValue:
      return std::to_string(r.value);
  }
  return "?";
}

PerturbationResult bondage_number(const Graph& g, int cap) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("bondage undefined for edgeless graph");
  const int base = domination_number(g).value;
  return sweep(g.edges(), cap, [&](const std::vector<Edge>& removed) {
    return !has_dominating_set(g.remove_edges(removed), base);
  });
}

PerturbationResult total_bondage_number(const Graph& g, int cap) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("total bondage undefined: isolated vertex");
  const int base = total_domination_number(g).value;
  return sweep(g.edges(), cap, [&](const std::vector<Edge>& removed) {
    // Removals that isolate a vertex do not qualify.
    for (const Edge& e : removed) {
      int du = g.degree(e.u), dv = g.degree(e.v);
      for (const Edge& o : removed) {
        if (o == e) continue;
        if (o.u == e.u || o.v == e.u) --du;
        if (o.u == e.v || o.v == e.v) --dv;
      }
      if (du <= 1 || dv <= 1) return false;
    }
    return !has_total_dominating_set(g.remove_edges(removed), base);
  });
}

PerturbationResult reinforcement_number(const Graph& g, int cap) {
  const int base = domination_number(g).value;
  if (base <= 1) return {PerturbationResult::Status::kZero, 0, {}};
  return sweep(g.non_edges(), cap, [&](const std::vector<Edge>& added) {
    return has_dominating_set(g.add_edges(added), base - 1);
  });
}

}  // namespace domtk
