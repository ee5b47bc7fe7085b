#include "domtk/domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace domtk {

namespace {

// Both domination flavors reduce to the same covering question: pick a
// minimum vertex set hitting cover[v] for every v, where cover[v] is the
// closed neighborhood (plain domination) or open neighborhood (total).
// Since cover[v] is symmetric, cover[c] is also the set of vertices a
// chosen c takes care of.
struct CoverProblem {
  int n = 0;
  std::vector<VertexSet> cover;
  int max_cover = 0;
};

CoverProblem make_problem(const Graph& g, bool total) {
  CoverProblem p;
  p.n = g.vertex_count();
  p.cover.reserve(static_cast<std::size_t>(p.n));
  for (int v = 0; v < p.n; ++v) {
    VertexSet c = total ? g.neighbors(v) : g.closed_neighborhood(v);
    if (total && c.empty())
      throw std::invalid_argument(
          "total domination undefined: isolated vertex " + std::to_string(v));
    p.max_cover = std::max(p.max_cover, c.count());
    p.cover.push_back(c);
  }
  return p;
}

bool search(const CoverProblem& p, VertexSet uncovered, int budget,
            VertexSet& chosen) {
  if (uncovered.empty()) return true;
  if (static_cast<long long>(budget) * p.max_cover < uncovered.count())
    return false;
  // Branch on the hardest uncovered vertex (fewest candidates).
  int pivot = -1, best = kMaxVertices + 1;
  uncovered.for_each([&](int v) {
    int options = p.cover[static_cast<std::size_t>(v)].count();
    if (options < best) {
      best = options;
      pivot = v;
    }
  });
  if (best == 0) return false;
  bool found = false;
  p.cover[static_cast<std::size_t>(pivot)].for_each([&](int c) {
    if (found) return;
    chosen.set(c);
    if (search(p, uncovered - p.cover[static_cast<std::size_t>(c)], budget - 1,
               chosen))
      found = true;
    else
      chosen.reset(c);
  });
  return found;
}

DominationResult solve(const Graph& g, bool total) {
  CoverProblem p = make_problem(g, total);
  if (p.n == 0) return {};
  int lower = (p.n + p.max_cover - 1) / p.max_cover;
  for (int k = std::max(lower, 1);; ++k) {
    VertexSet chosen;
    if (search(p, VertexSet::full(p.n), k, chosen))
      return {chosen.count(), chosen};
  }
}

bool decide(const Graph& g, bool total, int k) {
  CoverProblem p = make_problem(g, total);
  VertexSet chosen;
  return search(p, VertexSet::full(p.n), k, chosen);
}

}  // namespace

bool is_dominating_set(const Graph& g, const VertexSet& d) {
  VertexSet covered = d;
  d.for_each([&](int v) { covered |= g.neighbors(v); });
  return covered.contains_all(VertexSet::full(g.vertex_count()));
}

bool is_total_dominating_set(const Graph& g, const VertexSet& d) {
  VertexSet covered;
  d.for_each([&](int v) { covered |= g.neighbors(v); });
  return covered.contains_all(VertexSet::full(g.vertex_count()));
}

DominationResult domination_number(const Graph& g) { return solve(g, false); }

DominationResult total_domination_number(const Graph& g) {
  return solve(g, true);
}

bool has_dominating_set(const Graph& g, int k) { return decide(g, false, k); }

bool has_total_dominating_set(const Graph& g, int k) {
  return decide(g, true, k);
}

std::vector<VertexSet> enumerate_minimum_dominating_sets(const Graph& g,
                                                         bool total) {
  const int n = g.vertex_count();
  const int k = solve(g, total).value;
  CoverProblem p = make_problem(g, total);
  const VertexSet all = VertexSet::full(n);

  std::vector<VertexSet> out;
  if (k == 0) {
    out.push_back(VertexSet{});
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet covered, set;
    for (int i : idx) {
      covered |= p.cover[static_cast<std::size_t>(i)];
      set.set(i);
    }
    if (covered.contains_all(all)) out.push_back(set);
    // Next k-combination of 0..n-1.
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace domtk
