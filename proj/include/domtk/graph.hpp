#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace domtk {

// Largest vertex count the fixed-width mask representation supports.
inline constexpr int kMaxVertices = 128;

// Set of vertex IDs backed by a 128-bit mask.
class VertexSet {
 public:
  VertexSet() = default;

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.set(v);
    return s;
  }

  // All vertices 0..vertex_count-1.
  static VertexSet full(int vertex_count) {
    VertexSet s;
    for (int v = 0; v < vertex_count; ++v) s.set(v);
    return s;
  }

  bool test(int v) const { return (words_[word(v)] >> bit(v)) & 1u; }
  void set(int v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
  void reset(int v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

  int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  bool empty() const { return words_[0] == 0 && words_[1] == 0; }

  VertexSet operator|(const VertexSet& o) const {
    return VertexSet{words_[0] | o.words_[0], words_[1] | o.words_[1]};
  }
  VertexSet operator&(const VertexSet& o) const {
    return VertexSet{words_[0] & o.words_[0], words_[1] & o.words_[1]};
  }
  // Set difference.
  VertexSet operator-(const VertexSet& o) const {
    return VertexSet{words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
  }
  VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }

  bool contains_all(const VertexSet& o) const { return (o - *this).empty(); }
  bool intersects(const VertexSet& o) const { return !(*this & o).empty(); }

  // Smallest member, -1 when empty.
  int lowest() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int v = 64 * w + std::countr_zero(bits);
        f(v);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    if (auto c = a.words_[1] <=> b.words_[1]; c != 0) return c;
    return a.words_[0] <=> b.words_[0];
  }

 private:
  VertexSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
  static int word(int v) { return v >> 6; }
  static int bit(int v) { return v & 63; }

  std::array<std::uint64_t, 2> words_{};
};

// Unordered pair of distinct vertex IDs, stored with u < v.
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("self-loop edge " + std::to_string(a));
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph over dense vertex IDs 0..n-1.
// Edits return new graphs; values are safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }
  VertexSet closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    s.set(v);
    return s;
  }
  bool has_edge(int a, int b) const {
    return a != b && a >= 0 && b >= 0 && a < vertex_count_ &&
           b < vertex_count_ && adjacency_[static_cast<std::size_t>(a)].test(b);
  }
  int degree(int v) const { return neighbors(v).count(); }
  int max_degree() const;
  bool has_isolated_vertex() const;

  Graph remove_edges(const std::vector<Edge>& removed) const;
  Graph add_edges(const std::vector<Edge>& added) const;
  std::vector<Edge> non_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  int vertex_count_ = 0;
  std::vector<Edge> edges_;  // sorted, unique
  std::vector<VertexSet> adjacency_;
};

// Edge-list text format: optional "n <vertex_count>" header, "#" comments,
// one "u v" pair per line. Duplicate edge lines collapse.
Graph parse_edge_list(std::string_view text);
std::string serialize(const Graph& g);

// DOT rendering; vertices in `highlight` are drawn filled. Deterministic.
std::string to_dot(const Graph& g,
                   const std::map<int, std::string>& labels = {},
                   const VertexSet& highlight = {});

}  // namespace domtk
