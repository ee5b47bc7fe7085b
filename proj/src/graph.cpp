#include "domtk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace domtk {

namespace {

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": non-integer token '" + std::string(token) + "'");
  return value;
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw std::invalid_argument("vertex_count " + std::to_string(vertex_count) +
                                " outside [0, " + std::to_string(kMaxVertices) + "]");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.resize(static_cast<std::size_t>(vertex_count_));
  for (const Edge& e : edges_) {
    if (e.v >= vertex_count_)
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " >= vertex_count " + std::to_string(vertex_count_));
    if (e.u < 0) throw std::invalid_argument("negative vertex ID");
    adjacency_[static_cast<std::size_t>(e.u)].set(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].set(e.u);
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < vertex_count_; ++v)
    if (adjacency_[static_cast<std::size_t>(v)].empty()) return true;
  return false;
}

Graph Graph::remove_edges(const std::vector<Edge>& removed) const {
  std::vector<Edge> kept = edges_;
  for (const Edge& e : removed) {
    auto it = std::find(kept.begin(), kept.end(), e);
    if (it == kept.end())
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " not present");
    kept.erase(it);
  }
  return Graph(vertex_count_, std::move(kept));
}

Graph Graph::add_edges(const std::vector<Edge>& added) const {
  std::vector<Edge> all = edges_;
  for (const Edge& e : added) {
    if (has_edge(e.u, e.v))
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " already present");
    if (e.v >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    all.push_back(e);
  }
  // Duplicates within `added` itself are also rejected.
  std::vector<Edge> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate edge in addition set");
  return Graph(vertex_count_, std::move(all));
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count_; ++u)
    for (int v = u + 1; v < vertex_count_; ++v)
      if (!has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_id = -1;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (first == "n") {
      std::string count;
      if (!(ls >> count))
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": header missing vertex count");
      declared = parse_int(count, line_no);
      continue;
    }
    std::string second;
    if (!(ls >> second))
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'u v' pair");
    int u = parse_int(first, line_no);
    int v = parse_int(second, line_no);
    if (u == v)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": negative vertex ID");
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  int vertex_count = declared >= 0 ? declared : max_id + 1;
  if (max_id >= vertex_count)
    throw std::invalid_argument("endpoint " + std::to_string(max_id) +
                                " >= declared vertex count " +
                                std::to_string(vertex_count));
  return Graph(vertex_count, std::move(edges));
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g, const std::map<int, std::string>& labels,
                   const VertexSet& highlight) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    auto it = labels.find(v);
    bool filled = highlight.test(v);
    if (it != labels.end() || filled) {
      out << " [";
      if (it != labels.end()) out << "label=\"" << it->second << "\"";
      if (filled) {
        if (it != labels.end()) out << ", ";
        out << "style=filled";
      }
      out << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace domtk
