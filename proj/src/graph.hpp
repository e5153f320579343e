#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modcg {

// Sorted, duplicate-free list of vertex ids. The canonical currency for
// subsets of vertices throughout the library.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and removes duplicates; negative ids are rejected.
  explicit VertexSet(std::vector<int> members);
  static VertexSet full(int n);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet& o) const { return members_ == o.members_; }
  bool operator<(const VertexSet& o) const { return members_ < o.members_; }

 private:
  std::vector<int> members_;
};

// Simple undirected graph: no self-loops, no parallel edges. Vertices are
// 0..n-1 internally; each vertex keeps the label it had in the input text.
class Graph {
 public:
  Graph() = default;

  // Edges are validated: endpoints in range, no self-loops. Parallel
  // duplicates collapse silently. Labels default to decimal ids.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;  // sorted ascending
  bool has_edge(int u, int v) const;
  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  void check_vertex(int v) const;
};

// Parses "u v" edge lines. Rules:
//   - '#' lines (leading whitespace allowed) and blank lines are skipped
//   - a line with two tokens adds an edge, one token declares an isolated
//     vertex, any other token count is an error
//   - tokens are labels; distinct labels become ids 0..n-1 in first-seen order
//   - duplicate edges collapse silently; a self-loop is an error
//   - with one_indexed, every token must be an integer >= 1 (rejects files
//     that follow the 0-indexed convention)
Graph parse_edge_list(std::string_view text, bool one_indexed = false);

// Canonical text form: one "u v" line per edge, internal ids, sorted.
std::string write_edge_list(const Graph& g);

// Number of edges with both endpoints in s.
long long induced_edge_count(const Graph& g, const VertexSet& s);

// Number of edges with exactly one endpoint in s.
long long cut_size(const Graph& g, const VertexSet& s);

// Complement graph; labels carry over.
Graph complement(const Graph& g);

// Common degree if the graph is regular, nullopt otherwise (n = 0 -> 0).
std::optional<int> regular_degree(const Graph& g);

}  // namespace modcg
