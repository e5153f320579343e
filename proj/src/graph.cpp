#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"

namespace modcg {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  for (int v : members_)
    if (v < 0) throw argument_error("vertex set contains a negative id");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
  if (n < 0) throw argument_error("vertex count must be nonnegative");
  VertexSet s;
  s.members_.resize(n);
  for (int i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw argument_error("vertex count must be nonnegative");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw argument_error("label list size does not match vertex count");

  Graph g;
  g.n_ = n;
  if (labels.empty()) {
    g.labels_.reserve(n);
    for (int v = 0; v < n; ++v) g.labels_.push_back(std::to_string(v));
  } else {
    g.labels_ = std::move(labels);
  }

  std::set<std::pair<int, int>> unique_edges;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw argument_error("edge endpoint out of range");
    if (u == v) throw argument_error("self-loops are not allowed");
    unique_edges.emplace(std::min(u, v), std::max(u, v));
  }

  g.adj_.assign(n, {});
  for (auto [u, v] : unique_edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.m_ = static_cast<long long>(unique_edges.size());
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw argument_error("vertex id out of range");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

bool is_positive_integer_token(const std::string& tok) {
  if (tok.empty()) return false;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size() && value >= 1;
}

}  // namespace

Graph parse_edge_list(std::string_view text, bool one_indexed) {
  std::unordered_map<std::string, int> id_of;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;

  auto intern = [&](const std::string& tok, int line_no) {
    if (one_indexed && !is_positive_integer_token(tok))
      throw parse_error("expected a 1-indexed integer vertex, got '" + tok + "'",
                        line_no);
    auto [it, inserted] = id_of.emplace(tok, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(tok);
    return it->second;
  };

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::istringstream iss{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; iss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') continue;

    if (tokens.size() == 1) {
      intern(tokens[0], line_no);  // isolated vertex declaration
    } else if (tokens.size() == 2) {
      int u = intern(tokens[0], line_no);
      int v = intern(tokens[1], line_no);
      if (u == v) throw parse_error("self-loop on vertex '" + tokens[0] + "'",
                                    line_no);
      edges.emplace_back(u, v);
    } else {
      throw parse_error("expected one or two vertex tokens, got " +
                            std::to_string(tokens.size()),
                        line_no);
    }
  }

  int n = static_cast<int>(labels.size());
  return Graph::from_edges(n, edges, std::move(labels));
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

long long induced_edge_count(const Graph& g, const VertexSet& s) {
  long long twice = 0;
  for (int v : s) {
    if (v >= g.vertex_count()) throw argument_error("vertex id out of range");
    for (int u : g.neighbors(v))
      if (s.contains(u)) ++twice;
  }
  return twice / 2;
}

long long cut_size(const Graph& g, const VertexSet& s) {
  long long degree_sum = 0;
  for (int v : s) degree_sum += g.degree(v);
  return degree_sum - 2 * induced_edge_count(g, s);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2 -
                static_cast<size_t>(g.edge_count()));
  for (int u = 0; u < n; ++u) {
    const auto& nbrs = g.neighbors(u);
    size_t i = 0;
    for (int v = u + 1; v < n; ++v) {
      while (i < nbrs.size() && nbrs[i] < v) ++i;
      if (i < nbrs.size() && nbrs[i] == v) continue;
      edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges, g.labels());
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

}  // namespace modcg
