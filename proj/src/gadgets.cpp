#include "gadgets.hpp"

#include <utility>
#include <vector>

#include "errors.hpp"

namespace modcg {

namespace {

constexpr long long kMaxComplementEdges = 50'000'000;

void require_regular(const Graph& g, int want, const char* what) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != want)
      throw argument_error(std::string(what) + ": vertex " + g.label(v) +
                           " has degree " + std::to_string(g.degree(v)) +
                           ", expected " + std::to_string(want));
}

}  // namespace

BlockRef MdGadget::block_of(int gadget_vertex) const {
  long long half = m_size * source.vertex_count();
  if (gadget_vertex < 0 || gadget_vertex >= 2 * half)
    throw argument_error("blow-up vertex out of range");
  BlockRef ref;
  long long local = gadget_vertex;
  if (local >= half) {
    ref.primed = true;
    local -= half;
  }
  ref.source_vertex = static_cast<int>(local / m_size);
  ref.offset = static_cast<int>(local % m_size);
  return ref;
}

int MdGadget::vertex_of(int source_vertex, bool primed, int offset) const {
  if (source_vertex < 0 || source_vertex >= source.vertex_count())
    throw argument_error("source vertex out of range");
  if (offset < 0 || offset >= m_size)
    throw argument_error("block offset out of range");
  long long half = m_size * source.vertex_count();
  long long id = source_vertex * m_size + offset + (primed ? half : 0);
  return static_cast<int>(id);
}

MdGadget build_md_gadget(const Graph& source, int target_cut,
                         std::optional<long long> m_override) {
  int n = source.vertex_count();
  if (n < 4) throw argument_error("blow-up needs at least four vertices");
  require_regular(source, 3, "blow-up source must be 3-regular");
  if (target_cut < 0) throw argument_error("target cut value is negative");

  MdGadget out;
  out.source = source;
  out.target_cut = target_cut;
  if (m_override) {
    if (*m_override < 5)
      throw argument_error("block size override must be at least 5");
    out.m_size = *m_override;
    out.certifying = false;
  } else {
    out.m_size = static_cast<long long>(n) * n * n;
    out.certifying = true;
  }

  long long M = out.m_size;
  long long half = M * n;        // vertices per side
  long long total = 2 * half;    // |V*|
  long long comp_edges = half * (total - M);
  if (total > 2'000'000 || comp_edges > kMaxComplementEdges)
    throw too_large_error("blow-up would not fit in memory");
  int N = static_cast<int>(total);

  auto plain = [&](int v, long long i) {
    return static_cast<int>(v * M + i);
  };
  auto primed = [&](int v, long long j) {
    return static_cast<int>(half + v * M + j);
  };

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n * (M * M - M - 3) + 2 * source.edge_count()));
  for (auto [u, v] : source.edges()) {
    edges.emplace_back(plain(u, 0), plain(v, 0));
    edges.emplace_back(primed(u, 0), primed(v, 0));
  }
  for (int v = 0; v < n; ++v) {
    for (long long j = 4; j < M; ++j) edges.emplace_back(plain(v, 0), primed(v, j));
    for (long long i = 1; i <= 3; ++i)
      for (long long j = 1; j < M; ++j) edges.emplace_back(plain(v, i), primed(v, j));
    for (long long i = 4; i < M; ++i)
      for (long long j = 0; j < M; ++j)
        if (j != i) edges.emplace_back(plain(v, i), primed(v, j));
  }
  out.g_star = Graph::from_edges(N, edges);

  for (int v = 0; v < N; ++v)
    if (out.g_star.degree(v) != M - 1)
      throw internal_error("blow-up wiring failed its degree audit");

  std::vector<std::pair<int, int>> comp;
  comp.reserve(static_cast<size_t>(comp_edges));
  std::vector<char> mark(N, 0);
  for (int u = 0; u < N; ++u) {
    for (int w : out.g_star.neighbors(u)) mark[w] = 1;
    for (int w = u + 1; w < N; ++w)
      if (!mark[w]) comp.emplace_back(u, w);
    for (int w : out.g_star.neighbors(u)) mark[w] = 0;
  }
  out.complement_g_star = Graph::from_edges(N, comp);

  for (int v = 0; v < N; ++v)
    if (out.complement_g_star.degree(v) != total - M)
      throw internal_error("blow-up complement failed its degree audit");

  // threshold 2M - 4 - 12/M + 8k/(Mn) over the common denominator Mn
  out.r_star_num = 2 * M * M * n - 4 * M * n - 12 * n + 8 * target_cut;
  out.r_star_den = M * n;
  out.r_star = static_cast<double>(out.r_star_num) /
               static_cast<double>(out.r_star_den);
  return out;
}

Partition cut_to_partition(const MdGadget& gadget, const VertexSet& x) {
  int n = gadget.source.vertex_count();
  if (x.empty() || x.size() >= n)
    throw argument_error("cut side must be a nonempty proper subset");
  for (int v : x)
    if (v >= n) throw argument_error("cut side names an unknown vertex");

  std::vector<int> side_a, side_b;
  side_a.reserve(static_cast<size_t>(gadget.m_size) * n);
  side_b.reserve(static_cast<size_t>(gadget.m_size) * n);
  for (int v = 0; v < n; ++v) {
    bool in_x = x.contains(v);
    for (long long i = 0; i < gadget.m_size; ++i) {
      (in_x ? side_a : side_b).push_back(gadget.vertex_of(v, false, static_cast<int>(i)));
      (in_x ? side_b : side_a).push_back(gadget.vertex_of(v, true, static_cast<int>(i)));
    }
  }
  int N = gadget.g_star.vertex_count();
  return Partition(N, {VertexSet(std::move(side_a)), VertexSet(std::move(side_b))});
}

ApGadget build_ap_gadget(const Graph& g, int clique_size) {
  int n = g.vertex_count();
  if (clique_size < 2) throw argument_error("clique size must be at least 2");
  require_regular(g, n - 4, "pricing gadget needs an (n-4)-regular graph");

  ApGadget out;
  out.graph = g;
  out.clique_size = clique_size;
  double lam = 2.0 * (clique_size - 1) / clique_size;
  out.lambda.lambda.assign(n, lam);
  out.r_star = -static_cast<double>(n - 4);
  return out;
}

}  // namespace modcg
