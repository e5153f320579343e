#pragma once

#include <optional>

#include "graph.hpp"
#include "objectives.hpp"

namespace modcg {

// Where a blow-up vertex lives: which source vertex it copies, whether it
// sits in the primed block, and its offset inside that block.
struct BlockRef {
  int source_vertex = 0;
  bool primed = false;
  int offset = 0;
};

// Blow-up instance turning a max-cut question on a 3-regular graph into a
// modularity-density threshold question on a regular graph. Each source
// vertex v becomes two blocks of m_size vertices wired so the blow-up is
// (m_size-1)-regular; the solver-facing instance is the complement.
struct MdGadget {
  Graph source;
  long long m_size = 0;  // block size, n^3 unless overridden
  int target_cut = 0;
  Graph g_star;
  Graph complement_g_star;
  long long r_star_num = 0;  // threshold as an exact fraction
  long long r_star_den = 1;
  double r_star = 0.0;
  bool certifying = true;  // false when the block size was overridden

  BlockRef block_of(int gadget_vertex) const;
  int vertex_of(int source_vertex, bool primed, int offset) const;
};

// Requires a 3-regular source with >= 4 vertices. An override of the block
// size must be >= 5 (the wiring needs five distinct offsets) and stamps the
// result non-certifying, since the threshold argument needs the full n^3.
MdGadget build_md_gadget(const Graph& source, int target_cut,
                         std::optional<long long> m_override = std::nullopt);

// Two-cluster partition of the blow-up induced by a cut {X, V\X} of the
// source: X's plain blocks plus the other side's primed blocks form one
// cluster. X must be a nonempty proper subset.
Partition cut_to_partition(const MdGadget& gadget, const VertexSet& x);

// Clique-detection instance for the pricing subproblem: the graph is used
// as-is with uniform duals; a k-clique exists exactly when some subset
// reaches the threshold pricing value.
struct ApGadget {
  Graph graph;
  int clique_size = 0;
  DualSolution lambda;       // 2(k-1)/k on every vertex
  double r_star = 0.0;       // -(n-4)
};

// Requires the graph to be (n-4)-regular and clique_size >= 2.
ApGadget build_ap_gadget(const Graph& g, int clique_size);

}  // namespace modcg
