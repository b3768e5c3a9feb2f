#ifndef HYPERMIM_IMPORTANT_CUTS_H_
#define HYPERMIM_IMPORTANT_CUTS_H_

#include <cstdint>
#include <vector>

#include "hypermim/cut_enumeration.h"
#include "hypermim/hypergraph.h"

namespace hypermim {

using NodeId = std::uint32_t;
using NodeSet = std::vector<NodeId>;  // sorted

struct Digraph {
  struct Arc {
    NodeId tail = 0;
    NodeId head = 0;
    std::int64_t multiplicity = 1;
  };

  std::size_t num_nodes = 0;
  std::vector<Arc> arcs;

  explicit Digraph(std::size_t n = 0) : num_nodes(n) {}
  std::size_t add_arc(NodeId tail, NodeId head, std::int64_t multiplicity = 1);
  std::int64_t total_multiplicity() const;
  // Arcs leaving `side`, by index.
  std::vector<std::size_t> out_arcs(const NodeSet &side) const;
  std::int64_t cut_size(const NodeSet &side) const;
};

// V followed by E_in and E_out, each edge block in ascending edge id.
struct IncidenceDigraph {
  Digraph digraph;
  VertexSet vertex_ids;
  EdgeSet edge_ids;

  NodeId vertex_node(VertexId v) const;
  NodeId edge_in(EdgeId e) const;
  NodeId edge_out(EdgeId e) const;
};

// Incidence arcs carry multiplicity 2 max(c, 1), so they never fit in a cut
// of size <= c.
IncidenceDigraph build_d_inc(const Hypergraph &g, std::uint32_t c);

struct DirectedImportantCut {
  NodeSet source_side;
  std::vector<std::size_t> cut_arcs;
  std::int64_t size = 0;
};

// Important (A, B)-cuts of size <= k: no R' strictly containing R and avoiding
// B has an outgoing cut of size <= |out(R)|. Sorted by source side.
std::vector<DirectedImportantCut> enumerate_important_cuts(const Digraph &d, const NodeSet &a, const NodeSet &b,
                                                           std::int64_t k);

struct ImportantCut {
  VertexSet source_side;
  EdgeSet cut;

  friend bool operator==(const ImportantCut &, const ImportantCut &) = default;
};

// Hyperedge important cuts of (A, B) of size <= c, computed through D^inc.
std::vector<ImportantCut> important_cuts_hypergraph(const Hypergraph &g, const VertexSet &a, const VertexSet &b,
                                                    std::uint32_t c);

// Keeps the candidates whose partition is useful, judged through important-cut
// witnesses and the completions of their boundaries.
std::vector<PartitionCandidates> prune_useful(const Instance &inst, const std::vector<PartitionCandidates> &candidates,
                                              Rational phi);

}  // namespace hypermim

#endif  // HYPERMIM_IMPORTANT_CUTS_H_
