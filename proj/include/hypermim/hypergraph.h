#ifndef HYPERMIM_HYPERGRAPH_H_
#define HYPERMIM_HYPERGRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hypermim/types.h"

namespace hypermim {

struct Edge {
  EdgeId id = 0;
  VertexSet vertices;

  friend bool operator==(const Edge &, const Edge &) = default;
};

// Undirected hypergraph with stable edge identities. Distinct ids may carry
// identical vertex sets; cut sizes count each id separately.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Vertices listed in edges must belong to `vertices`. Edges with fewer than
  // two distinct vertices are dropped.
  Hypergraph(VertexSet vertices, std::vector<Edge> edges);

  // Vertices 0..n-1, edge ids 0..m-1 in list order.
  static Hypergraph from_lists(std::size_t n, const std::vector<std::vector<VertexId>> &edges);

  const VertexSet &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t rank() const;
  std::size_t total_size() const;  // sum of |e|

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  const VertexSet &edge(EdgeId e) const;
  EdgeSet edge_ids() const;
  EdgeSet incident_edges(VertexId v) const;
  VertexId max_vertex_id() const;
  EdgeId max_edge_id() const;

  friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;  // sorted by id
};

// The triple (graph, terminals, budget).
struct Instance {
  Hypergraph graph;
  VertexSet terminals;
  std::uint32_t budget = 0;

  void validate() const;
  std::size_t num_terminals() const { return terminals.size(); }
  bool is_terminal(VertexId v) const;

  friend bool operator==(const Instance &, const Instance &) = default;
};

// Record of a contraction sequence. Merged vertices are named by the smallest
// original id they contain, so maps compose by plain lookup.
struct ContractionMap {
  std::map<VertexId, VertexId> vertex_map;  // original vertex -> current vertex
  std::vector<EdgeId> contracted_edges;     // in contraction order
  std::vector<EdgeId> dropped_edges;        // edges that shrank to one vertex

  static ContractionMap identity(const Hypergraph &g);
  VertexId image(VertexId v) const;
  VertexSet image(const VertexSet &vs) const;
  // `this` followed by `next`; `next` must be defined on the image of `this`.
  ContractionMap then(const ContractionMap &next) const;
  bool empty() const { return contracted_edges.empty(); }
};

std::pair<Hypergraph, ContractionMap> contract(const Hypergraph &g, EdgeId e);
// Sequential replay. Every listed edge must still exist when its turn comes.
std::pair<Hypergraph, ContractionMap> contract_sequence(const Hypergraph &g,
                                                        const std::vector<EdgeId> &order);
// Contraction of the instance, terminals carried to their images.
std::pair<Instance, ContractionMap> contract(const Instance &inst, EdgeId e);
Instance apply(const Instance &inst, const Hypergraph &result, const ContractionMap &map);

EdgeSet boundary(const Hypergraph &g, const VertexSet &x);
EdgeSet induced_edges(const Hypergraph &g, const VertexSet &x);
// Connected components of g minus `removed`, ordered by smallest vertex.
std::vector<VertexSet> components(const Hypergraph &g, const EdgeSet &removed = {});
bool is_connected(const Hypergraph &g);

struct Anchor {
  EdgeId edge = 0;
  VertexId anchor = 0;    // a_e, always fresh
  VertexId terminal = 0;  // t_e
  bool terminal_reused = false;  // t_e is a terminal of the parent inside X
};

// Restricted instance for a vertex set X of the parent.
struct Subinstance {
  Instance instance;
  VertexSet host_set;
  std::map<EdgeId, EdgeId> edge_map;  // parent id -> restricted id
  std::vector<Anchor> anchors;        // one per boundary edge, ascending edge id

  bool is_anchor_vertex(VertexId v) const;
  bool is_restricted_edge(EdgeId restricted) const;
};

Subinstance subinstance(const Instance &inst, const VertexSet &x);

// 2|boundary(X)| + |T cap X|.
std::size_t terminal_capacity(const Instance &inst, const VertexSet &x);

struct DegreeOneTransform {
  Instance instance;
  std::map<VertexId, VertexSet> dummies;  // original terminal -> its new terminals
};

// Every terminal becomes a plain vertex carrying budget+1 pendant terminals.
DegreeOneTransform degree_one_terminal_transform(const Instance &inst);

// Dense 0-based view used by the bitmask routines.
struct DenseView {
  VertexSet vertex_ids;
  EdgeSet edge_ids;
  std::vector<std::vector<int>> edge_vertices;
  std::vector<std::vector<int>> incident;
  std::vector<std::uint64_t> edge_masks;  // filled when n <= 64

  explicit DenseView(const Hypergraph &g);
  int vertex_index(VertexId v) const;  // -1 when absent
  int edge_index(EdgeId e) const;      // -1 when absent
  std::size_t n() const { return vertex_ids.size(); }
  std::size_t m() const { return edge_ids.size(); }
  std::uint64_t mask_of(const VertexSet &vs) const;
  VertexSet vertices_of(std::uint64_t mask) const;
};

// Union-find over dense indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  int find(int x);
  bool unite(int a, int b);

 private:
  std::vector<int> parent_;
};

// Set helpers over sorted vectors.
VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_difference(const VertexSet &a, const VertexSet &b);
VertexSet set_intersection(const VertexSet &a, const VertexSet &b);
bool contains(const std::vector<std::uint32_t> &sorted, std::uint32_t x);
bool is_subset(const std::vector<std::uint32_t> &a, const std::vector<std::uint32_t> &b);
void normalize(std::vector<std::uint32_t> &v);

}  // namespace hypermim

#endif  // HYPERMIM_HYPERGRAPH_H_
