#include <map>

#include "hypermim/cut_oracle.h"
#include "hypermim/flow.h"

namespace hypermim {

std::uint32_t edge_disjoint_paths(const Hypergraph &g, const VertexSet &sources, const std::vector<EdgeId> &targets,
                                  const EdgeSet &reuse) {
  DenseView view(g);
  const int n = static_cast<int>(view.n());
  const int m = static_cast<int>(view.m());
  // Layout: super, sink, start hubs, vertex hubs, edge in, edge out.
  const int super = 0, sink = 1;
  auto start_hub = [&](int v) { return 2 + v; };
  auto vertex_hub = [&](int v) { return 2 + n + v; };
  auto edge_in = [&](int e) { return 2 + 2 * n + e; };
  auto edge_out = [&](int e) { return 2 + 2 * n + m + e; };
  MaxFlow flow(2 + 2 * n + 2 * m);

  for (VertexId s : sources) {
    int v = view.vertex_index(s);
    if (v < 0) throw Error("source " + std::to_string(s) + " not in graph");
    flow.add_arc(super, start_hub(v), MaxFlow::kInfinite);
    for (int e : view.incident[v]) flow.add_arc(start_hub(v), edge_in(e), 1);
  }
  for (int e = 0; e < m; ++e) {
    flow.add_arc(edge_in(e), edge_out(e), 1);
    for (int v : view.edge_vertices[e]) {
      flow.add_arc(edge_out(e), vertex_hub(v), MaxFlow::kInfinite);
      flow.add_arc(vertex_hub(v), edge_in(e), MaxFlow::kInfinite);
    }
  }

  std::map<EdgeId, int> multiplicity;
  for (EdgeId t : targets) ++multiplicity[t];
  for (const auto &[t, count] : multiplicity) {
    int e = view.edge_index(t);
    if (e < 0) throw Error("target edge " + std::to_string(t) + " not in graph");
    if (count > 2) throw Error("target edge " + std::to_string(t) + " listed more than twice");
    const bool real_end = count == 2 || !contains(reuse, t);
    const bool sink_end = count == 2 || contains(reuse, t);
    if (real_end) flow.add_arc(edge_out(e), sink, 1);
    if (sink_end) {
      int virt = flow.add_node();
      for (int v : view.edge_vertices[e]) flow.add_arc(vertex_hub(v), virt, MaxFlow::kInfinite);
      flow.add_arc(virt, sink, 1);
    }
  }
  return static_cast<std::uint32_t>(flow.run(super, sink));
}

}  // namespace hypermim
