#include "hypermim/important_cuts.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hypermim/flow.h"

namespace hypermim {

std::size_t Digraph::add_arc(NodeId tail, NodeId head, std::int64_t multiplicity) {
  if (tail >= num_nodes || head >= num_nodes) throw Error("arc endpoint out of range");
  if (multiplicity < 1) throw Error("arc multiplicity must be positive");
  arcs.push_back({tail, head, multiplicity});
  return arcs.size() - 1;
}

std::int64_t Digraph::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto &a : arcs) total += a.multiplicity;
  return total;
}

std::vector<std::size_t> Digraph::out_arcs(const NodeSet &side) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (contains(side, arcs[i].tail) && !contains(side, arcs[i].head)) out.push_back(i);
  }
  return out;
}

std::int64_t Digraph::cut_size(const NodeSet &side) const {
  std::int64_t total = 0;
  for (std::size_t i : out_arcs(side)) total += arcs[i].multiplicity;
  return total;
}

NodeId IncidenceDigraph::vertex_node(VertexId v) const {
  auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), v);
  if (it == vertex_ids.end() || *it != v) throw Error("vertex " + std::to_string(v) + " not in graph");
  return static_cast<NodeId>(it - vertex_ids.begin());
}

NodeId IncidenceDigraph::edge_in(EdgeId e) const {
  auto it = std::lower_bound(edge_ids.begin(), edge_ids.end(), e);
  if (it == edge_ids.end() || *it != e) throw Error("unknown edge id " + std::to_string(e));
  return static_cast<NodeId>(vertex_ids.size() + (it - edge_ids.begin()));
}

NodeId IncidenceDigraph::edge_out(EdgeId e) const { return static_cast<NodeId>(edge_in(e) + edge_ids.size()); }

IncidenceDigraph build_d_inc(const Hypergraph &g, std::uint32_t c) {
  IncidenceDigraph out;
  out.vertex_ids = g.vertices();
  out.edge_ids = g.edge_ids();
  out.digraph = Digraph(g.num_vertices() + 2 * g.num_edges());
  const std::int64_t heavy = 2 * static_cast<std::int64_t>(std::max<std::uint32_t>(c, 1));
  for (const auto &e : g.edges()) {
    const NodeId in = out.edge_in(e.id), outn = out.edge_out(e.id);
    out.digraph.add_arc(in, outn, 1);
    for (VertexId v : e.vertices) {
      out.digraph.add_arc(out.vertex_node(v), in, heavy);
      out.digraph.add_arc(outn, out.vertex_node(v), heavy);
    }
  }
  return out;
}

namespace {

struct MinCutResult {
  std::int64_t value = 0;
  bool exceeds = false;
  std::vector<char> side;  // furthest minimum cut source side
};

MinCutResult furthest_min_cut(const Digraph &d, const std::vector<char> &dropped, const std::vector<char> &a,
                              const std::vector<char> &b, std::int64_t limit) {
  const int n = static_cast<int>(d.num_nodes);
  MaxFlow flow(n + 2);
  const int s = n, t = n + 1;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    if (!dropped[i]) flow.add_arc(static_cast<int>(d.arcs[i].tail), static_cast<int>(d.arcs[i].head), d.arcs[i].multiplicity);
  }
  for (int v = 0; v < n; ++v) {
    if (a[v]) flow.add_arc(s, v, MaxFlow::kInfinite);
    if (b[v]) flow.add_arc(v, t, MaxFlow::kInfinite);
  }
  MinCutResult result;
  result.value = flow.run(s, t, limit + 1);
  if (result.value > limit) {
    result.exceeds = true;
    return result;
  }
  std::vector<bool> reach = flow.reaching(t);
  result.side.assign(n, 0);
  for (int v = 0; v < n; ++v) result.side[v] = !reach[v];
  return result;
}

NodeSet to_nodes(const std::vector<char> &flags) {
  NodeSet out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(static_cast<NodeId>(i));
  }
  return out;
}

class ImportantCutSearch {
 public:
  ImportantCutSearch(const Digraph &d, const std::vector<char> &b) : d_(d), b_(b) {}

  void branch(const std::vector<char> &a, const std::vector<char> &dropped, std::int64_t k) {
    if (k < 0) return;
    std::string key(a.begin(), a.end());
    key.append(dropped.begin(), dropped.end());
    key += std::to_string(k);
    if (!seen_.insert(std::move(key)).second) return;

    MinCutResult cut = furthest_min_cut(d_, dropped, a, b_, k);
    if (cut.exceeds) return;
    candidates_.insert(to_nodes(cut.side));
    if (cut.value == 0) {
      for (std::size_t v = 0; v < d_.num_nodes; ++v) {
        if (cut.side[v] || b_[v]) continue;
        std::vector<char> grown = cut.side;
        grown[v] = 1;
        branch(grown, dropped, k);
      }
      return;
    }
    std::size_t pick = d_.arcs.size();
    for (std::size_t i = 0; i < d_.arcs.size(); ++i) {
      if (!dropped[i] && cut.side[d_.arcs[i].tail] && !cut.side[d_.arcs[i].head]) {
        pick = i;
        break;
      }
    }
    if (pick == d_.arcs.size()) throw Error("positive cut without a crossing arc");
    std::vector<char> fewer = dropped;
    fewer[pick] = 1;
    branch(cut.side, fewer, k - d_.arcs[pick].multiplicity);
    const NodeId head = d_.arcs[pick].head;
    if (!b_[head]) {
      std::vector<char> grown = cut.side;
      grown[head] = 1;
      branch(grown, dropped, k);
    }
  }

  const std::set<NodeSet> &candidates() const { return candidates_; }

 private:
  const Digraph &d_;
  const std::vector<char> &b_;
  std::set<std::string> seen_;
  std::set<NodeSet> candidates_;
};

}  // namespace

std::vector<DirectedImportantCut> enumerate_important_cuts(const Digraph &d, const NodeSet &a, const NodeSet &b,
                                                           std::int64_t k) {
  std::vector<char> af(d.num_nodes, 0), bf(d.num_nodes, 0);
  for (NodeId v : a) {
    if (v >= d.num_nodes) throw Error("source node out of range");
    af[v] = 1;
  }
  for (NodeId v : b) {
    if (v >= d.num_nodes) throw Error("sink node out of range");
    if (af[v]) throw Error("source and sink sets intersect");
    bf[v] = 1;
  }
  const std::vector<char> none(d.arcs.size(), 0);
  ImportantCutSearch search(d, bf);
  search.branch(af, none, k);

  std::vector<DirectedImportantCut> out;
  for (const NodeSet &r : search.candidates()) {
    const std::int64_t size = d.cut_size(r);
    if (size > k) continue;
    std::vector<char> rf(d.num_nodes, 0);
    for (NodeId v : r) rf[v] = 1;
    MinCutResult check = furthest_min_cut(d, none, rf, bf, size);
    if (check.exceeds || check.value != size || check.side != rf) continue;
    out.push_back({r, d.out_arcs(r), size});
  }
  return out;
}

std::vector<ImportantCut> important_cuts_hypergraph(const Hypergraph &g, const VertexSet &a, const VertexSet &b,
                                                    std::uint32_t c) {
  if (!set_intersection(a, b).empty()) throw Error("important cut sides intersect");
  IncidenceDigraph inc = build_d_inc(g, c);
  NodeSet an, bn;
  for (VertexId v : a) an.push_back(inc.vertex_node(v));
  for (VertexId v : b) bn.push_back(inc.vertex_node(v));
  std::set<VertexSet> seen;
  std::vector<ImportantCut> out;
  for (const auto &cut : enumerate_important_cuts(inc.digraph, an, bn, c)) {
    VertexSet r;
    for (NodeId node : cut.source_side) {
      if (node < inc.vertex_ids.size()) r.push_back(inc.vertex_ids[node]);
    }
    EdgeSet hyper = boundary(g, r);
    std::vector<std::size_t> expected;
    for (EdgeId e : hyper) {
      for (std::size_t i = 0; i < inc.digraph.arcs.size(); ++i) {
        if (inc.digraph.arcs[i].tail == inc.edge_in(e) && inc.digraph.arcs[i].head == inc.edge_out(e)) {
          expected.push_back(i);
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    if (expected != cut.cut_arcs) continue;
    if (!seen.insert(r).second) continue;
    out.push_back({std::move(r), std::move(hyper)});
  }
  std::sort(out.begin(), out.end(),
            [](const ImportantCut &x, const ImportantCut &y) { return x.source_side < y.source_side; });
  return out;
}

std::vector<PartitionCandidates> prune_useful(const Instance &inst, const std::vector<PartitionCandidates> &candidates,
                                              Rational phi) {
  const std::uint32_t c = inst.budget;
  std::map<VertexSet, std::vector<ImportantCut>> cache;
  std::map<EdgeSet, bool> connected_cache;
  auto connected = [&](const EdgeSet &f) {
    auto it = connected_cache.find(f);
    if (it != connected_cache.end()) return it->second;
    bool value = is_connected_multiway_cut(inst, f, phi);
    connected_cache.emplace(f, value);
    return value;
  };

  std::vector<PartitionCandidates> out;
  for (const auto &pc : candidates) {
    if (pc.value > c) continue;
    std::vector<std::pair<EdgeSet, std::uint32_t>> witnessed;
    std::uint32_t best = pc.value;
    for (const auto &block : pc.partition.blocks(inst.terminals)) {
      auto it = cache.find(block);
      if (it == cache.end()) {
        it = cache.emplace(block, important_cuts_hypergraph(inst.graph, block, set_difference(inst.terminals, block), c))
                 .first;
      }
      for (const auto &ic : it->second) {
        const std::size_t inside = induced_edges(inst.graph, ic.source_side).size();
        // |E(R)| >= c phi^-1
        if (static_cast<__int128>(inside) * phi.num < static_cast<__int128>(c) * phi.den) continue;
        if (ic.cut.size() > c) continue;
        EdgeSet outside = induced_edges(inst.graph, set_difference(inst.graph.vertices(), ic.source_side));
        for_each_edge_subset(outside, c - static_cast<std::uint32_t>(ic.cut.size()), [&](const EdgeSet &extra) {
          EdgeSet f = set_union(ic.cut, extra);
          if (is_multiway_cut(inst, pc.partition, f)) {
            witnessed.emplace_back(f, static_cast<std::uint32_t>(f.size()));
            best = std::min<std::uint32_t>(best, static_cast<std::uint32_t>(f.size()));
          }
          return true;
        });
      }
    }
    // a cheaper cut outside the pool means no minimum cut was enumerated
    bool useful = best == pc.value;
    for (const auto &[f, size] : witnessed) {
      if (size == best && !connected(f)) {
        useful = false;
        break;
      }
    }
    if (useful) out.push_back(pc);
  }
  return out;
}

}  // namespace hypermim
