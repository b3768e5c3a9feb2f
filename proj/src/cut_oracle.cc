#include "hypermim/cut_oracle.h"

#include <algorithm>
#include <map>

namespace hypermim {

namespace {

// Partition of `points` (dense vertex indices, repeats allowed) by the
// components of the view minus the edges flagged in `removed`.
TerminalPartition partition_of(const DenseView &view, const std::vector<char> &removed,
                               const std::vector<int> &points) {
  DisjointSets ds(view.n());
  for (std::size_t i = 0; i < view.m(); ++i) {
    if (removed[i]) continue;
    const auto &vs = view.edge_vertices[i];
    for (std::size_t j = 1; j < vs.size(); ++j) ds.unite(vs[0], vs[j]);
  }
  std::vector<std::uint32_t> roots(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) roots[i] = static_cast<std::uint32_t>(ds.find(points[i]));
  return TerminalPartition::from_labels(roots);
}

std::vector<int> dense_points(const DenseView &view, const VertexSet &vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (VertexId v : vs) {
    int k = view.vertex_index(v);
    if (k < 0) throw Error("vertex " + std::to_string(v) + " not in graph");
    out.push_back(k);
  }
  return out;
}

std::vector<char> removal_flags(const DenseView &view, const EdgeSet &f) {
  std::vector<char> flags(view.m(), 0);
  for (EdgeId e : f) {
    int k = view.edge_index(e);
    if (k < 0) throw Error("unknown edge id " + std::to_string(e));
    flags[k] = 1;
  }
  return flags;
}

}  // namespace

TerminalPartition induced_partition(const Instance &inst, const EdgeSet &removed) {
  DenseView view(inst.graph);
  return partition_of(view, removal_flags(view, removed), dense_points(view, inst.terminals));
}

void for_each_edge_subset(const EdgeSet &edges, std::uint32_t limit,
                          const std::function<bool(const EdgeSet &)> &visit) {
  const std::size_t m = edges.size();
  const std::size_t top = std::min<std::size_t>(limit, m);
  std::vector<std::size_t> idx;
  EdgeSet subset;
  for (std::size_t size = 0; size <= top; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      subset.resize(size);
      for (std::size_t i = 0; i < size; ++i) subset[i] = edges[idx[i]];
      if (!visit(subset)) return;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

CutTable::CutTable(const Instance &inst, std::uint32_t limit) : limit_(limit) {
  DenseView view(inst.graph);
  const std::vector<int> points = dense_points(view, inst.terminals);
  std::vector<char> flags(view.m(), 0);
  for_each_edge_subset(view.edge_ids, limit, [&](const EdgeSet &f) {
    std::fill(flags.begin(), flags.end(), 0);
    for (EdgeId e : f) flags[view.edge_index(e)] = 1;
    entries_.push_back({f, partition_of(view, flags, points)});
    return true;
  });
}

std::vector<TerminalPartition> CutTable::induced_partitions() const {
  std::vector<TerminalPartition> out;
  out.reserve(entries_.size());
  for (const auto &entry : entries_) out.push_back(entry.partition);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<CutCertificate> CutTable::min_cut(const TerminalPartition &part) const {
  for (const auto &entry : entries_) {
    if (refines(entry.partition, part)) {
      return CutCertificate{entry.edges, static_cast<std::uint32_t>(entry.edges.size())};
    }
  }
  return std::nullopt;
}

std::vector<EdgeSet> CutTable::min_cuts(const TerminalPartition &part) const {
  std::vector<EdgeSet> out;
  for (const auto &entry : entries_) {
    if (!out.empty() && entry.edges.size() > out.front().size()) break;
    if (refines(entry.partition, part)) out.push_back(entry.edges);
  }
  return out;
}

EdgeSet CutTable::essential_edges() const {
  EdgeSet out;
  for (const auto &part : induced_partitions()) {
    auto cuts = min_cuts(part);
    if (cuts.empty()) continue;
    EdgeSet common = cuts.front();
    for (std::size_t i = 1; i < cuts.size() && !common.empty(); ++i) common = set_intersection(common, cuts[i]);
    out = set_union(out, common);
  }
  return out;
}

bool is_multiway_cut(const Instance &inst, const TerminalPartition &part, const EdgeSet &f) {
  return refines(induced_partition(inst, f), part);
}

std::optional<CutCertificate> min_multiway_cut(const Instance &inst, const TerminalPartition &part) {
  if (part.size() != inst.terminals.size()) throw Error("partition size does not match terminal count");
  DenseView view(inst.graph);
  const std::vector<int> points = dense_points(view, inst.terminals);
  std::optional<CutCertificate> best;
  for_each_edge_subset(view.edge_ids, inst.budget, [&](const EdgeSet &f) {
    if (refines(partition_of(view, removal_flags(view, f), points), part)) {
      best = CutCertificate{f, static_cast<std::uint32_t>(f.size())};
      return false;
    }
    return true;
  });
  return best;
}

std::optional<CutCertificate> min_multicut(const Instance &inst,
                                           const std::vector<std::pair<VertexId, VertexId>> &pairs) {
  DenseView view(inst.graph);
  std::vector<int> points;
  for (const auto &[a, b] : pairs) {
    if (!inst.is_terminal(a) || !inst.is_terminal(b)) throw Error("multicut pairs must be drawn from terminals");
    points.push_back(view.vertex_index(a));
    points.push_back(view.vertex_index(b));
  }
  std::optional<CutCertificate> best;
  for_each_edge_subset(view.edge_ids, inst.budget, [&](const EdgeSet &f) {
    TerminalPartition p = partition_of(view, removal_flags(view, f), points);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (p.label[2 * i] == p.label[2 * i + 1]) return true;
    }
    best = CutCertificate{f, static_cast<std::uint32_t>(f.size())};
    return false;
  });
  return best;
}

bool is_essential(const Instance &inst, EdgeId e, std::size_t guard_k) {
  if (!inst.graph.has_edge(e)) throw Error("unknown edge id " + std::to_string(e));
  CutTable table(inst, inst.budget);
  bool found = false;
  for_each_partition(
      inst.terminals.size(),
      [&](const TerminalPartition &part) {
        if (found) return;
        auto cuts = table.min_cuts(part);
        if (cuts.empty()) return;
        found = std::all_of(cuts.begin(), cuts.end(), [&](const EdgeSet &f) { return contains(f, e); });
      },
      guard_k);
  return found;
}

EdgeSet essential_edges(const Instance &inst) { return CutTable(inst, inst.budget).essential_edges(); }

bool is_mimicking(const Instance &orig, const Hypergraph &result, const ContractionMap &map) {
  auto [replayed, replay_map] = contract_sequence(orig.graph, map.contracted_edges);
  if (!(replayed == result) || replay_map.vertex_map != map.vertex_map) {
    throw Error("contraction map does not reproduce the result hypergraph");
  }
  const std::uint32_t c = orig.budget;
  DenseView gview(orig.graph);
  DenseView hview(result);
  const std::vector<int> gpoints = dense_points(gview, orig.terminals);
  std::vector<int> hpoints;
  for (VertexId t : orig.terminals) hpoints.push_back(hview.vertex_index(map.image(t)));

  // Value of each induced partition of G.
  std::map<TerminalPartition, std::size_t> g_value;
  std::vector<char> flags(gview.m(), 0);
  for_each_edge_subset(gview.edge_ids, c, [&](const EdgeSet &f) {
    std::fill(flags.begin(), flags.end(), 0);
    for (EdgeId e : f) flags[gview.edge_index(e)] = 1;
    g_value.emplace(partition_of(gview, flags, gpoints), f.size());
    return true;
  });
  std::vector<std::pair<TerminalPartition, std::size_t>> h_cuts;
  std::vector<char> hflags(hview.m(), 0);
  for_each_edge_subset(hview.edge_ids, c, [&](const EdgeSet &f) {
    std::fill(hflags.begin(), hflags.end(), 0);
    for (EdgeId e : f) hflags[hview.edge_index(e)] = 1;
    h_cuts.emplace_back(partition_of(hview, hflags, hpoints), f.size());
    return true;
  });
  for (const auto &[part, value] : g_value) {
    bool matched = false;
    for (const auto &[hp, size] : h_cuts) {
      if (size > value) break;
      if (refines(hp, part)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace hypermim
