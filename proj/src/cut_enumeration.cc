#include "hypermim/cut_enumeration.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hypermim/expander.h"

namespace hypermim {

namespace {

class HelpSearch {
 public:
  HelpSearch(const Hypergraph &g, VertexId t, std::uint32_t c, std::uint64_t m_bound, const EnumerationOptions &options)
      : view_(g), g_(g), c_(c), m_bound_(m_bound), options_(options) {
    t_ = view_.vertex_index(t);
    if (t_ < 0) throw Error("start vertex " + std::to_string(t) + " not in graph");
    rank_limit_ = g.rank() * c;
  }

  void run(std::vector<char> removed) { branch(std::move(removed), 0); }
  std::set<VertexSet> &found() { return found_; }

 private:
  void branch(std::vector<char> removed, std::size_t removed_count) {
    if (removed_count > rank_limit_) return;
    if (!seen_.insert(removed).second) return;

    std::vector<char> visited_v(view_.n(), 0), visited_e(view_.m(), 0);
    std::uint64_t edges = 0;
    bool stopped = false;
    std::function<void(int)> dfs = [&](int u) {
      visited_v[u] = 1;
      for (int e : view_.incident[u]) {
        if (stopped) return;
        if (visited_e[e]) continue;
        visited_e[e] = 1;
        if (++edges > m_bound_) {
          stopped = true;
          return;
        }
        for (int w : view_.edge_vertices[e]) {
          if (stopped) return;
          if (!removed[w] && !visited_v[w]) dfs(w);
        }
      }
    };
    dfs(t_);

    VertexSet c_set;
    for (std::size_t v = 0; v < view_.n(); ++v) {
      if (visited_v[v]) c_set.push_back(view_.vertex_ids[v]);
    }
    if (edges <= m_bound_ && boundary(g_, c_set).size() <= c_) {
      found_.insert(c_set);
      if (!options_.emit_and_continue) return;
    }
    for (std::size_t v = 0; v < view_.n(); ++v) {
      if (!visited_v[v] || static_cast<int>(v) == t_) continue;
      removed[v] = 1;
      branch(removed, removed_count + 1);
      removed[v] = 0;
    }
  }

  DenseView view_;
  const Hypergraph &g_;
  std::uint32_t c_;
  std::uint64_t m_bound_;
  EnumerationOptions options_;
  int t_ = -1;
  std::size_t rank_limit_ = 0;
  std::set<std::vector<char>> seen_;
  std::set<VertexSet> found_;
};

}  // namespace

std::vector<VertexSet> enumerate_cuts_help(const Hypergraph &g, VertexId t, const VertexSet &x, std::uint32_t c,
                                           std::uint64_t m_bound, const EnumerationOptions &options) {
  if (contains(x, t)) throw Error("start vertex lies in the excluded set");
  HelpSearch search(g, t, c, m_bound, options);
  DenseView view(g);
  std::vector<char> removed(view.n(), 0);
  for (VertexId v : x) {
    int k = view.vertex_index(v);
    if (k < 0) throw Error("excluded vertex " + std::to_string(v) + " not in graph");
    removed[k] = 1;
  }
  if (x.size() > g.rank() * c) return {};
  search.run(std::move(removed));
  return {search.found().begin(), search.found().end()};
}

Core core_of(const Instance &inst, const EdgeSet &f, Rational phi) {
  if (!phi.positive()) throw Error("phi must be positive");
  Core core;
  core.generating_cut = f;
  for (const auto &component : components(inst.graph, f)) {
    const std::size_t inside = induced_edges(inst.graph, component).size();
    if (static_cast<__int128>(inside) * phi.num <= static_cast<__int128>(f.size()) * phi.den) {
      core.vertex_set = set_union(core.vertex_set, component);
    }
  }
  return core;
}

bool terminals_connected_within(const Instance &inst, const VertexSet &set) {
  VertexSet terminals = set_intersection(inst.terminals, set);
  if (terminals.size() <= 1) return true;
  std::vector<Edge> trimmed;
  for (const auto &e : inst.graph.edges()) {
    VertexSet inside = set_intersection(e.vertices, set);
    if (inside.size() >= 2) trimmed.push_back({e.id, std::move(inside)});
  }
  Hypergraph h(set, std::move(trimmed));
  for (const auto &component : components(h)) {
    if (contains(component, terminals.front())) return is_subset(terminals, component);
  }
  return false;
}

bool is_connected_multiway_cut(const Instance &inst, const EdgeSet &f, Rational phi) {
  if (f.size() > inst.budget) return false;
  auto best = min_multiway_cut(inst, induced_partition(inst, f));
  if (!best || best->value != f.size()) return false;
  return terminals_connected_within(inst, core_of(inst, f, phi).vertex_set);
}

std::vector<CandidateCut> connected_multiway_cuts(const Instance &inst, Rational phi,
                                                  const EnumerationOptions &options) {
  const std::uint32_t c = inst.budget;
  if (options.check_expander) {
    ExpanderOptions eo;
    eo.guard_n = options.expander_guard_n;
    if (!is_phi_expander(inst.graph, phi, eo).expander) {
      throw Error("connected multiway cut enumeration requires a phi-expander");
    }
  }
  const std::uint64_t m_bound = small_regime_threshold(c, phi);
  const VertexSet &starts = options.all_vertices ? inst.graph.vertices() : inst.terminals;
  std::set<VertexSet> sets;
  for (VertexId t : starts) {
    for (auto &s : enumerate_cuts_help(inst.graph, t, {}, c, m_bound, options)) sets.insert(std::move(s));
  }
  std::set<EdgeSet> cuts{EdgeSet{}};
  for (const auto &s : sets) {
    EdgeSet cut = boundary(inst.graph, s);
    if (cut.size() > c) continue;
    EdgeSet interior = induced_edges(inst.graph, s);
    for_each_edge_subset(interior, c - static_cast<std::uint32_t>(cut.size()), [&](const EdgeSet &extra) {
      cuts.insert(set_union(cut, extra));
      return true;
    });
  }
  std::vector<CandidateCut> out;
  out.reserve(cuts.size());
  for (const auto &f : cuts) out.push_back({f, core_of(inst, f, phi), {}});
  return out;
}

std::vector<PartitionCandidates> partitions_from_cuts(const Instance &inst, const std::vector<CandidateCut> &cuts) {
  std::vector<std::pair<TerminalPartition, const EdgeSet *>> induced;
  induced.reserve(cuts.size());
  for (const auto &cut : cuts) induced.emplace_back(induced_partition(inst, cut.edges), &cut.edges);
  std::set<TerminalPartition> distinct;
  for (const auto &[p, f] : induced) distinct.insert(p);

  std::vector<PartitionCandidates> out;
  for (const auto &part : distinct) {
    PartitionCandidates pc;
    pc.partition = part;
    std::size_t best = SIZE_MAX;
    for (const auto &[p, f] : induced) {
      if (!refines(p, part)) continue;
      if (f->size() < best) {
        best = f->size();
        pc.min_cuts.clear();
      }
      if (f->size() == best) pc.min_cuts.push_back(*f);
    }
    std::sort(pc.min_cuts.begin(), pc.min_cuts.end());
    pc.min_cuts.erase(std::unique(pc.min_cuts.begin(), pc.min_cuts.end()), pc.min_cuts.end());
    pc.value = static_cast<std::uint32_t>(best);
    out.push_back(std::move(pc));
  }
  return out;
}

}  // namespace hypermim
