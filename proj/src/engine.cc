#include "hypermim/engine.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hypermim/cut_enumeration.h"
#include "hypermim/cut_oracle.h"
#include "hypermim/expander.h"
#include "hypermim/important_cuts.h"
#include "hypermim/parallel.h"

namespace hypermim {

namespace {

void step(Instance &cur, ContractionMap &map, EdgeId e, ContractionMap *last = nullptr) {
  auto [h, one] = contract(cur.graph, e);
  cur = Instance{std::move(h), one.image(cur.terminals), cur.budget};
  map = map.then(one);
  if (last) *last = std::move(one);
}

}  // namespace

std::pair<Hypergraph, ContractionMap> minimal_mimicking_small(const Instance &inst, const EdgeSet &locked) {
  Instance cur = inst;
  ContractionMap map = ContractionMap::identity(inst.graph);
  while (true) {
    const EdgeSet essential = essential_edges(cur);
    std::optional<EdgeId> pick;
    for (const auto &e : cur.graph.edges()) {
      if (!contains(essential, e.id) && !contains(locked, e.id)) {
        pick = e.id;
        break;
      }
    }
    if (!pick) break;
    step(cur, map, *pick);
  }
  return {cur.graph, map};
}

std::pair<Hypergraph, ContractionMap> minimal_mimicking_expander(const Instance &inst, Rational phi,
                                                                 const EdgeSet &locked, const EngineOptions &options,
                                                                 ExpanderRunStats *stats) {
  ExpanderRunStats local;
  ExpanderRunStats &st = stats ? *stats : local;
  if (!is_connected(inst.graph)) throw Error("expander engine requires a connected hypergraph");
  const std::uint64_t threshold = small_regime_threshold(inst.budget, phi);
  if (inst.graph.num_edges() <= threshold) {
    st.used_small_mode = true;
    return minimal_mimicking_small(inst, locked);
  }
  ExpanderOptions eo;
  eo.guard_n = options.guard_n;
  if (!is_phi_expander(inst.graph, phi, eo).expander) throw Error("expander engine requires a phi-expander");

  EnumerationOptions en;
  en.check_expander = false;
  auto cuts = connected_multiway_cuts(inst, phi, en);
  auto useful = prune_useful(inst, partitions_from_cuts(inst, cuts), phi);
  st.candidate_cuts = cuts.size();
  st.useful_partitions = useful.size();

  Instance cur = inst;
  ContractionMap map = ContractionMap::identity(inst.graph);
  for (EdgeId e : inst.graph.edge_ids()) {
    if (cur.graph.num_edges() <= threshold) {
      st.switched_to_small = true;
      auto [h, rest] = minimal_mimicking_small(cur, locked);
      return {std::move(h), map.then(rest)};
    }
    if (!cur.graph.has_edge(e) || contains(locked, e)) continue;
    const bool essential = std::any_of(useful.begin(), useful.end(), [&](const PartitionCandidates &u) {
      return !u.min_cuts.empty() &&
             std::all_of(u.min_cuts.begin(), u.min_cuts.end(), [&](const EdgeSet &f) { return contains(f, e); });
    });
    if (essential) continue;
    ContractionMap last;
    step(cur, map, e, &last);
    EdgeSet gone = last.dropped_edges;
    gone.push_back(e);
    normalize(gone);
    for (auto &u : useful) {
      std::erase_if(u.min_cuts, [&](const EdgeSet &f) { return !set_intersection(f, gone).empty(); });
    }
  }
  if (cur.graph.num_edges() <= threshold) {
    st.switched_to_small = true;
    auto [h, rest] = minimal_mimicking_small(cur, locked);
    return {std::move(h), map.then(rest)};
  }
  return {cur.graph, map};
}

std::pair<Hypergraph, ContractionMap> glue(const std::vector<PartResult> &parts) {
  VertexSet vertices;
  std::map<EdgeId, VertexSet> edges;
  std::map<EdgeId, int> restricted_count;
  std::set<EdgeId> plain;
  for (const auto &part : parts) {
    if (!set_intersection(vertices, part.sub.host_set).empty()) throw Error("glue parts overlap");
    vertices = set_union(vertices, part.sub.host_set);
    VertexSet anchors;
    std::set<EdgeId> restricted;
    for (const auto &a : part.sub.anchors) {
      anchors.push_back(a.anchor);
      if (!a.terminal_reused) anchors.push_back(a.terminal);
      restricted.insert(part.sub.edge_map.at(a.edge));
    }
    normalize(anchors);
    for (const auto &e : part.sub.instance.graph.edges()) {
      if (restricted.count(e.id)) {
        if (plain.count(e.id)) throw Error("edge " + std::to_string(e.id) + " is both restricted and interior");
        ++restricted_count[e.id];
        edges[e.id] = set_union(edges[e.id], set_difference(e.vertices, anchors));
      } else {
        if (edges.count(e.id)) throw Error("interior edge " + std::to_string(e.id) + " appears in two parts");
        plain.insert(e.id);
        edges[e.id] = e.vertices;
      }
    }
  }
  for (const auto &[id, count] : restricted_count) {
    if (count < 2) throw Error("restricted edge " + std::to_string(id) + " has a single anchored copy");
  }
  std::vector<Edge> list;
  for (auto &[id, vs] : edges) list.push_back({id, vs});
  Hypergraph host(vertices, std::move(list));

  std::vector<EdgeId> order;
  for (const auto &part : parts) {
    for (EdgeId e : part.map.contracted_edges) {
      if (restricted_count.count(e)) throw Error("restricted edge " + std::to_string(e) + " was contracted");
      order.push_back(e);
    }
  }
  auto [result, map] = contract_sequence(host, order);
  for (const auto &part : parts) {
    for (VertexId v : part.sub.host_set) {
      if (map.image(v) != part.map.image(v)) throw Error("glued contraction disagrees with part bookkeeping");
    }
  }
  return {std::move(result), std::move(map)};
}

Rational pass_phi(const Instance &inst, const EngineOptions &options) {
  if (options.phi) return *options.phi;
  return formula_phi(inst.graph.num_vertices(), inst.graph.rank(), inst.budget, options.exponent_m);
}

std::pair<Hypergraph, ContractionMap> mimicking_expander_pass(const Instance &inst, const EngineOptions &options,
                                                              PassStats *stats) {
  const Rational phi = pass_phi(inst, options);
  ExpanderOptions eo;
  eo.guard_n = options.guard_n;
  ExpanderDecomposition dec = expander_decompose(inst.graph, phi, options.cut_budget_factor, eo);

  std::vector<PartResult> parts(dec.parts.size());
  std::vector<char> small(dec.parts.size(), 0);
  parallel_for(
      dec.parts.size(),
      [&](std::size_t j) {
        Subinstance sub = subinstance(inst, dec.parts[j]);
        EdgeSet locked;
        for (const auto &a : sub.anchors) locked.push_back(sub.edge_map.at(a.edge));
        normalize(locked);
        const Hypergraph &hg = sub.instance.graph;
        std::vector<EdgeId> order;
        bool all_small = true;
        for (const auto &component : components(hg)) {
          std::vector<Edge> inside;
          for (const auto &e : hg.edges()) {
            if (contains(component, e.vertices.front())) inside.push_back(e);
          }
          if (inside.empty()) continue;
          Instance piece{Hypergraph(component, std::move(inside)),
                         set_intersection(sub.instance.terminals, component), sub.instance.budget};
          ExpanderRunStats st;
          auto [h, map] = minimal_mimicking_expander(piece, phi, locked, options, &st);
          all_small = all_small && st.used_small_mode;
          order.insert(order.end(), map.contracted_edges.begin(), map.contracted_edges.end());
        }
        auto [result, map] = contract_sequence(hg, order);
        small[j] = all_small;
        parts[j] = PartResult{std::move(sub), std::move(result), std::move(map)};
      },
      options.threads);

  auto [result, map] = glue(parts);
  if (map.vertex_map.size() != inst.graph.num_vertices()) {
    throw Error("glued network does not cover the host vertex set");
  }
  for (EdgeId e : map.contracted_edges) {
    if (contains(dec.cut_edges, e)) throw Error("decomposition cut edge was contracted");
  }
  if (stats) {
    stats->phi = phi;
    stats->parts = dec.parts.size();
    stats->cut_edges = dec.cut_edges.size();
    stats->cut_budget = dec.cut_budget;
    stats->cut_within_budget = dec.within_budget;
    stats->edges_before = inst.graph.num_edges();
    stats->edges_after = result.num_edges();
    stats->contractions = map.contracted_edges.size();
    stats->small_mode_parts = static_cast<std::size_t>(std::count(small.begin(), small.end(), 1));
  }
  return {std::move(result), std::move(map)};
}

SparsifyResult sparsify(const Instance &inst, const EngineOptions &options) {
  inst.validate();
  SparsifyResult out;
  const std::size_t m = inst.graph.num_edges();
  const std::size_t max_passes =
      std::max<std::size_t>(1, m > 1 ? static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(m)))) : 0);
  Instance cur = inst;
  ContractionMap map = ContractionMap::identity(inst.graph);
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    PassStats stats;
    auto [h, pmap] = mimicking_expander_pass(cur, options, &stats);
    out.report.pass_stats.push_back(stats);
    ++out.report.passes;
    const bool idle = pmap.contracted_edges.empty();
    map = map.then(pmap);
    cur = Instance{std::move(h), pmap.image(cur.terminals), cur.budget};
    if (idle) break;
  }
  out.graph = cur.graph;
  out.map = map;
  out.report.contractions = map.contracted_edges;
  out.report.final_size = cur.graph.num_edges();
  return out;
}

}  // namespace hypermim
