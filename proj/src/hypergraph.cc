#include "hypermim/hypergraph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

namespace hypermim {

void normalize(std::vector<std::uint32_t> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<std::uint32_t> &sorted, std::uint32_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool is_subset(const std::vector<std::uint32_t> &a, const std::vector<std::uint32_t> &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Rational parse_rational(const std::string &text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error("cannot parse rational '" + text + "'");
    }
    return value;
  };
  std::string_view sv(text);
  if (auto slash = sv.find('/'); slash != std::string_view::npos) {
    return Rational::make(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
  }
  if (auto dot = sv.find('.'); dot != std::string_view::npos) {
    std::string_view frac = sv.substr(dot + 1);
    if (frac.size() > 12) throw Error("too many decimal digits in '" + text + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t whole = dot == 0 ? 0 : parse_int(sv.substr(0, dot));
    std::int64_t part = frac.empty() ? 0 : parse_int(frac);
    return Rational::make(whole * den + part, den);
  }
  return Rational::make(parse_int(sv), 1);
}

Hypergraph::Hypergraph(VertexSet vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)) {
  normalize(vertices_);
  edges_.reserve(edges.size());
  for (auto &e : edges) {
    normalize(e.vertices);
    for (VertexId v : e.vertices) {
      if (!contains(vertices_, v)) {
        throw Error("edge " + std::to_string(e.id) + " references unknown vertex " + std::to_string(v));
      }
    }
    if (e.vertices.size() >= 2) edges_.push_back(std::move(e));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].id == edges_[i - 1].id) throw Error("duplicate edge id " + std::to_string(edges_[i].id));
  }
}

Hypergraph Hypergraph::from_lists(std::size_t n, const std::vector<std::vector<VertexId>> &edges) {
  VertexSet vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) es.push_back({static_cast<EdgeId>(i), edges[i]});
  return Hypergraph(std::move(vs), std::move(es));
}

std::size_t Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto &e : edges_) r = std::max(r, e.vertices.size());
  return r;
}

std::size_t Hypergraph::total_size() const {
  std::size_t p = 0;
  for (const auto &e : edges_) p += e.vertices.size();
  return p;
}

bool Hypergraph::has_vertex(VertexId v) const { return contains(vertices_, v); }

bool Hypergraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge &a, EdgeId id) { return a.id < id; });
  return it != edges_.end() && it->id == e;
}

const VertexSet &Hypergraph::edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge &a, EdgeId id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) throw Error("unknown edge id " + std::to_string(e));
  return it->vertices;
}

EdgeSet Hypergraph::edge_ids() const {
  EdgeSet ids;
  ids.reserve(edges_.size());
  for (const auto &e : edges_) ids.push_back(e.id);
  return ids;
}

EdgeSet Hypergraph::incident_edges(VertexId v) const {
  EdgeSet ids;
  for (const auto &e : edges_) {
    if (contains(e.vertices, v)) ids.push_back(e.id);
  }
  return ids;
}

VertexId Hypergraph::max_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back(); }

EdgeId Hypergraph::max_edge_id() const { return edges_.empty() ? 0 : edges_.back().id; }

void Instance::validate() const {
  if (!std::is_sorted(terminals.begin(), terminals.end()) ||
      std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end()) {
    throw Error("terminal set must be sorted and duplicate-free");
  }
  for (VertexId t : terminals) {
    if (!graph.has_vertex(t)) throw Error("terminal " + std::to_string(t) + " is not a vertex");
  }
}

bool Instance::is_terminal(VertexId v) const { return contains(terminals, v); }

ContractionMap ContractionMap::identity(const Hypergraph &g) {
  ContractionMap map;
  for (VertexId v : g.vertices()) map.vertex_map.emplace(v, v);
  return map;
}

VertexId ContractionMap::image(VertexId v) const {
  auto it = vertex_map.find(v);
  if (it == vertex_map.end()) throw Error("vertex " + std::to_string(v) + " outside contraction map");
  return it->second;
}

VertexSet ContractionMap::image(const VertexSet &vs) const {
  VertexSet out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(image(v));
  normalize(out);
  return out;
}

ContractionMap ContractionMap::then(const ContractionMap &next) const {
  ContractionMap out;
  for (const auto &[v, w] : vertex_map) out.vertex_map.emplace(v, next.image(w));
  out.contracted_edges = contracted_edges;
  out.contracted_edges.insert(out.contracted_edges.end(), next.contracted_edges.begin(), next.contracted_edges.end());
  out.dropped_edges = dropped_edges;
  out.dropped_edges.insert(out.dropped_edges.end(), next.dropped_edges.begin(), next.dropped_edges.end());
  return out;
}

namespace {

// Contracts e in place of `map`, which tracks originals -> current ids.
Hypergraph contract_step(const Hypergraph &g, EdgeId e, ContractionMap &map) {
  const VertexSet &merged = g.edge(e);
  const VertexId rep = merged.front();
  auto remap = [&](VertexId v) { return contains(merged, v) ? rep : v; };

  VertexSet vertices;
  vertices.reserve(g.num_vertices() - merged.size() + 1);
  for (VertexId v : g.vertices()) {
    if (!contains(merged, v) || v == rep) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto &edge : g.edges()) {
    if (edge.id == e) continue;
    Edge out{edge.id, {}};
    out.vertices.reserve(edge.vertices.size());
    for (VertexId v : edge.vertices) out.vertices.push_back(remap(v));
    normalize(out.vertices);
    if (out.vertices.size() < 2) {
      map.dropped_edges.push_back(edge.id);
      continue;
    }
    edges.push_back(std::move(out));
  }
  for (auto &[orig, cur] : map.vertex_map) cur = remap(cur);
  map.contracted_edges.push_back(e);
  return Hypergraph(std::move(vertices), std::move(edges));
}

}  // namespace

std::pair<Hypergraph, ContractionMap> contract(const Hypergraph &g, EdgeId e) {
  ContractionMap map = ContractionMap::identity(g);
  Hypergraph h = contract_step(g, e, map);
  return {std::move(h), std::move(map)};
}

std::pair<Hypergraph, ContractionMap> contract_sequence(const Hypergraph &g, const std::vector<EdgeId> &order) {
  ContractionMap map = ContractionMap::identity(g);
  Hypergraph h = g;
  for (EdgeId e : order) h = contract_step(h, e, map);
  return {std::move(h), std::move(map)};
}

Instance apply(const Instance &inst, const Hypergraph &result, const ContractionMap &map) {
  Instance out{result, map.image(inst.terminals), inst.budget};
  out.validate();
  return out;
}

std::pair<Instance, ContractionMap> contract(const Instance &inst, EdgeId e) {
  auto [h, map] = contract(inst.graph, e);
  Instance out = apply(inst, h, map);
  return {std::move(out), std::move(map)};
}

EdgeSet boundary(const Hypergraph &g, const VertexSet &x) {
  EdgeSet out;
  for (const auto &e : g.edges()) {
    bool in = false, out_side = false;
    for (VertexId v : e.vertices) (contains(x, v) ? in : out_side) = true;
    if (in && out_side) out.push_back(e.id);
  }
  return out;
}

EdgeSet induced_edges(const Hypergraph &g, const VertexSet &x) {
  EdgeSet out;
  for (const auto &e : g.edges()) {
    if (is_subset(e.vertices, x)) out.push_back(e.id);
  }
  return out;
}

std::vector<VertexSet> components(const Hypergraph &g, const EdgeSet &removed) {
  DenseView view(g);
  DisjointSets ds(view.n());
  for (std::size_t i = 0; i < view.m(); ++i) {
    if (contains(removed, view.edge_ids[i])) continue;
    const auto &vs = view.edge_vertices[i];
    for (std::size_t j = 1; j < vs.size(); ++j) ds.unite(vs[0], vs[j]);
  }
  std::map<int, std::size_t> slot;
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < view.n(); ++i) {
    int root = ds.find(static_cast<int>(i));
    auto [it, fresh] = slot.emplace(root, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(view.vertex_ids[i]);
  }
  return out;
}

bool is_connected(const Hypergraph &g) { return components(g).size() <= 1; }

bool Subinstance::is_anchor_vertex(VertexId v) const {
  for (const auto &a : anchors) {
    if (a.anchor == v || (a.terminal == v && !a.terminal_reused)) return true;
  }
  return false;
}

bool Subinstance::is_restricted_edge(EdgeId restricted) const {
  for (const auto &a : anchors) {
    if (edge_map.at(a.edge) == restricted) return true;
  }
  return false;
}

Subinstance subinstance(const Instance &inst, const VertexSet &x) {
  if (x.empty()) throw Error("subinstance of an empty vertex set");
  for (VertexId v : x) {
    if (!inst.graph.has_vertex(v)) throw Error("subinstance vertex " + std::to_string(v) + " not in graph");
  }
  Subinstance sub;
  sub.host_set = x;
  VertexId fresh = inst.graph.max_vertex_id() + 1;
  VertexSet vertices = x;
  VertexSet terminals = set_intersection(inst.terminals, x);
  std::vector<Edge> edges;
  for (const auto &e : inst.graph.edges()) {
    VertexSet inside = set_intersection(e.vertices, x);
    if (inside.empty()) continue;
    sub.edge_map.emplace(e.id, e.id);
    if (inside.size() == e.vertices.size()) {
      edges.push_back(e);
      continue;
    }
    Anchor anchor;
    anchor.edge = e.id;
    anchor.anchor = fresh++;
    VertexSet inside_terminals = set_intersection(inside, inst.terminals);
    if (!inside_terminals.empty()) {
      anchor.terminal = inside_terminals.front();
      anchor.terminal_reused = true;
    } else {
      anchor.terminal = fresh++;
      vertices.push_back(anchor.terminal);
      terminals.push_back(anchor.terminal);
    }
    vertices.push_back(anchor.anchor);
    terminals.push_back(anchor.anchor);
    inside.push_back(anchor.anchor);
    inside.push_back(anchor.terminal);
    edges.push_back({e.id, std::move(inside)});
    sub.anchors.push_back(anchor);
  }
  normalize(terminals);
  sub.instance.graph = Hypergraph(std::move(vertices), std::move(edges));
  sub.instance.terminals = std::move(terminals);
  sub.instance.budget =
      static_cast<std::uint32_t>(std::min<std::size_t>(inst.budget, sub.instance.terminals.size()));
  return sub;
}

std::size_t terminal_capacity(const Instance &inst, const VertexSet &x) {
  return 2 * boundary(inst.graph, x).size() + set_intersection(inst.terminals, x).size();
}

DegreeOneTransform degree_one_terminal_transform(const Instance &inst) {
  DegreeOneTransform out;
  VertexSet vertices = inst.graph.vertices();
  std::vector<Edge> edges = inst.graph.edges();
  VertexId next_vertex = inst.graph.num_vertices() == 0 ? 0 : inst.graph.max_vertex_id() + 1;
  EdgeId next_edge = inst.graph.num_edges() == 0 ? 0 : inst.graph.max_edge_id() + 1;
  VertexSet terminals;
  for (VertexId t : inst.terminals) {
    VertexSet &mine = out.dummies[t];
    for (std::uint32_t i = 0; i <= inst.budget; ++i) {
      VertexId d = next_vertex++;
      vertices.push_back(d);
      terminals.push_back(d);
      mine.push_back(d);
      edges.push_back({next_edge++, {t, d}});
    }
  }
  out.instance = Instance{Hypergraph(std::move(vertices), std::move(edges)), std::move(terminals), inst.budget};
  return out;
}

DenseView::DenseView(const Hypergraph &g) : vertex_ids(g.vertices()), edge_ids(g.edge_ids()) {
  incident.resize(vertex_ids.size());
  edge_vertices.reserve(edge_ids.size());
  const bool small = vertex_ids.size() <= 64;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    std::vector<int> idx;
    std::uint64_t mask = 0;
    for (VertexId v : g.edges()[i].vertices) {
      int k = vertex_index(v);
      idx.push_back(k);
      incident[k].push_back(static_cast<int>(i));
      if (small) mask |= std::uint64_t{1} << k;
    }
    edge_vertices.push_back(std::move(idx));
    if (small) edge_masks.push_back(mask);
  }
}

int DenseView::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), v);
  return it != vertex_ids.end() && *it == v ? static_cast<int>(it - vertex_ids.begin()) : -1;
}

int DenseView::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edge_ids.begin(), edge_ids.end(), e);
  return it != edge_ids.end() && *it == e ? static_cast<int>(it - edge_ids.begin()) : -1;
}

std::uint64_t DenseView::mask_of(const VertexSet &vs) const {
  if (n() > 64) throw GuardError("bitmask view needs at most 64 vertices");
  std::uint64_t mask = 0;
  for (VertexId v : vs) {
    int k = vertex_index(v);
    if (k < 0) throw Error("vertex " + std::to_string(v) + " not in graph");
    mask |= std::uint64_t{1} << k;
  }
  return mask;
}

VertexSet DenseView::vertices_of(std::uint64_t mask) const {
  VertexSet out;
  for (std::size_t i = 0; i < n(); ++i) {
    if (mask >> i & 1) out.push_back(vertex_ids[i]);
  }
  return out;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  return true;
}

}  // namespace hypermim
