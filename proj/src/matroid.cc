#include "hypermim/matroid.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>

#include "hypermim/flow.h"

namespace hypermim {

std::size_t MatroidOracle::rank() const {
  ElementSet basis;
  for (Element x : universe) {
    ElementSet next = basis;
    next.push_back(x);
    std::sort(next.begin(), next.end());
    if (independent(next)) basis = std::move(next);
  }
  return basis.size();
}

MatroidOracle uniform_oracle(ElementSet universe, std::size_t rank) {
  normalize(universe);
  auto members = std::make_shared<ElementSet>(universe);
  return {std::move(universe), [members, rank](const ElementSet &s) {
            return s.size() <= rank && is_subset(s, *members);
          }};
}

MatroidOracle truncate(MatroidOracle oracle, std::size_t rank) {
  auto inner = oracle.independent;
  return {std::move(oracle.universe), [inner, rank](const ElementSet &s) { return s.size() <= rank && inner(s); }};
}

MatroidOracle direct_sum(std::vector<MatroidOracle> parts) {
  ElementSet universe;
  for (const auto &p : parts) {
    if (!set_intersection(universe, p.universe).empty()) throw Error("direct sum of overlapping universes");
    universe = set_union(universe, p.universe);
  }
  auto shared = std::make_shared<std::vector<MatroidOracle>>(std::move(parts));
  return {std::move(universe), [shared](const ElementSet &s) {
            std::size_t covered = 0;
            for (const auto &p : *shared) {
              ElementSet piece = set_intersection(s, p.universe);
              covered += piece.size();
              if (!p.independent(piece)) return false;
            }
            return covered == s.size();
          }};
}

NodeId SplitDigraph::edge_node(EdgeId e) const {
  auto it = std::lower_bound(edge_ids.begin(), edge_ids.end(), e);
  if (it == edge_ids.end() || *it != e) throw Error("edge " + std::to_string(e) + " not in D^split");
  return static_cast<NodeId>(it - edge_ids.begin());
}

NodeId SplitDigraph::sink_node(EdgeId e) const { return static_cast<NodeId>(edge_node(e) + edge_ids.size()); }

SplitDigraph build_d_split(const Hypergraph &g, const VertexSet &terminals) {
  SplitDigraph sd;
  sd.edge_ids = g.edge_ids();
  const std::size_t m = sd.edge_ids.size();
  sd.digraph = Digraph(2 * m);
  const auto &edges = g.edges();
  for (std::size_t i = 0; i < m; ++i) {
    if (!set_intersection(edges[i].vertices, terminals).empty()) sd.sources.push_back(static_cast<NodeId>(i));
    for (std::size_t j = 0; j < m; ++j) {
      if (set_intersection(edges[i].vertices, edges[j].vertices).empty()) continue;
      if (i != j) sd.digraph.add_arc(static_cast<NodeId>(i), static_cast<NodeId>(j));
      sd.digraph.add_arc(static_cast<NodeId>(i), static_cast<NodeId>(m + j));
    }
  }
  return sd;
}

bool gammoid_independent(const SplitDigraph &sd, const NodeSet &f) {
  const int n = static_cast<int>(sd.digraph.num_nodes);
  for (NodeId x : f) {
    if (static_cast<int>(x) >= n) throw Error("node outside D^split");
  }
  MaxFlow flow(2 * n + 2);
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  for (int x = 0; x < n; ++x) flow.add_arc(2 * x, 2 * x + 1, 1);
  for (NodeId s : sd.sources) flow.add_arc(source, 2 * static_cast<int>(s), 1);
  for (const auto &arc : sd.digraph.arcs) {
    flow.add_arc(2 * static_cast<int>(arc.tail) + 1, 2 * static_cast<int>(arc.head), 1);
  }
  for (NodeId x : f) flow.add_arc(2 * static_cast<int>(x) + 1, sink, 1);
  return flow.run(source, sink) == static_cast<std::int64_t>(f.size());
}

MatroidOracle hyperedge_gammoid(const SplitDigraph &sd) {
  ElementSet universe(sd.digraph.num_nodes);
  for (std::size_t i = 0; i < universe.size(); ++i) universe[i] = static_cast<Element>(i);
  auto shared = std::make_shared<SplitDigraph>(sd);
  return {std::move(universe), [shared](const ElementSet &s) { return gammoid_independent(*shared, s); }};
}

bool extends(const MatroidOracle &oracle, const ElementSet &a, const ElementSet &b) {
  if (!set_intersection(a, b).empty()) return false;
  return oracle.independent(set_union(a, b));
}

std::vector<ElementSet> representative_set_bruteforce(const MatroidOracle &oracle,
                                                      const std::vector<ElementSet> &family, std::size_t b_bound) {
  const std::size_t u = oracle.universe.size();
  if (u > 16) throw GuardError("representative set scan limited to 16 elements");
  std::vector<ElementSet> members;
  for (ElementSet s : family) {
    normalize(s);
    if (std::find(members.begin(), members.end(), s) == members.end()) members.push_back(std::move(s));
  }
  // For every small B extended by the family, which members extend it.
  std::vector<std::vector<char>> witnesses;
  for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > b_bound) continue;
    ElementSet b;
    for (std::size_t i = 0; i < u; ++i) {
      if (mask & (1u << i)) b.push_back(oracle.universe[i]);
    }
    std::vector<char> row(members.size(), 0);
    bool any = false;
    for (std::size_t j = 0; j < members.size(); ++j) {
      row[j] = extends(oracle, members[j], b);
      any = any || row[j];
    }
    if (any) witnesses.push_back(std::move(row));
  }
  std::vector<char> kept(members.size(), 1);
  for (std::size_t j = members.size(); j-- > 0;) {
    kept[j] = 0;
    const bool still = std::all_of(witnesses.begin(), witnesses.end(), [&](const std::vector<char> &row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (kept[i] && row[i]) return true;
      }
      return false;
    });
    if (!still) kept[j] = 1;
  }
  std::vector<ElementSet> out;
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (kept[j]) out.push_back(members[j]);
  }
  return out;
}

namespace {

struct MaskStats {
  std::size_t boundary = 0;
  std::size_t inside = 0;
  std::size_t outside = 0;
  std::size_t terminals = 0;
};

class Scanner {
 public:
  Scanner(const Instance &inst, std::size_t guard_n) : view_(inst.graph) {
    if (view_.n() > guard_n || view_.n() > 30) {
      throw GuardError("exhaustive scan over " + std::to_string(view_.n()) + " vertices exceeds the guard");
    }
    terminal_mask_ = view_.mask_of(inst.terminals);
    k_ = inst.terminals.size();
  }

  std::uint64_t limit() const { return std::uint64_t{1} << view_.n(); }
  std::uint64_t full() const { return limit() - 1; }
  std::size_t k() const { return k_; }
  const DenseView &view() const { return view_; }

  MaskStats stats(std::uint64_t mask) const {
    MaskStats s;
    for (std::uint64_t em : view_.edge_masks) {
      const std::uint64_t in = em & mask;
      if (in == em) {
        ++s.inside;
      } else if (in == 0) {
        ++s.outside;
      } else {
        ++s.boundary;
      }
    }
    s.terminals = static_cast<std::size_t>(std::popcount(mask & terminal_mask_));
    return s;
  }

 private:
  DenseView view_;
  std::uint64_t terminal_mask_ = 0;
  std::size_t k_ = 0;
};

bool exceeds_power(std::size_t value, std::size_t base, double alpha) {
  if (value == 0) return false;
  if (base == 0) return true;
  if (base == 1) return value > 1;
  return std::log(static_cast<long double>(value)) >
         static_cast<long double>(alpha) * std::log(static_cast<long double>(base));
}

bool breaks_unbreakable(const MaskStats &s, std::size_t k, std::uint32_t c, std::size_t d) {
  return s.terminals <= k - s.terminals && s.boundary <= c && s.terminals > d;
}

bool breaks_dense(const MaskStats &s, std::uint32_t c, double alpha) {
  if (s.inside == 0 || s.inside > s.outside || s.boundary > c) return false;
  return exceeds_power(s.inside, 2 * s.boundary + s.terminals, alpha);
}

}  // namespace

ScanResult is_unbreakable(const Instance &inst, std::size_t d, std::size_t guard_n) {
  Scanner scan(inst, guard_n);
  for (std::uint64_t mask = 0; mask < scan.limit(); ++mask) {
    if (breaks_unbreakable(scan.stats(mask), scan.k(), inst.budget, d)) {
      return {false, scan.view().vertices_of(mask)};
    }
  }
  return {};
}

ScanResult is_dense(const Instance &inst, double alpha, std::size_t guard_n) {
  Scanner scan(inst, guard_n);
  for (std::uint64_t mask = 0; mask < scan.limit(); ++mask) {
    const MaskStats s = scan.stats(mask);
    if (!breaks_dense(s, inst.budget, alpha)) continue;
    const std::uint64_t side = s.terminals > scan.k() - s.terminals ? scan.full() & ~mask : mask;
    return {false, scan.view().vertices_of(side)};
  }
  return {};
}

std::vector<DensityRecord> density_profile(const Instance &inst, std::size_t d, double alpha, std::size_t guard_n) {
  Scanner scan(inst, guard_n);
  std::vector<DensityRecord> out;
  for (std::uint64_t mask = 0; mask < scan.limit(); ++mask) {
    const MaskStats s = scan.stats(mask);
    if (s.boundary > inst.budget) continue;
    DensityRecord r;
    r.x = scan.view().vertices_of(mask);
    r.cap = 2 * s.boundary + s.terminals;
    r.inside = s.inside;
    r.boundary = s.boundary;
    r.breaks_unbreakable = breaks_unbreakable(s, scan.k(), inst.budget, d);
    r.breaks_dense = breaks_dense(s, inst.budget, alpha);
    out.push_back(std::move(r));
  }
  return out;
}

UnbreakableDecomposition unbreakable_decompose(const Instance &inst, std::size_t guard_n) {
  inst.validate();
  const std::size_t d = 5 * static_cast<std::size_t>(inst.budget);
  std::vector<VertexSet> done;
  std::vector<VertexSet> work{inst.graph.vertices()};
  while (!work.empty()) {
    VertexSet part = std::move(work.back());
    work.pop_back();
    Subinstance sub = subinstance(inst, part);
    ScanResult check = is_unbreakable(sub.instance, d, guard_n);
    if (check.holds) {
      done.push_back(std::move(part));
      continue;
    }
    VertexSet in = set_intersection(part, *check.witness);
    VertexSet out = set_difference(part, *check.witness);
    if (in.empty() || out.empty()) throw Error("unbreakable witness does not split its part");
    work.push_back(std::move(in));
    work.push_back(std::move(out));
  }
  std::sort(done.begin(), done.end());
  UnbreakableDecomposition dec;
  for (const auto &part : done) {
    dec.parts.push_back(subinstance(inst, part));
    dec.terminal_sum += dec.parts.back().instance.terminals.size();
  }
  dec.terminal_sum_ok = dec.terminal_sum <= 5 * inst.terminals.size();
  return dec;
}

ProofConstants proof_constants(std::size_t r, std::uint32_t c, std::size_t d) {
  if (c == 0) throw Error("constants need c >= 1");
  ProofConstants k;
  const double l5c = std::log2(5.0 * c);
  k.i0 = 30 * r;
  k.alpha = 35.0 * static_cast<double>(r + 2) * l5c;
  k.log2_beta = (k.alpha - 1.0) * l5c;
  k.log2_kappa = (k.alpha - static_cast<double>(k.i0) - 2.0) * std::log2(static_cast<double>(d) / 2.0);
  return k;
}

double log2_essential_cap(std::size_t k, std::size_t d, double alpha) {
  return std::log2(static_cast<double>(k)) + (alpha - 1.0) * std::log2(static_cast<double>(d));
}

}  // namespace hypermim
