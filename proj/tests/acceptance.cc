// Property checks at desk scale, one PASS/FAIL line per criterion.
// All comparisons are exact integer or set comparisons unless stated.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypermim/cut_enumeration.h"
#include "hypermim/cut_oracle.h"
#include "hypermim/engine.h"
#include "hypermim/important_cuts.h"
#include "hypermim/matroid.h"
#include "testing_util.h"

namespace {

using namespace hypermim;

constexpr int kSoundnessInstances = 500;
constexpr int kContractingInstances = 300;
constexpr std::size_t kPhenomenonMaxN = 6;
constexpr int kCoreExpanders = 300;
constexpr int kCompletenessExpanders = 200;
constexpr int kImportantTrials = 300;
constexpr int kUsefulExpanders = 300;
constexpr int kMinimalExpanders = 300;
constexpr int kMinimalSmall = 300;
constexpr int kGammoidTrials = 600;
constexpr int kPredicateTrials = 600;
constexpr int kDecomposeTrials = 200;
constexpr int kCorpusSize = 40;
// Slack on the log2 comparison against the essential-edge cap.
constexpr double kLogSlack = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Failure {
  std::string what;
};

void require(bool ok, const std::string &what) {
  if (!ok) throw Failure{what};
}

std::string describe(const Instance &inst) {
  std::ostringstream out;
  out << "n=" << inst.graph.num_vertices() << " m=" << inst.graph.num_edges() << " T={";
  for (std::size_t i = 0; i < inst.terminals.size(); ++i) out << (i ? "," : "") << inst.terminals[i] + 1;
  out << "} c=" << inst.budget << " edges:";
  for (const auto &e : inst.graph.edges()) {
    out << " {";
    for (std::size_t i = 0; i < e.vertices.size(); ++i) out << (i ? "," : "") << e.vertices[i] + 1;
    out << "}";
  }
  return out.str();
}

std::string phi_text(Rational phi) { return std::to_string(phi.num) + "/" + std::to_string(phi.den); }

// Seeded stream of instances that certify as phi-expanders.
struct ExpanderStream {
  std::mt19937_64 rng;
  std::uint64_t seed_base;
  std::uint64_t next = 0;
  std::size_t n_hi, m_hi, r_hi, k_hi;
  std::uint32_t c_hi;

  std::pair<Instance, Rational> draw() {
    while (true) {
      auto s = hmtest::random_shape(rng, 3, n_hi, m_hi, r_hi, k_hi, c_hi);
      Instance inst = hmtest::random_instance(seed_base + next++, s.n, s.m, s.r, s.k, s.c);
      if (auto phi = hmtest::certified_phi(inst.graph)) return {std::move(inst), *phi};
    }
  }
};

Outcome soundness() {
  std::mt19937_64 rng(1001);
  const Rational cycle[] = {Rational::make(1, 1), Rational::make(1, 2)};
  for (int i = 0; i < kSoundnessInstances; ++i) {
    auto s = hmtest::random_shape(rng, 2, 10, 14, 4, 5, 2);
    Instance inst = hmtest::random_instance(100000 + i, s.n, s.m, s.r, s.k, s.c);
    EngineOptions opt;
    if (i % 3 != 2) opt.phi = cycle[i % 3];
    SparsifyResult out = sparsify(inst, opt);
    require(hmtest::naive_mimicking(inst, out.graph, out.map), "reference rejects output on " + describe(inst));
    require(is_mimicking(inst, out.graph, out.map), "is_mimicking rejects output on " + describe(inst));
  }
  return {true, std::to_string(kSoundnessInstances) + " instances, phi cycling 1, 1/2, formula"};
}

Outcome contracting() {
  std::mt19937_64 rng(1002);
  std::size_t edges = 0, essential = 0;
  for (int i = 0; i < kContractingInstances; ++i) {
    auto s = hmtest::random_shape(rng, 2, 8, 11, 4, 4, 2);
    Instance inst = hmtest::random_instance(200000 + i, s.n, s.m, s.r, s.k, s.c);
    for (EdgeId e : inst.graph.edge_ids()) {
      auto [h, map] = contract(inst.graph, e);
      const bool mimics = is_mimicking(inst, h, map);
      const bool ess = is_essential(inst, e);
      require(mimics == !ess, "edge " + std::to_string(e + 1) + " on " + describe(inst));
      require(hmtest::naive_mimicking(inst, h, map) == mimics, "reference mimicking differs on " + describe(inst));
      require(hmtest::naive_essential(inst, e) == ess, "reference essentiality differs on " + describe(inst));
      ++edges;
      essential += ess ? 1 : 0;
    }
  }
  return {true, std::to_string(edges) + " edges on " + std::to_string(kContractingInstances) + " instances, " +
                    std::to_string(essential) + " essential"};
}

Outcome phenomenon() {
  // Simple graphs in increasing n, then edge mask, terminal mask and budget.
  for (std::size_t n = 3; n <= kPhenomenonMaxN; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint32_t emask = 1; emask < (1u << pairs.size()); ++emask) {
      std::vector<std::vector<VertexId>> lists;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (emask >> i & 1) lists.push_back({pairs[i].first, pairs[i].second});
      }
      Hypergraph g = Hypergraph::from_lists(n, lists);
      if (!is_connected(g)) continue;
      for (std::uint32_t tmask = 1; tmask < (1u << n); ++tmask) {
        if (std::popcount(tmask) < 2) continue;
        VertexSet t;
        for (VertexId v = 0; v < n; ++v) {
          if (tmask >> v & 1) t.push_back(v);
        }
        for (std::uint32_t c = 1; c <= 2; ++c) {
          Instance inst{g, t, c};
          EdgeSet free;
          for (EdgeId e : g.edge_ids()) {
            if (!hmtest::naive_essential(inst, e)) free.push_back(e);
          }
          for (std::size_t a = 0; a < free.size(); ++a) {
            for (std::size_t b = a + 1; b < free.size(); ++b) {
              auto [h1, m1] = contract(g, free[a]);
              if (!h1.has_edge(free[b])) continue;
              auto [h, map] = contract_sequence(g, {free[a], free[b]});
              if (hmtest::naive_mimicking(inst, h, map)) continue;
              require(!is_mimicking(inst, h, map), "library accepts the joint contraction");
              return {true, "edges " + std::to_string(free[a] + 1) + " and " + std::to_string(free[b] + 1) +
                                " are each non-essential, jointly not mimicking, on " + describe(inst)};
            }
          }
        }
      }
    }
  }
  return {false, "no instance found with n <= " + std::to_string(kPhenomenonMaxN)};
}

Outcome core_bound() {
  ExpanderStream stream{std::mt19937_64(1004), 400000, 0, 10, 14, 3, 5, 3};
  std::size_t cuts_checked = 0;
  for (int i = 0; i < kCoreExpanders; ++i) {
    auto [inst, phi] = stream.draw();
    hmtest::NaiveCuts ref(inst.graph, inst.terminals, static_cast<int>(inst.budget));
    for (const auto &cand : connected_multiway_cuts(inst, phi)) {
      if (!hmtest::naive_is_connected_multiway_cut(inst, ref, cand.edges, phi)) continue;
      auto core = hmtest::naive_core(inst, cand.edges, phi);
      if (core.empty()) continue;
      Subinstance sub = subinstance(inst, VertexSet(core.begin(), core.end()));
      const auto &hg = sub.instance.graph;
      require(is_connected(hg), "restricted core disconnected on " + describe(inst));
      const __int128 lhs = static_cast<__int128>(hg.num_edges()) * phi.num;
      const __int128 rhs = static_cast<__int128>(3 * phi.den + phi.num) * cand.edges.size();
      require(lhs <= rhs, "core has " + std::to_string(hg.num_edges()) + " edges on " + describe(inst) +
                              " phi=" + phi_text(phi));
      ++cuts_checked;
    }
  }
  require(cuts_checked > 0, "no connected multiway cut with a nonempty core");
  return {true, std::to_string(cuts_checked) + " cores on " + std::to_string(kCoreExpanders) + " expanders"};
}

Outcome completeness() {
  ExpanderStream stream{std::mt19937_64(1005), 500000, 0, 12, 15, 3, 6, 3};
  std::size_t reference = 0;
  for (int i = 0; i < kCompletenessExpanders; ++i) {
    auto [inst, phi] = stream.draw();
    std::set<EdgeSet> got;
    for (const auto &cand : connected_multiway_cuts(inst, phi)) got.insert(cand.edges);
    for (const auto &f : hmtest::naive_connected_multiway_cuts(inst, phi)) {
      require(got.count(f) > 0, "missing cut of size " + std::to_string(f.size()) + " on " + describe(inst));
      ++reference;
    }
  }
  return {true, std::to_string(reference) + " reference cuts on " + std::to_string(kCompletenessExpanders) +
                    " expanders (n <= 12, c <= 3)"};
}

Outcome important() {
  std::mt19937_64 rng(1006);
  std::int64_t worst_directed = 0, worst_hyper = 0;
  for (int trial = 0; trial < kImportantTrials; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    Digraph d(n);
    const std::size_t arcs = rng() % (3 * n);
    for (std::size_t i = 0; i < arcs; ++i) {
      NodeId u = rng() % n, v = rng() % n;
      if (u != v) d.add_arc(u, v, 1 + static_cast<std::int64_t>(rng() % 2));
    }
    const NodeSet a{0};
    const NodeSet b{static_cast<NodeId>(n - 1)};
    const std::int64_t k = rng() % 4;
    auto got = enumerate_important_cuts(d, a, b, k);
    std::set<NodeSet> sides;
    for (const auto &c : got) sides.insert(c.source_side);
    require(sides == hmtest::naive_important_directed(d, a, b, k), "directed enumeration differs");
    require(static_cast<std::int64_t>(got.size()) <= (std::int64_t{1} << (2 * k)), "directed count above 4^k");
    worst_directed = std::max<std::int64_t>(worst_directed, static_cast<std::int64_t>(got.size()));
  }
  for (int trial = 0; trial < kImportantTrials; ++trial) {
    auto s = hmtest::random_shape(rng, 3, 10, 12, 4, 10, 3);
    Instance inst = hmtest::random_instance(600000 + trial, s.n, s.m, s.r, std::max<std::size_t>(s.k, 2), s.c);
    VertexSet a, b;
    for (std::size_t i = 0; i < inst.terminals.size(); ++i) (i % 2 ? b : a).push_back(inst.terminals[i]);
    const auto expected = hmtest::naive_important_hypergraph(inst.graph, a, b, static_cast<int>(inst.budget));

    std::set<VertexSet> lib;
    for (const auto &c : important_cuts_hypergraph(inst.graph, a, b, inst.budget)) lib.insert(c.source_side);
    require(lib == expected, "hypergraph important cuts differ on " + describe(inst));

    // The same cuts read directly off the D^inc enumeration.
    IncidenceDigraph dinc = build_d_inc(inst.graph, inst.budget);
    NodeSet da, db;
    for (VertexId v : a) da.push_back(dinc.vertex_node(v));
    for (VertexId v : b) db.push_back(dinc.vertex_node(v));
    std::set<VertexSet> direct;
    for (const auto &c : enumerate_important_cuts(dinc.digraph, da, db, inst.budget)) {
      VertexSet side;
      for (NodeId x : c.source_side) {
        if (x < dinc.vertex_ids.size()) side.push_back(dinc.vertex_ids[x]);
      }
      direct.insert(side);
    }
    require(direct == expected, "D^inc cuts do not map onto hypergraph cuts on " + describe(inst));
    require(static_cast<std::int64_t>(expected.size()) <= (std::int64_t{1} << (2 * inst.budget)),
            "hypergraph count above 4^c on " + describe(inst));
    worst_hyper = std::max<std::int64_t>(worst_hyper, static_cast<std::int64_t>(expected.size()));
  }
  return {true, std::to_string(kImportantTrials) + " digraphs and " + std::to_string(kImportantTrials) +
                    " hypergraphs; largest families " + std::to_string(worst_directed) + " and " +
                    std::to_string(worst_hyper)};
}

Outcome useful() {
  ExpanderStream stream{std::mt19937_64(1007), 700000, 0, 9, 13, 3, 5, 2};
  std::size_t edges = 0, essential = 0, partitions = 0;
  for (int i = 0; i < kUsefulExpanders; ++i) {
    auto [inst, phi] = stream.draw();
    auto kept = prune_useful(inst, partitions_from_cuts(inst, connected_multiway_cuts(inst, phi)), phi);
    partitions += kept.size();
    for (EdgeId e : inst.graph.edge_ids()) {
      const bool certified = std::any_of(kept.begin(), kept.end(), [&](const PartitionCandidates &pc) {
        return !pc.min_cuts.empty() &&
               std::all_of(pc.min_cuts.begin(), pc.min_cuts.end(), [&](const EdgeSet &f) { return contains(f, e); });
      });
      require(certified == hmtest::naive_essential(inst, e),
              "edge " + std::to_string(e + 1) + " on " + describe(inst) + " phi=" + phi_text(phi));
      ++edges;
      essential += certified ? 1 : 0;
    }
  }
  return {true, std::to_string(edges) + " edges, " + std::to_string(essential) + " essential, " +
                    std::to_string(partitions) + " useful partitions"};
}

bool output_essential(const Instance &inst, const Hypergraph &h, const ContractionMap &map) {
  Instance out = apply(inst, h, map);
  for (EdgeId e : h.edge_ids()) {
    if (!hmtest::naive_essential(out, e)) return false;
  }
  return true;
}

Outcome minimality() {
  ExpanderStream stream{std::mt19937_64(1008), 800000, 0, 9, 14, 3, 5, 2};
  int enumerated = 0;
  for (int i = 0; i < kMinimalExpanders; ++i) {
    auto [inst, phi] = stream.draw();
    ExpanderRunStats st;
    auto [h, map] = minimal_mimicking_expander(inst, phi, {}, {}, &st);
    enumerated += st.used_small_mode ? 0 : 1;
    require(output_essential(inst, h, map), "expander output not minimal on " + describe(inst));
    require(hmtest::naive_mimicking(inst, h, map), "expander output not mimicking on " + describe(inst));
  }
  std::mt19937_64 rng(1009);
  for (int i = 0; i < kMinimalSmall; ++i) {
    auto s = hmtest::random_shape(rng, 2, 9, 12, 4, 4, 2);
    Instance inst = hmtest::random_instance(810000 + i, s.n, s.m, s.r, s.k, s.c);
    auto [h, map] = minimal_mimicking_small(inst);
    require(output_essential(inst, h, map), "small output not minimal on " + describe(inst));
  }
  require(enumerated > 0, "no expander run reached the enumeration route");
  return {true, std::to_string(kMinimalExpanders) + " expander runs (" + std::to_string(enumerated) +
                    " through enumeration), " + std::to_string(kMinimalSmall) + " small-mode runs"};
}

Outcome gammoid() {
  std::mt19937_64 rng(1010);
  auto targets = [](const SplitDigraph &sd, const NodeSet &f) {
    std::vector<hmtest::GammoidTarget> out;
    const std::size_t m = sd.edge_ids.size();
    for (NodeId x : f) out.push_back({sd.edge_ids[x % m], x >= m});
    return out;
  };
  std::size_t both = 0, sink_only = 0;
  for (int trial = 0; trial < kGammoidTrials; ++trial) {
    auto s = hmtest::random_shape(rng, 2, 8, 8, 3, 3, 1);
    Instance inst = hmtest::random_instance(900000 + trial, s.n, std::min<std::size_t>(s.m, 8), s.r, s.k, s.c);
    SplitDigraph sd = build_d_split(inst.graph, inst.terminals);
    const std::size_t m = sd.edge_ids.size();
    NodeSet f;
    const std::size_t want = 1 + rng() % 4;
    for (std::size_t i = 0; i < want; ++i) f.push_back(static_cast<NodeId>(rng() % (2 * m)));
    // Every third trial pins an edge together with its sink copy.
    if (trial % 3 == 0) {
      const NodeId e = static_cast<NodeId>(rng() % m);
      f.push_back(e);
      f.push_back(static_cast<NodeId>(e + m));
    }
    normalize(f);
    for (NodeId x : f) {
      if (x < m) continue;
      if (contains(f, static_cast<NodeId>(x - m))) {
        ++both;
      } else {
        ++sink_only;
      }
    }
    require(gammoid_independent(sd, f) == hmtest::naive_gammoid(inst.graph, inst.terminals, targets(sd, f)),
            "gammoid differs on " + describe(inst));
  }
  // Two paths end at e; a path through b while another ends at sink(b).
  Hypergraph path = Hypergraph::from_lists(3, {{0, 1}, {1, 2}});
  SplitDigraph sd1 = build_d_split(path, {0, 2});
  require(gammoid_independent(sd1, {sd1.edge_node(1), sd1.sink_node(1)}), "edge with its sink copy");
  Hypergraph g = Hypergraph::from_lists(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  SplitDigraph sd2 = build_d_split(g, {0, 4});
  require(gammoid_independent(sd2, {sd2.edge_node(2), sd2.sink_node(1)}), "path through an edge and its sink copy");
  require(both > 0 && sink_only > 0, "random sets missed an exception shape");
  return {true, std::to_string(kGammoidTrials) + " random sets (" + std::to_string(both) + " edge+sink pairs, " +
                    std::to_string(sink_only) + " lone sink copies) plus both constructed exceptions"};
}

Instance two_stars(VertexId leaves, std::uint32_t c) {
  std::vector<std::vector<VertexId>> edges;
  VertexSet t;
  const VertexId second = leaves + 1;
  for (VertexId i = 1; i <= leaves; ++i) {
    edges.push_back({0, i});
    edges.push_back({second, second + i});
    t.push_back(i);
    t.push_back(second + i);
  }
  edges.push_back({0, second});
  normalize(t);
  return Instance{Hypergraph::from_lists(2 * (leaves + 1), edges), t, c};
}

// Random connected clusters chained by single edges, terminals spread at random.
Instance clustered(std::uint64_t seed, std::size_t clusters, std::size_t size, std::size_t extra, std::size_t k,
                   std::uint32_t c) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < clusters; ++i) {
    Instance part = generate_random(seed * 31 + i, size, size - 1 + extra, 3, 1, 0);
    const VertexId base = static_cast<VertexId>(i * size);
    for (const auto &e : part.graph.edges()) {
      std::vector<VertexId> shifted;
      for (VertexId v : e.vertices) shifted.push_back(base + v);
      edges.push_back(shifted);
    }
    if (i > 0) {
      edges.push_back({static_cast<VertexId>(base - size + rng() % size), static_cast<VertexId>(base + rng() % size)});
    }
  }
  const std::size_t n = clusters * size;
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  VertexSet t(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(k, n)));
  normalize(t);
  return Instance{Hypergraph::from_lists(n, edges), t, c};
}

Outcome predicates() {
  std::mt19937_64 rng(1011);
  std::size_t witnesses = 0, splits = 0;
  for (int trial = 0; trial < kPredicateTrials; ++trial) {
    Instance inst;
    if (trial % 2) {
      auto s = hmtest::random_shape(rng, 2, 12, 16, 3, 8, 2);
      inst = hmtest::random_instance(1000000 + trial, s.n, s.m, s.r, s.k, s.c);
    } else {
      inst = clustered(1000000 + trial, 2, 4 + rng() % 3, 2 + rng() % 5, 1 + rng() % 6,
                       1 + static_cast<std::uint32_t>(rng() % 2));
    }
    const std::size_t d = rng() % 4;
    require(is_unbreakable(inst, d).holds == hmtest::naive_unbreakable(inst, static_cast<int>(d)),
            "is_unbreakable differs on " + describe(inst));
    const double alpha = 1.0 + 0.25 * static_cast<double>(rng() % 5);
    ScanResult dense = is_dense(inst, alpha);
    require(dense.holds == hmtest::naive_dense(inst, alpha), "is_dense differs on " + describe(inst));

    // Postconditions of a flipped dense witness on a d-unbreakable instance.
    if (dense.holds || inst.budget == 0) continue;
    const int k = static_cast<int>(inst.terminals.size());
    const int dd = std::min(5 * static_cast<int>(inst.budget), k);
    if (!hmtest::naive_unbreakable(inst, dd)) continue;
    const VertexSet &x = *dense.witness;
    auto sc = hmtest::scan_counts(inst, std::set<VertexId>(x.begin(), x.end()));
    require(sc.sides.boundary <= static_cast<int>(inst.budget), "witness boundary above c");
    require(hmtest::power_exceeded(sc.sides.inside, 2 * sc.sides.boundary + sc.terminals, alpha),
            "witness not dense-violating");
    require(sc.sides.outside > 0, "witness leaves no outside edge");
    require(sc.terminals <= dd, "witness holds more than d terminals");
    Subinstance sub = subinstance(inst, x);
    const int tx = static_cast<int>(sub.instance.terminals.size());
    const int cx = static_cast<int>(sub.instance.budget);
    require(cx == std::min(static_cast<int>(inst.budget), tx), "c_X differs from min(c, |T_X|)");
    const int dx = std::min(5 * cx, tx);
    require(hmtest::naive_unbreakable(sub.instance, dx), "subinstance not d_X-unbreakable on " + describe(inst));
    const double me = static_cast<double>(sub.instance.graph.num_edges());
    require(std::log(me) > std::log(static_cast<double>(tx)) + (alpha - 1.0) * std::log(static_cast<double>(dx)),
            "subinstance not above |T_X| d_X^(alpha-1)");
    require(sub.instance.graph.num_edges() < inst.graph.num_edges(), "subinstance not smaller");
    ++witnesses;
  }
  std::vector<Instance> decomp{two_stars(6, 1), two_stars(5, 1)};
  for (int trial = 0; trial < kDecomposeTrials; ++trial) {
    if (trial % 2) {
      auto s = hmtest::random_shape(rng, 6, 12, 14, 3, 12, 1);
      decomp.push_back(hmtest::random_instance(1100000 + trial, s.n, s.m, s.r, s.k, s.c));
    } else {
      const std::size_t clusters = 2 + rng() % 2;
      decomp.push_back(clustered(1100000 + trial, clusters, 6, rng() % 3, 10 + rng() % (6 * clusters - 9), 1));
    }
  }
  for (const auto &inst : decomp) {
    auto dec = unbreakable_decompose(inst);
    require(dec.terminal_sum <= 5 * inst.terminals.size() && dec.terminal_sum_ok,
            "terminal sum above 5|T| on " + describe(inst));
    for (const auto &part : dec.parts) {
      require(hmtest::naive_unbreakable(part.instance, 5 * static_cast<int>(inst.budget)),
              "part not 5c-unbreakable on " + describe(inst));
    }
    splits += dec.parts.size() > 1 ? 1 : 0;
  }
  require(witnesses > 0, "no dense witness reached the postcondition check");
  require(splits > 0, "no decomposition split");
  return {true, std::to_string(kPredicateTrials) + " predicate scans, " + std::to_string(witnesses) +
                    " dense witnesses checked, " + std::to_string(decomp.size()) + " decompositions (" +
                    std::to_string(splits) + " split)"};
}

struct CorpusEntry {
  std::string name;
  Instance inst;
  EngineOptions options;
};

std::vector<CorpusEntry> corpus() {
  std::mt19937_64 rng(1012);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < kCorpusSize; ++i) {
    const std::size_t n = 6 + rng() % 9;
    const std::size_t r = 2 + rng() % 3;
    const std::size_t m = std::max<std::size_t>(n + rng() % 9, (n - 1 + r - 2) / (r - 1));
    const std::size_t k = 2 + rng() % 5;
    const std::uint32_t c = 1 + static_cast<std::uint32_t>(rng() % 2);
    CorpusEntry e{"seed-" + std::to_string(1200000 + i), hmtest::random_instance(1200000 + i, n, m, r, k, c), {}};
    if (i % 2 == 0) e.options.phi = Rational::make(1, 1);
    out.push_back(std::move(e));
  }
  return out;
}

nlohmann::json corpus_sizes() {
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto &e : corpus()) sizes[e.name] = sparsify(e.inst, e.options).graph.num_edges();
  return sizes;
}

Outcome size_regression() {
  std::ifstream file(HM_SIZE_BASELINE);
  require(static_cast<bool>(file), std::string("baseline missing: ") + HM_SIZE_BASELINE);
  const nlohmann::json baseline = nlohmann::json::parse(file);
  std::size_t total = 0, base_total = 0, gated = 0;
  for (const auto &e : corpus()) {
    require(baseline.contains(e.name), "baseline has no entry " + e.name);
    SparsifyResult out = sparsify(e.inst, e.options);
    const std::size_t now = out.graph.num_edges();
    const std::size_t before = baseline.at(e.name).get<std::size_t>();
    require(now <= before, e.name + " grew from " + std::to_string(before) + " to " + std::to_string(now));
    total += now;
    base_total += before;

    const std::size_t k = e.inst.terminals.size();
    const std::size_t d = std::min<std::size_t>(5 * e.inst.budget, k);
    if (d < e.inst.budget) continue;
    const double alpha = proof_constants(e.inst.graph.rank(), e.inst.budget, d).alpha;
    if (!is_unbreakable(e.inst, d).holds || !is_dense(e.inst, alpha).holds) continue;
    std::size_t essential = 0;
    for (EdgeId id : e.inst.graph.edge_ids()) essential += hmtest::naive_essential(e.inst, id) ? 1 : 0;
    if (essential > 0) {
      require(std::log2(static_cast<double>(essential)) <= log2_essential_cap(k, d, alpha) + kLogSlack,
              e.name + " has " + std::to_string(essential) + " essential edges above the cap");
    }
    ++gated;
  }
  return {true, std::to_string(kCorpusSize) + " corpus instances, " + std::to_string(total) + " edges (baseline " +
                    std::to_string(base_total) + "); cap checked on " + std::to_string(gated) + " gated instances"};
}

}  // namespace

int main(int argc, char **argv) {
  if (argc > 1 && std::strcmp(argv[1], "--write-baseline") == 0) {
    std::ofstream out(HM_SIZE_BASELINE);
    out << corpus_sizes().dump(2) << '\n';
    std::cout << "wrote " << HM_SIZE_BASELINE << '\n';
    return out ? 0 : 1;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"mimicking soundness of sparsify", soundness},
      {"contraction equivalence per edge", contracting},
      {"pair of non-essential edges with a failing joint contraction", phenomenon},
      {"core size and connectivity on expanders", core_bound},
      {"completeness of connected multiway cut enumeration", completeness},
      {"important cuts against exhaustive enumeration", important},
      {"useful partitions certify essentiality", useful},
      {"minimality of engine outputs", minimality},
      {"gammoid oracle against path systems", gammoid},
      {"unbreakable and dense predicates and recursion", predicates},
      {"size regression and essential-edge cap", size_regression},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Failure &f) {
      o = {false, f.what};
    } catch (const std::exception &ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2zu %s: %s; %s (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
