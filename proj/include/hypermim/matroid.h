#ifndef HYPERMIM_MATROID_H_
#define HYPERMIM_MATROID_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hypermim/hypergraph.h"
#include "hypermim/important_cuts.h"

namespace hypermim {

using Element = std::uint32_t;
using ElementSet = std::vector<Element>;  // sorted

struct MatroidOracle {
  ElementSet universe;
  std::function<bool(const ElementSet &)> independent;

  // Size of a greedy basis.
  std::size_t rank() const;
};

MatroidOracle uniform_oracle(ElementSet universe, std::size_t rank);
MatroidOracle truncate(MatroidOracle oracle, std::size_t rank);
// Universes must be pairwise disjoint.
MatroidOracle direct_sum(std::vector<MatroidOracle> parts);

// Nodes 0..m-1 are the edges in ascending id, m..2m-1 their sink-only copies.
struct SplitDigraph {
  Digraph digraph;
  EdgeSet edge_ids;
  NodeSet sources;  // edges meeting a terminal

  NodeId edge_node(EdgeId e) const;
  NodeId sink_node(EdgeId e) const;
};

SplitDigraph build_d_split(const Hypergraph &g, const VertexSet &terminals);

// |F| vertex-disjoint source-to-F paths exist in D^split.
bool gammoid_independent(const SplitDigraph &sd, const NodeSet &f);
MatroidOracle hyperedge_gammoid(const SplitDigraph &sd);

// Minimal subfamily that still extends every B with |B| <= b_bound that the
// whole family extends. Universe limited to 16 elements.
std::vector<ElementSet> representative_set_bruteforce(const MatroidOracle &oracle,
                                                      const std::vector<ElementSet> &family, std::size_t b_bound);

// True when A and B are disjoint and A u B is independent.
bool extends(const MatroidOracle &oracle, const ElementSet &a, const ElementSet &b);

struct ScanResult {
  bool holds = true;
  std::optional<VertexSet> witness;
};

// Violated by X with |T n X| <= |T - X|, |boundary(X)| <= c and |T n X| > d.
ScanResult is_unbreakable(const Instance &inst, std::size_t d, std::size_t guard_n = 20);
// Violated by X with 0 < |E(X)| <= |E(V - X)|, |boundary(X)| <= c and
// |E(X)| > cap_T(X)^alpha. The witness is flipped to the side holding fewer terminals.
ScanResult is_dense(const Instance &inst, double alpha, std::size_t guard_n = 20);

struct DensityRecord {
  VertexSet x;
  std::size_t cap = 0;
  std::size_t inside = 0;
  std::size_t boundary = 0;
  bool breaks_unbreakable = false;
  bool breaks_dense = false;
};

// One record per X with |boundary(X)| <= c.
std::vector<DensityRecord> density_profile(const Instance &inst, std::size_t d, double alpha,
                                           std::size_t guard_n = 20);

struct UnbreakableDecomposition {
  std::vector<Subinstance> parts;
  std::size_t terminal_sum = 0;
  bool terminal_sum_ok = true;  // terminal_sum <= 5|T|
};

UnbreakableDecomposition unbreakable_decompose(const Instance &inst, std::size_t guard_n = 20);

// Constants of the counting argument, in log2 where they overflow.
struct ProofConstants {
  std::size_t i0 = 0;
  double alpha = 0;       // 35 (r+2) log2(5c)
  double log2_beta = 0;   // (alpha - 1) log2(5c)
  double log2_kappa = 0;  // (alpha - i0 - 2) log2(d/2)
};

ProofConstants proof_constants(std::size_t r, std::uint32_t c, std::size_t d);

// log2 of k d^(alpha-1).
double log2_essential_cap(std::size_t k, std::size_t d, double alpha);

}  // namespace hypermim

#endif  // HYPERMIM_MATROID_H_
