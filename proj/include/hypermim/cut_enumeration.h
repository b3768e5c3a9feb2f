#ifndef HYPERMIM_CUT_ENUMERATION_H_
#define HYPERMIM_CUT_ENUMERATION_H_

#include <cstdint>
#include <vector>

#include "hypermim/cut_oracle.h"
#include "hypermim/hypergraph.h"
#include "hypermim/partition.h"

namespace hypermim {

struct Core {
  VertexSet vertex_set;
  EdgeSet generating_cut;
};

struct CandidateCut {
  EdgeSet edges;
  Core core;
  std::vector<TerminalPartition> partitions;
};

struct EnumerationOptions {
  // Keep branching after a qualifying set is emitted. The literal variant
  // returns immediately and can miss smaller sets around t.
  bool emit_and_continue = true;
  // Start the helper from every vertex rather than from terminals only.
  bool all_vertices = false;
  // Re-certify the expander property before enumerating.
  bool check_expander = true;
  std::size_t expander_guard_n = 20;
};

// Connected vertex sets C of G - X containing t with |boundary(C)| <= c, found by
// bounded DFS (ascending edge ids, at most M+1 edges) and branching on X.
std::vector<VertexSet> enumerate_cuts_help(const Hypergraph &g, VertexId t, const VertexSet &x, std::uint32_t c,
                                           std::uint64_t m_bound, const EnumerationOptions &options = {});

// Superset of all connected multiway cuts of size <= c; always contains the empty cut.
std::vector<CandidateCut> connected_multiway_cuts(const Instance &inst, Rational phi,
                                                  const EnumerationOptions &options = {});

// Union of the components X of G - F with |E(X)| <= phi^-1 |F|.
Core core_of(const Instance &inst, const EdgeSet &f, Rational phi);

// Terminals of `set` all lie in one component of its restricted hypergraph.
bool terminals_connected_within(const Instance &inst, const VertexSet &set);

bool is_connected_multiway_cut(const Instance &inst, const EdgeSet &f, Rational phi);

struct PartitionCandidates {
  TerminalPartition partition;
  std::uint32_t value = 0;
  std::vector<EdgeSet> min_cuts;  // pool cuts of that value whose partition refines this one
};

// Distinct induced partitions of the pool, each with its minimum pool cuts.
std::vector<PartitionCandidates> partitions_from_cuts(const Instance &inst, const std::vector<CandidateCut> &cuts);

}  // namespace hypermim

#endif  // HYPERMIM_CUT_ENUMERATION_H_
