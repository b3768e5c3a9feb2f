#ifndef HYPERMIM_CUT_ORACLE_H_
#define HYPERMIM_CUT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hypermim/hypergraph.h"
#include "hypermim/partition.h"

namespace hypermim {

struct CutCertificate {
  EdgeSet edges;
  std::uint32_t value = 0;

  friend bool operator==(const CutCertificate &, const CutCertificate &) = default;
};

// Terminal partition of inst induced by the components of G minus `removed`.
TerminalPartition induced_partition(const Instance &inst, const EdgeSet &removed);

// Visits every edge subset of size <= limit, by size then lexicographically.
// Returning false from `visit` stops the scan.
void for_each_edge_subset(const EdgeSet &edges, std::uint32_t limit,
                          const std::function<bool(const EdgeSet &)> &visit);

// Every edge set of size <= limit together with its induced partition.
class CutTable {
 public:
  struct Entry {
    EdgeSet edges;
    TerminalPartition partition;
  };

  CutTable(const Instance &inst, std::uint32_t limit);

  const std::vector<Entry> &entries() const { return entries_; }
  std::uint32_t limit() const { return limit_; }
  // Distinct induced partitions, sorted.
  std::vector<TerminalPartition> induced_partitions() const;
  std::optional<CutCertificate> min_cut(const TerminalPartition &part) const;
  // All minimum multiway cuts of `part` within the limit (empty if none).
  std::vector<EdgeSet> min_cuts(const TerminalPartition &part) const;
  // Union over induced partitions of the intersection of their minimum cuts.
  EdgeSet essential_edges() const;

 private:
  std::uint32_t limit_;
  std::vector<Entry> entries_;
};

bool is_multiway_cut(const Instance &inst, const TerminalPartition &part, const EdgeSet &f);
// Empty optional means every multiway cut is larger than the budget.
std::optional<CutCertificate> min_multiway_cut(const Instance &inst, const TerminalPartition &part);
std::optional<CutCertificate> min_multicut(const Instance &inst,
                                           const std::vector<std::pair<VertexId, VertexId>> &pairs);

// Definition-level check over all terminal partitions; guarded on |T|.
bool is_essential(const Instance &inst, EdgeId e, std::size_t guard_k = 12);
// Same answer for every edge at once, via the induced partitions of small cuts.
EdgeSet essential_edges(const Instance &inst);

// Whether `result`, reached from orig.graph through `map`, preserves every
// multiway cut value <= c. Throws if the map does not reproduce `result`.
bool is_mimicking(const Instance &orig, const Hypergraph &result, const ContractionMap &map);

// Maximum number of edge-disjoint hyperedge paths from edges meeting
// `sources` to the target multiset. A target listed twice may absorb two
// paths; a target in `reuse` is a sink-only end that a through-path may share.
std::uint32_t edge_disjoint_paths(const Hypergraph &g, const VertexSet &sources, const std::vector<EdgeId> &targets,
                                  const EdgeSet &reuse);

}  // namespace hypermim

#endif  // HYPERMIM_CUT_ORACLE_H_
