#ifndef HYPERMIM_ENGINE_H_
#define HYPERMIM_ENGINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermim/hypergraph.h"
#include "hypermim/types.h"

namespace hypermim {

struct EngineOptions {
  std::optional<Rational> phi;  // fixed phi; empty selects the formula
  double exponent_m = 1.0;      // M in the phi formula
  std::size_t guard_n = 20;     // exhaustive expander scan limit
  std::size_t threads = 0;      // 0 means thread_budget()
  double cut_budget_factor = 1.0;
};

// Contracts the smallest-id non-essential edge until every remaining edge is
// essential. Edges in `locked` are never contracted.
std::pair<Hypergraph, ContractionMap> minimal_mimicking_small(const Instance &inst, const EdgeSet &locked = {});

struct ExpanderRunStats {
  bool used_small_mode = false;     // delegated before enumeration
  bool switched_to_small = false;   // dropped below the threshold mid-scan
  std::size_t useful_partitions = 0;
  std::size_t candidate_cuts = 0;
};

// Minimal network of a connected phi-expander: one enumeration of useful
// partitions, then a single ascending scan over edge ids.
std::pair<Hypergraph, ContractionMap> minimal_mimicking_expander(const Instance &inst, Rational phi,
                                                                 const EdgeSet &locked = {},
                                                                 const EngineOptions &options = {},
                                                                 ExpanderRunStats *stats = nullptr);

struct PartResult {
  Subinstance sub;
  Hypergraph result;
  ContractionMap map;
};

// Re-fuses restricted edges across parts and replays every part's
// contraction order on the host those parts came from.
std::pair<Hypergraph, ContractionMap> glue(const std::vector<PartResult> &parts);

struct PassStats {
  Rational phi;
  std::size_t parts = 0;
  std::size_t cut_edges = 0;
  double cut_budget = 0;
  bool cut_within_budget = true;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  std::size_t contractions = 0;
  std::size_t small_mode_parts = 0;
};

std::pair<Hypergraph, ContractionMap> mimicking_expander_pass(const Instance &inst, const EngineOptions &options = {},
                                                              PassStats *stats = nullptr);

struct SparsifyReport {
  std::size_t passes = 0;
  std::vector<EdgeId> contractions;
  std::size_t final_size = 0;
  std::vector<PassStats> pass_stats;
};

struct SparsifyResult {
  Hypergraph graph;
  ContractionMap map;
  SparsifyReport report;
};

// Repeats the pass up to ceil(log2 m) times (at least once), stopping early
// when a pass contracts nothing.
SparsifyResult sparsify(const Instance &inst, const EngineOptions &options = {});

// phi used for a pass on `inst`.
Rational pass_phi(const Instance &inst, const EngineOptions &options);

}  // namespace hypermim

#endif  // HYPERMIM_ENGINE_H_
