#ifndef HYPERMIM_PARTITION_H_
#define HYPERMIM_PARTITION_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypermim/types.h"

namespace hypermim {

// Partition of a sorted terminal list. label[i] is the position of the
// smallest terminal sharing a block with terminal i, which makes the
// representation canonical.
struct TerminalPartition {
  std::vector<std::uint32_t> label;

  static TerminalPartition single_block(std::size_t k);
  static TerminalPartition singletons(std::size_t k);
  // Arbitrary block labels, canonicalised.
  static TerminalPartition from_labels(const std::vector<std::uint32_t> &raw);
  // Blocks given as terminal ids; must cover `terminals` exactly.
  static TerminalPartition from_blocks(const VertexSet &terminals, const std::vector<VertexSet> &blocks);

  std::size_t size() const { return label.size(); }
  std::size_t num_blocks() const;
  std::vector<VertexSet> blocks(const VertexSet &terminals) const;
  std::string str(const VertexSet &terminals) const;

  friend bool operator==(const TerminalPartition &, const TerminalPartition &) = default;
  friend auto operator<=>(const TerminalPartition &, const TerminalPartition &) = default;
};

// True when every block of `finer` lies inside a block of `coarser`.
bool refines(const TerminalPartition &finer, const TerminalPartition &coarser);

// Calls `visit` for every partition of k elements in restricted-growth order.
// Throws GuardError when k exceeds `guard`.
void for_each_partition(std::size_t k, const std::function<void(const TerminalPartition &)> &visit,
                        std::size_t guard = 12);
std::vector<TerminalPartition> all_partitions(std::size_t k, std::size_t guard = 12);

}  // namespace hypermim

#endif  // HYPERMIM_PARTITION_H_
