#include "hypermim/partition.h"

#include <algorithm>
#include <map>

namespace hypermim {

TerminalPartition TerminalPartition::single_block(std::size_t k) {
  return {std::vector<std::uint32_t>(k, 0)};
}

TerminalPartition TerminalPartition::singletons(std::size_t k) {
  TerminalPartition p;
  p.label.resize(k);
  for (std::size_t i = 0; i < k; ++i) p.label[i] = static_cast<std::uint32_t>(i);
  return p;
}

TerminalPartition TerminalPartition::from_labels(const std::vector<std::uint32_t> &raw) {
  std::map<std::uint32_t, std::uint32_t> first;
  TerminalPartition p;
  p.label.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = first.emplace(raw[i], static_cast<std::uint32_t>(i));
    p.label[i] = it->second;
  }
  return p;
}

TerminalPartition TerminalPartition::from_blocks(const VertexSet &terminals, const std::vector<VertexSet> &blocks) {
  std::vector<std::uint32_t> raw(terminals.size(), UINT32_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error("empty block in terminal partition");
    for (VertexId t : blocks[b]) {
      auto it = std::lower_bound(terminals.begin(), terminals.end(), t);
      if (it == terminals.end() || *it != t) throw Error("block vertex " + std::to_string(t) + " is not a terminal");
      auto idx = static_cast<std::size_t>(it - terminals.begin());
      if (raw[idx] != UINT32_MAX) throw Error("terminal " + std::to_string(t) + " appears in two blocks");
      raw[idx] = static_cast<std::uint32_t>(b);
    }
  }
  for (auto v : raw) {
    if (v == UINT32_MAX) throw Error("terminal partition does not cover every terminal");
  }
  return from_labels(raw);
}

std::size_t TerminalPartition::num_blocks() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < label.size(); ++i) count += label[i] == i;
  return count;
}

std::vector<VertexSet> TerminalPartition::blocks(const VertexSet &terminals) const {
  std::vector<VertexSet> out;
  std::vector<std::size_t> slot(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == i) {
      slot[i] = out.size();
      out.emplace_back();
    }
    out[slot[label[i]]].push_back(terminals[i]);
  }
  return out;
}

std::string TerminalPartition::str(const VertexSet &terminals) const {
  std::string s;
  for (const auto &block : blocks(terminals)) {
    if (!s.empty()) s += '|';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(block[i]);
    }
  }
  return s;
}

bool refines(const TerminalPartition &finer, const TerminalPartition &coarser) {
  for (std::size_t i = 0; i < finer.label.size(); ++i) {
    if (coarser.label[i] != coarser.label[finer.label[i]]) return false;
  }
  return true;
}

void for_each_partition(std::size_t k, const std::function<void(const TerminalPartition &)> &visit,
                        std::size_t guard) {
  if (k > guard) {
    throw GuardError("partition enumeration over " + std::to_string(k) + " terminals exceeds guard " +
                     std::to_string(guard) + "; use the engine path instead");
  }
  std::vector<std::uint32_t> growth(k, 0);
  std::vector<std::uint32_t> high(k, 0);  // max label among prefix
  TerminalPartition p;
  while (true) {
    p = TerminalPartition::from_labels(growth);
    visit(p);
    // next restricted growth string
    std::size_t i = k;
    while (i > 1) {
      --i;
      if (growth[i] <= high[i - 1]) {
        ++growth[i];
        high[i] = std::max(high[i - 1], growth[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
          growth[j] = 0;
          high[j] = high[i];
        }
        break;
      }
      if (i == 1) return;
    }
    if (k <= 1) return;
  }
}

std::vector<TerminalPartition> all_partitions(std::size_t k, std::size_t guard) {
  std::vector<TerminalPartition> out;
  for_each_partition(k, [&](const TerminalPartition &p) { out.push_back(p); }, guard);
  return out;
}

}  // namespace hypermim
