#ifndef HYPERMIM_FLOW_H_
#define HYPERMIM_FLOW_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace hypermim {

// Dinic max-flow on an integer-capacity digraph.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int n);

  int add_node();
  int add_arc(int from, int to, std::int64_t capacity);
  int num_nodes() const { return static_cast<int>(head_.size()); }

  // Pushes flow until `limit` is reached or no augmenting path remains.
  std::int64_t run(int source, int sink, std::int64_t limit = kInfinite);
  std::int64_t flow_on(int arc) const;

  // Residual reachability after run().
  std::vector<bool> reachable_from(int source) const;
  std::vector<bool> reaching(int sink) const;

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t capacity;
  };

  bool bfs(int source, int sink);
  std::int64_t dfs(int v, int sink, std::int64_t pushed);

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace hypermim

#endif  // HYPERMIM_FLOW_H_
