#include "hypermim/flow.h"

#include <algorithm>
#include <queue>

namespace hypermim {

MaxFlow::MaxFlow(int n) : head_(n, -1) {}

int MaxFlow::add_node() {
  head_.push_back(-1);
  return static_cast<int>(head_.size()) - 1;
}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, head_[from], capacity});
  head_[from] = id;
  arcs_.push_back({from, head_[to], 0});
  head_[to] = id + 1;
  return id;
}

bool MaxFlow::bfs(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[v] + 1;
        queue.push(arcs_[a].to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int sink, std::int64_t pushed) {
  if (v == sink || pushed == 0) return pushed;
  for (int &a = cursor_[v]; a != -1; a = arcs_[a].next) {
    Arc &arc = arcs_[a];
    if (arc.capacity <= 0 || level_[arc.to] != level_[v] + 1) continue;
    std::int64_t got = dfs(arc.to, sink, std::min(pushed, arc.capacity));
    if (got > 0) {
      arc.capacity -= got;
      arcs_[a ^ 1].capacity += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink, std::int64_t limit) {
  std::int64_t total = 0;
  if (source == sink) return kInfinite;
  while (total < limit && bfs(source, sink)) {
    cursor_ = head_;
    while (total < limit) {
      std::int64_t got = dfs(source, sink, limit - total);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

std::int64_t MaxFlow::flow_on(int arc) const { return arcs_[arc ^ 1].capacity; }

std::vector<bool> MaxFlow::reachable_from(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
        seen[arcs_[a].to] = true;
        stack.push_back(arcs_[a].to);
      }
    }
  }
  return seen;
}

std::vector<bool> MaxFlow::reaching(int sink) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{sink};
  seen[sink] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    // u reaches v when the arc u->v has residual capacity; that arc is the
    // partner of an arc stored at v.
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      int u = arcs_[a].to;
      if (arcs_[a ^ 1].capacity > 0 && !seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace hypermim
