#pragma once

#include <algorithm>
#include <queue>
#include <vector>

namespace rigidlift::detail {

// Small Edmonds-Karp max flow. Arcs are explored in insertion order, which
// keeps results deterministic.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adj_(nodes) {}

  int add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, 0});
    adj_[from].push_back(static_cast<int>(arcs_.size()) - 1);
    arcs_.push_back({from, 0, 0});
    adj_[to].push_back(static_cast<int>(arcs_.size()) - 1);
    return static_cast<int>(arcs_.size()) - 2;
  }

  int run(int s, int t, int limit = 1 << 30) {
    int total = 0;
    while (total < limit) {
      std::vector<int> via(adj_.size(), -1);
      std::vector<bool> seen(adj_.size(), false);
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty() && !seen[t]) {
        int x = q.front();
        q.pop();
        for (int a : adj_[x]) {
          int y = arcs_[a].to;
          if (!seen[y] && residual(a) > 0) {
            seen[y] = true;
            via[y] = a;
            q.push(y);
          }
        }
      }
      if (!seen[t]) break;
      int push = limit - total;
      for (int y = t; y != s; y = arcs_[via[y] ^ 1].to) push = std::min(push, residual(via[y]));
      for (int y = t; y != s; y = arcs_[via[y] ^ 1].to) {
        arcs_[via[y]].flow += push;
        arcs_[via[y] ^ 1].flow -= push;
      }
      total += push;
    }
    return total;
  }

  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int flow(int arc) const { return arcs_[arc].flow; }
  const std::vector<int>& out_arcs(int node) const { return adj_[node]; }
  int head(int arc) const { return arcs_[arc].to; }
  bool is_forward(int arc) const { return (arc & 1) == 0; }

  // Nodes reachable from s in the residual graph (the source side of a min cut).
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a : adj_[x]) {
        int y = arcs_[a].to;
        if (!seen[y] && residual(a) > 0) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
  };
  int residual(int a) const { return arcs_[a].cap - arcs_[a].flow; }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace rigidlift::detail
