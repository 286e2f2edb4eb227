#include "graph.hpp"

#include <algorithm>
#include <queue>

namespace marsbn {

bool Dag::has_edge(int from, int to) const {
  const auto& p = parents[static_cast<std::size_t>(to)];
  return std::binary_search(p.begin(), p.end(), from);
}

std::vector<std::vector<int>> Dag::children() const {
  std::vector<std::vector<int>> ch(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int p : parents[static_cast<std::size_t>(v)]) ch[static_cast<std::size_t>(p)].push_back(v);
  return ch;
}

std::optional<std::vector<int>> Dag::topo_order() const {
  std::vector<int> indeg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) indeg[static_cast<std::size_t>(v)] = static_cast<int>(parents[static_cast<std::size_t>(v)].size());
  auto ch = children();

  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int c : ch[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace marsbn
