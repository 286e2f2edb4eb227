#pragma once

#include <optional>
#include <vector>

namespace marsbn {

// Directed graph stored as per-node parent sets (sorted ascending).
// Acyclicity is a property checked on demand, not enforced on mutation.
struct Dag {
  int n = 0;
  std::vector<std::vector<int>> parents;

  Dag() = default;
  explicit Dag(int nodes) : n(nodes), parents(static_cast<std::size_t>(nodes)) {}

  int edge_count() const {
    int m = 0;
    for (const auto& p : parents) m += static_cast<int>(p.size());
    return m;
  }

  bool has_edge(int from, int to) const;
  std::vector<std::vector<int>> children() const;

  // Topological order (parents before children), or nullopt if cyclic.
  // Ties broken by smallest node index for determinism.
  std::optional<std::vector<int>> topo_order() const;
  bool is_acyclic() const { return topo_order().has_value(); }

  bool operator==(const Dag& other) const = default;
};

}  // namespace marsbn
