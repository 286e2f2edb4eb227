#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace marsbn {

struct NamedDag {
  Dag dag;
  std::vector<std::string> names;

  int node_index(const std::string& name) const;  // -1 if absent
};

// Edge-list format: one "parent_name child_name" line per edge, child-major
// with parents in ascending index order; nodes touching no edge are listed
// once by themselves so the node set survives a round trip.
void write_edge_file(const NamedDag& g, const std::string& path);

// Accepts the writer's output plus arbitrary whitespace separation and
// '#'-prefixed comment lines. Node indices follow first appearance.
NamedDag read_edge_file(const std::string& path);

}  // namespace marsbn
