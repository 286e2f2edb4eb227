#include "graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "error.hpp"

namespace marsbn {

int NamedDag::node_index(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

void write_edge_file(const NamedDag& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error::io("cannot write file: " + path);

  std::vector<bool> touched(static_cast<std::size_t>(g.dag.n), false);
  for (int child = 0; child < g.dag.n; ++child) {
    for (int parent : g.dag.parents[static_cast<std::size_t>(child)]) {
      out << g.names[static_cast<std::size_t>(parent)] << ' ' << g.names[static_cast<std::size_t>(child)] << '\n';
      touched[static_cast<std::size_t>(parent)] = true;
      touched[static_cast<std::size_t>(child)] = true;
    }
  }
  for (int v = 0; v < g.dag.n; ++v)
    if (!touched[static_cast<std::size_t>(v)]) out << g.names[static_cast<std::size_t>(v)] << '\n';
  if (!out) throw Error::io("write failed: " + path);
}

NamedDag read_edge_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot open file: " + path);

  NamedDag g;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(g.names.size());
    index.emplace(name, id);
    g.names.push_back(name);
    return id;
  };

  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a) || a[0] == '#') continue;
    if (!(ss >> b)) {
      intern(a);
      continue;
    }
    if (ss >> extra)
      throw Error::parse(path + ": line " + std::to_string(line_no) + ": expected 'parent child'");
    edges.emplace_back(intern(a), intern(b));
  }

  g.dag = Dag(static_cast<int>(g.names.size()));
  for (auto [p, c] : edges) {
    auto& plist = g.dag.parents[static_cast<std::size_t>(c)];
    if (std::find(plist.begin(), plist.end(), p) == plist.end()) plist.push_back(p);
  }
  for (auto& plist : g.dag.parents) std::sort(plist.begin(), plist.end());
  return g;
}

}  // namespace marsbn
