#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dataset.hpp"
#include "graph.hpp"

namespace marsbn {

enum class MechanismKind { Linear, PiecewiseHinge, DiscreteCpt };

// value = sum_j weights[j] * parent_j + N(0, sigma^2)
struct LinearMechanism {
  std::vector<double> weights;  // aligned with the node's sorted parent list
  double sigma = 0.0;
};

struct HingeTerm {
  int parent_pos = 0;  // position in the node's sorted parent list
  double knot = 0.0;
  bool positive = true;  // max(0, x - knot) vs max(0, knot - x)
  double weight = 0.0;
};

struct PiecewiseHingeMechanism {
  std::vector<HingeTerm> terms;
  double sigma = 0.0;
};

// Rows indexed by the mixed-radix parent configuration (first parent varies
// slowest); each row is a probability vector over the node's labels.
struct DiscreteCptMechanism {
  int cardinality = 2;
  std::vector<std::vector<double>> table;
};

using Mechanism = std::variant<LinearMechanism, PiecewiseHingeMechanism, DiscreteCptMechanism>;

struct GroundTruthNetwork {
  Dag dag;
  std::vector<std::string> names;
  std::vector<Mechanism> mechanisms;
};

// Random DAG over a random topological order honoring both degree caps, with
// mechanisms whose parent weights satisfy |w| >= 0.5. Root nodes of the
// continuous kinds draw from N(0,1) so the data varies even at sigma = 0.
GroundTruthNetwork generate_network(int n, int max_in_degree, int max_out_degree, MechanismKind kind,
                                    std::uint64_t seed, double sigma = 0.1);

// Ancestral forward sampling, deterministic given the seed.
Dataset sample(const GroundTruthNetwork& net, int n_rows, std::uint64_t seed);

double mechanism_value(const Mechanism& mech, const std::vector<double>& parent_values);

}  // namespace marsbn
