#include "generator.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace marsbn {
namespace {

constexpr int kCalibrationRows = 512;
const double kHingeQuantiles[3] = {0.25, 0.5, 0.75};

double signed_weight(Rng& rng) {
  double w = 0.5 + rng.real01();  // |w| in [0.5, 1.5)
  return rng.below(2) ? w : -w;
}

double quantile_of_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  double pos = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

int cpt_row_index(const GroundTruthNetwork& net, int node, const std::vector<double>& parent_values) {
  const auto& parents = net.dag.parents[static_cast<std::size_t>(node)];
  int idx = 0;
  for (std::size_t j = 0; j < parents.size(); ++j) {
    const auto& pm = std::get<DiscreteCptMechanism>(net.mechanisms[static_cast<std::size_t>(parents[j])]);
    idx = idx * pm.cardinality + static_cast<int>(parent_values[j]);
  }
  return idx;
}

}  // namespace

double mechanism_value(const Mechanism& mech, const std::vector<double>& parent_values) {
  if (const auto* lin = std::get_if<LinearMechanism>(&mech)) {
    double v = 0.0;
    for (std::size_t j = 0; j < lin->weights.size(); ++j) v += lin->weights[j] * parent_values[j];
    return v;
  }
  if (const auto* pw = std::get_if<PiecewiseHingeMechanism>(&mech)) {
    double v = 0.0;
    for (const auto& t : pw->terms) {
      double x = parent_values[static_cast<std::size_t>(t.parent_pos)];
      double h = t.positive ? x - t.knot : t.knot - x;
      if (h > 0.0) v += t.weight * h;
    }
    return v;
  }
  throw Error::invalid("mechanism_value: discrete mechanism has no deterministic value");
}

GroundTruthNetwork generate_network(int n, int max_in_degree, int max_out_degree, MechanismKind kind,
                                    std::uint64_t seed, double sigma) {
  if (n < 1) throw Error::invalid("generate_network: n must be >= 1");
  if (max_in_degree < 0 || max_out_degree < 0) throw Error::invalid("generate_network: degree caps must be >= 0");
  if (sigma < 0.0) throw Error::invalid("generate_network: sigma must be >= 0");

  Rng rng(derive_seed(seed, 0x6765746e65ULL));  // graph topology stream

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);

  GroundTruthNetwork net;
  net.dag = Dag(n);
  net.names.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) net.names[static_cast<std::size_t>(i)] = "V" + std::to_string(i);
  net.mechanisms.resize(static_cast<std::size_t>(n));

  std::vector<int> out_degree(static_cast<std::size_t>(n), 0);
  for (int pos = 1; pos < n; ++pos) {
    int v = order[static_cast<std::size_t>(pos)];
    std::vector<int> avail;
    for (int q = 0; q < pos; ++q) {
      int u = order[static_cast<std::size_t>(q)];
      if (out_degree[static_cast<std::size_t>(u)] < max_out_degree) avail.push_back(u);
    }
    int cap = std::min(max_in_degree, static_cast<int>(avail.size()));
    int want = cap > 0 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1)) : 0;
    rng.shuffle(avail);
    std::vector<int> chosen(avail.begin(), avail.begin() + want);
    std::sort(chosen.begin(), chosen.end());
    for (int p : chosen) ++out_degree[static_cast<std::size_t>(p)];
    net.dag.parents[static_cast<std::size_t>(v)] = std::move(chosen);
  }

  Rng mech_rng(derive_seed(seed, 0x6d656368ULL));  // mechanism stream

  if (kind == MechanismKind::DiscreteCpt) {
    std::vector<int> cards(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cards[static_cast<std::size_t>(v)] = 2 + static_cast<int>(mech_rng.below(2));
    for (int v = 0; v < n; ++v) {
      DiscreteCptMechanism m;
      m.cardinality = cards[static_cast<std::size_t>(v)];
      int rows = 1;
      for (int p : net.dag.parents[static_cast<std::size_t>(v)]) rows *= cards[static_cast<std::size_t>(p)];
      m.table.resize(static_cast<std::size_t>(rows));
      for (auto& row : m.table) {
        row.resize(static_cast<std::size_t>(m.cardinality));
        double total = 0.0;
        for (auto& p : row) {
          p = -std::log(std::max(mech_rng.real01(), 1e-12));  // Dirichlet(1)
          total += p;
        }
        for (auto& p : row) p /= total;
      }
      net.mechanisms[static_cast<std::size_t>(v)] = std::move(m);
    }
    return net;
  }

  // Continuous kinds. Hinge knots are placed at empirical quantiles of a
  // fixed internal calibration sample so they land inside each parent's
  // actual value range; the calibration columns are filled in topological
  // order as mechanisms are created.
  std::vector<std::vector<double>> calib(static_cast<std::size_t>(n));
  Rng calib_rng(derive_seed(seed, 0x63616c6962ULL));
  const bool hinge = kind == MechanismKind::PiecewiseHinge;

  for (int pos = 0; pos < n; ++pos) {
    int v = order[static_cast<std::size_t>(pos)];
    const auto& parents = net.dag.parents[static_cast<std::size_t>(v)];
    if (parents.empty() || !hinge) {
      LinearMechanism m;
      m.weights.resize(parents.size());
      for (auto& w : m.weights) w = signed_weight(mech_rng);
      m.sigma = parents.empty() ? 1.0 : sigma;
      net.mechanisms[static_cast<std::size_t>(v)] = std::move(m);
    } else {
      PiecewiseHingeMechanism m;
      m.sigma = sigma;
      for (std::size_t j = 0; j < parents.size(); ++j) {
        std::vector<double> sorted = calib[static_cast<std::size_t>(parents[j])];
        std::sort(sorted.begin(), sorted.end());
        double q_pos = kHingeQuantiles[mech_rng.below(3)];
        double q_neg = kHingeQuantiles[mech_rng.below(3)];
        m.terms.push_back({static_cast<int>(j), quantile_of_sorted(sorted, q_pos), true, signed_weight(mech_rng)});
        m.terms.push_back({static_cast<int>(j), quantile_of_sorted(sorted, q_neg), false, signed_weight(mech_rng)});
      }
      net.mechanisms[static_cast<std::size_t>(v)] = std::move(m);
    }

    // Fill this node's calibration column.
    auto& col = calib[static_cast<std::size_t>(v)];
    col.resize(kCalibrationRows);
    const auto& mech = net.mechanisms[static_cast<std::size_t>(v)];
    double noise = parents.empty() ? 1.0 : sigma;
    std::vector<double> pv(parents.size());
    for (int r = 0; r < kCalibrationRows; ++r) {
      for (std::size_t j = 0; j < parents.size(); ++j)
        pv[j] = calib[static_cast<std::size_t>(parents[j])][static_cast<std::size_t>(r)];
      col[static_cast<std::size_t>(r)] = mechanism_value(mech, pv) + noise * calib_rng.normal();
    }
  }
  return net;
}

Dataset sample(const GroundTruthNetwork& net, int n_rows, std::uint64_t seed) {
  if (n_rows < 1) throw Error::invalid("sample: need at least one row");
  const int n = net.dag.n;
  auto order_opt = net.dag.topo_order();
  if (!order_opt) throw Error::invalid("sample: network graph is cyclic");

  Dataset d;
  d.metas.resize(static_cast<std::size_t>(n));
  d.columns.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n_rows)));
  for (int v = 0; v < n; ++v) {
    VariableMeta meta;
    meta.name = net.names[static_cast<std::size_t>(v)];
    meta.index = v;
    if (const auto* cpt = std::get_if<DiscreteCptMechanism>(&net.mechanisms[static_cast<std::size_t>(v)])) {
      meta.kind = VarKind::Categorical;
      for (int label = 0; label < cpt->cardinality; ++label) meta.domain.push_back(std::to_string(label));
    } else {
      meta.kind = VarKind::Continuous;
    }
    d.metas[static_cast<std::size_t>(v)] = std::move(meta);
  }

  Rng rng(derive_seed(seed, 0x73616d706cULL));
  for (int v : *order_opt) {
    const auto& parents = net.dag.parents[static_cast<std::size_t>(v)];
    const auto& mech = net.mechanisms[static_cast<std::size_t>(v)];
    auto& col = d.columns[static_cast<std::size_t>(v)];
    std::vector<double> pv(parents.size());
    for (int r = 0; r < n_rows; ++r) {
      for (std::size_t j = 0; j < parents.size(); ++j)
        pv[j] = d.columns[static_cast<std::size_t>(parents[j])][static_cast<std::size_t>(r)];
      if (const auto* cpt = std::get_if<DiscreteCptMechanism>(&mech)) {
        const auto& row = cpt->table[static_cast<std::size_t>(cpt_row_index(net, v, pv))];
        double u = rng.real01();
        int label = 0;
        double acc = 0.0;
        for (int k = 0; k < cpt->cardinality; ++k) {
          acc += row[static_cast<std::size_t>(k)];
          if (u < acc || k == cpt->cardinality - 1) {
            label = k;
            break;
          }
        }
        col[static_cast<std::size_t>(r)] = label;
      } else {
        double sigma = std::holds_alternative<LinearMechanism>(mech) ? std::get<LinearMechanism>(mech).sigma
                                                                     : std::get<PiecewiseHingeMechanism>(mech).sigma;
        col[static_cast<std::size_t>(r)] = mechanism_value(mech, pv) + sigma * rng.normal();
      }
    }
  }
  return d;
}

}  // namespace marsbn
