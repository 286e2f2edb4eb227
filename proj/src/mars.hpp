#pragma once

#include <string>
#include <vector>

#include "dataset.hpp"

namespace marsbn {

enum class HingeDir { PositivePart, NegativePart };

// max(0, x - knot) or max(0, knot - x) over one design column.
struct Hinge {
  int design_col = 0;
  double knot = 0.0;
  HingeDir dir = HingeDir::PositivePart;

  double eval(double x) const {
    double v = dir == HingeDir::PositivePart ? x - knot : knot - x;
    return v > 0.0 ? v : 0.0;
  }
  bool operator==(const Hinge&) const = default;
};

// Product of hinges over distinct design columns.
struct BasisFunction {
  std::vector<Hinge> factors;

  double eval(const std::vector<std::vector<double>>& design_cols, int row) const {
    double v = 1.0;
    for (const auto& h : factors) {
      v *= h.eval(design_cols[static_cast<std::size_t>(h.design_col)][static_cast<std::size_t>(row)]);
      if (v == 0.0) return 0.0;
    }
    return v;
  }
  bool uses_col(int c) const {
    for (const auto& h : factors)
      if (h.design_col == c) return true;
    return false;
  }
  int degree() const { return static_cast<int>(factors.size()); }
  bool operator==(const BasisFunction&) const = default;
};

enum class GcvForm { Standard, PaperLiteral };

struct FitConfig {
  int max_terms = 21;              // intercept counts as a term
  int max_degree = 10;             // hinges per product
  double min_rss_improve = 1e-3;   // forward stop: relative R^2 gain below this
  double gcv_penalty = 3.0;        // d in C(t) = t + d*(t-1)/2
  int max_knots_per_var = 100;
  GcvForm gcv_form = GcvForm::Standard;
};

struct MarsTerm {
  BasisFunction basis;
  std::vector<double> coef;  // one per response
};

// For a categorical child the model carries one coefficient vector per
// indicator response over a shared basis set; rss/gcv are summed across
// responses.
struct MarsModel {
  std::vector<double> intercept;  // one per response
  std::vector<MarsTerm> terms;
  int n_responses = 1;
  double rss = 0.0;
  double gcv = 0.0;

  int term_count() const { return 1 + static_cast<int>(terms.size()); }
};

// Regression problem for one child: parent design columns plus child targets
// (one column per response).
struct ChildProblem {
  EncodedMatrix design;
  std::vector<std::vector<double>> targets;
  std::vector<bool> indicator_col;  // per design column

  int n_rows() const { return targets.empty() ? 0 : static_cast<int>(targets[0].size()); }
  int n_responses() const { return static_cast<int>(targets.size()); }
};

ChildProblem make_child_problem(const Dataset& d, int child, const std::vector<int>& parents);

double eval_basis(const BasisFunction& b, const std::vector<double>& design_row);

struct LeastSquaresFit {
  std::vector<std::vector<double>> coef;  // [response][column]
  double rss = 0.0;
  int rank = 0;
};

// Multi-response least squares via column-pivoted orthogonalization; columns
// whose pivot falls below 1e-10 times the largest column norm are dropped and
// get coefficient 0.
LeastSquaresFit fit_least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<std::vector<double>>& targets);

double gcv_score(double rss, int n_rows, int term_count, const FitConfig& cfg);

double model_rss(const MarsModel& model, const ChildProblem& prob);

MarsModel forward_pass(const Dataset& d, int child, const std::vector<int>& parents, const FitConfig& cfg);
MarsModel backward_prune(const MarsModel& model, const Dataset& d, int child, const std::vector<int>& parents,
                         const FitConfig& cfg);
MarsModel fit_mars(const Dataset& d, int child, const std::vector<int>& parents, const FitConfig& cfg);

// One line per term: coefficients, then "h(x3-1.5)"-style factors; intercept
// line first.
std::string model_to_text(const MarsModel& model);

}  // namespace marsbn
