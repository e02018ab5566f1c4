#include "causalfair/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace causalfair {

namespace {

//! Keeps `universe` order while filtering by membership and exclusions.
std::vector<std::string> ordered_filter(const std::vector<std::string>& universe,
                                        const std::unordered_set<std::string>& keep,
                                        const std::unordered_set<std::string>& drop) {
  std::vector<std::string> out;
  for (const auto& name : universe)
    if (keep.count(name) && !drop.count(name)) out.push_back(name);
  return out;
}

Eigen::MatrixXd design_matrix(const Dataset& data, const FeatureSet& features,
                              const std::vector<int>& rows) {
  Eigen::MatrixXd design(rows.size(), features.features.size() + 1);
  design.col(0).setOnes();
  for (std::size_t f = 0; f < features.features.size(); ++f) {
    const int col = data.column_of(features.features[f]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      design(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(f + 1)) =
          data.values(rows[r], col);
  }
  return design;
}

FitResult solve_ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& target,
                    const FeatureSet& features) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
  Eigen::VectorXd beta = cod.solve(target);
  FitResult fit;
  fit.features = features.features;
  fit.intercept = beta(0);
  fit.coefficients = beta.tail(beta.size() - 1);
  fit.rank_deficient = cod.rank() < design.cols();
  return fit;
}

}  // namespace

std::string to_string(FairnessMethod m) {
  switch (m) {
    case FairnessMethod::full:
      return "full";
    case FairnessMethod::unaware:
      return "unaware";
    case FairnessMethod::fair_relax:
      return "fairrelax";
    case FairnessMethod::oracle:
      return "oracle";
    case FairnessMethod::fair:
      return "fair";
  }
  return "?";
}

FairnessMethod parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "full") return FairnessMethod::full;
  if (lower == "unaware") return FairnessMethod::unaware;
  if (lower == "fairrelax" || lower == "fair-relax") return FairnessMethod::fair_relax;
  if (lower == "oracle") return FairnessMethod::oracle;
  if (lower == "fair") return FairnessMethod::fair;
  throw Error(ErrorKind::bad_config, "unknown method '" + std::string(name) + "'");
}

FeatureSet select_features(FairnessMethod method, const MaxOrientedGraph* graph,
                           const PartiallyDirectedGraph* true_dag,
                           std::string_view sensitive, std::string_view outcome,
                           const std::vector<std::string>& all_nodes) {
  const std::unordered_set<std::string> drop{std::string(outcome)};
  const std::string sens(sensitive);

  switch (method) {
    case FairnessMethod::full: {
      std::unordered_set<std::string> keep(all_nodes.begin(), all_nodes.end());
      return {ordered_filter(all_nodes, keep, drop)};
    }
    case FairnessMethod::unaware: {
      std::unordered_set<std::string> keep(all_nodes.begin(), all_nodes.end());
      keep.erase(sens);
      return {ordered_filter(all_nodes, keep, drop)};
    }
    case FairnessMethod::oracle: {
      if (!true_dag)
        throw Error(ErrorKind::missing_graph, "oracle selection needs the true DAG");
      auto descendants = directed_descendants(*true_dag, sensitive);
      std::unordered_set<std::string> desc(descendants.begin(), descendants.end());
      std::unordered_set<std::string> keep;
      for (const auto& name : all_nodes)
        if (!desc.count(name)) keep.insert(name);
      return {ordered_filter(all_nodes, keep, drop)};
    }
    case FairnessMethod::fair:
    case FairnessMethod::fair_relax: {
      if (!graph)
        throw Error(ErrorKind::missing_graph,
                    "fair/fairrelax selection needs a maximally oriented graph");
      auto partition = classify_all(*graph, sensitive);
      std::unordered_set<std::string> keep(partition.definite_non_descendants.begin(),
                                           partition.definite_non_descendants.end());
      if (method == FairnessMethod::fair_relax)
        keep.insert(partition.possible_descendants.begin(),
                    partition.possible_descendants.end());
      return {ordered_filter(all_nodes, keep, drop)};
    }
  }
  throw Error(ErrorKind::bad_config, "unhandled method");
}

FitResult fit_ols(const Dataset& data, const FeatureSet& features,
                  std::string_view outcome, const std::vector<int>& rows) {
  const int y_col = data.column_of(outcome);
  Eigen::VectorXd target(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) target(r) = data.values(rows[r], y_col);
  return solve_ols(design_matrix(data, features, rows), target, features);
}

FitResult fit_ols_pooled(const Dataset& a, const Dataset& b, const FeatureSet& features,
                         std::string_view outcome, const std::vector<int>& rows_a,
                         const std::vector<int>& rows_b) {
  Eigen::MatrixXd design_a = design_matrix(a, features, rows_a);
  Eigen::MatrixXd design_b = design_matrix(b, features, rows_b);
  Eigen::MatrixXd design(design_a.rows() + design_b.rows(), design_a.cols());
  design << design_a, design_b;

  const int ya = a.column_of(outcome);
  const int yb = b.column_of(outcome);
  Eigen::VectorXd target(design.rows());
  for (std::size_t r = 0; r < rows_a.size(); ++r) target(r) = a.values(rows_a[r], ya);
  for (std::size_t r = 0; r < rows_b.size(); ++r)
    target(static_cast<Eigen::Index>(rows_a.size() + r)) = b.values(rows_b[r], yb);
  return solve_ols(design, target, features);
}

Eigen::VectorXd predict(const FitResult& model, const Dataset& data,
                        const std::vector<int>& rows) {
  FeatureSet features{model.features};
  Eigen::MatrixXd design = design_matrix(data, features, rows);
  Eigen::VectorXd beta(design.cols());
  beta(0) = model.intercept;
  beta.tail(model.coefficients.size()) = model.coefficients;
  return design * beta;
}

double unfairness(const FitResult& model, const CounterfactualPair& pair,
                  const std::vector<int>& rows) {
  if (rows.empty()) return 0.0;
  Eigen::VectorXd factual = predict(model, pair.factual, rows);
  Eigen::VectorXd counterfactual = predict(model, pair.counterfactual, rows);
  return (factual - counterfactual).cwiseAbs().mean();
}

double rmse(const FitResult& model, const Dataset& data, std::string_view outcome,
            const std::vector<int>& rows) {
  if (rows.empty()) return 0.0;
  const int y_col = data.column_of(outcome);
  Eigen::VectorXd predicted = predict(model, data, rows);
  double sum = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    double err = predicted(r) - data.values(rows[r], y_col);
    sum += err * err;
  }
  return std::sqrt(sum / static_cast<double>(rows.size()));
}

Split index_split(int n, double train_ratio) {
  if (train_ratio < 0.0 || train_ratio > 1.0)
    throw Error(ErrorKind::bad_config, "train ratio must sit in [0, 1]");
  Split split;
  const int cut = static_cast<int>(std::floor(n * train_ratio));
  for (int r = 0; r < n; ++r) (r < cut ? split.train : split.test).push_back(r);
  return split;
}

}  // namespace causalfair
