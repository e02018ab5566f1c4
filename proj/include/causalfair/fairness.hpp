#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "causalfair/ancestry.hpp"
#include "causalfair/scm.hpp"

namespace causalfair {

//! Full uses every attribute, Unaware drops the sensitive one, Oracle keeps
//! the true-DAG non-descendants, Fair the definite non-descendants of the
//! working graph, FairRelax adds the possible descendants back in.
enum class FairnessMethod { full, unaware, fair_relax, oracle, fair };

std::string to_string(FairnessMethod m);
FairnessMethod parse_method(std::string_view name);
inline constexpr FairnessMethod kAllMethods[] = {
    FairnessMethod::full, FairnessMethod::unaware, FairnessMethod::fair_relax,
    FairnessMethod::oracle, FairnessMethod::fair};

struct FeatureSet {
  std::vector<std::string> features;  // vertex order of the source node list
};

//! Picks predictor columns for a method. `graph` is required for Fair and
//! FairRelax, `true_dag` for Oracle; a missing requirement raises
//! ErrorKind::missing_graph. The outcome never appears; the sensitive
//! attribute only appears for Full.
FeatureSet select_features(FairnessMethod method, const MaxOrientedGraph* graph,
                           const PartiallyDirectedGraph* true_dag,
                           std::string_view sensitive, std::string_view outcome,
                           const std::vector<std::string>& all_nodes);

struct FitResult {
  std::vector<std::string> features;
  Eigen::VectorXd coefficients;  // parallel to features
  double intercept = 0.0;
  bool rank_deficient = false;
};

//! Least squares of the outcome on the features plus intercept over the
//! given rows. Solved with a pivoted complete orthogonal decomposition, so
//! a rank-deficient design degrades to the least-norm solution (flagged)
//! instead of failing.
FitResult fit_ols(const Dataset& data, const FeatureSet& features,
                  std::string_view outcome, const std::vector<int>& rows);

//! Convenience: fit on the row-wise concatenation of two datasets (the
//! factual and counterfactual training pools). Row index r < a.rows()
//! addresses `a`, the rest address `b`.
FitResult fit_ols_pooled(const Dataset& a, const Dataset& b, const FeatureSet& features,
                         std::string_view outcome, const std::vector<int>& rows_a,
                         const std::vector<int>& rows_b);

Eigen::VectorXd predict(const FitResult& model, const Dataset& data,
                        const std::vector<int>& rows);

//! Mean absolute difference between the factual and counterfactual
//! predictions over the given rows.
double unfairness(const FitResult& model, const CounterfactualPair& pair,
                  const std::vector<int>& rows);

//! Root mean squared prediction error over the given rows.
double rmse(const FitResult& model, const Dataset& data, std::string_view outcome,
            const std::vector<int>& rows);

//! Index-based split: the first floor(n * train_ratio) rows train, the
//! rest test.
struct Split {
  std::vector<int> train;
  std::vector<int> test;
};
Split index_split(int n, double train_ratio);

}  // namespace causalfair
