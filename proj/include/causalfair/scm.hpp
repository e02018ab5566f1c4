#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "causalfair/graph.hpp"

namespace causalfair {

//! Erdos-Renyi style random DAG: draws a vertex permutation, samples
//! `edge_count` distinct pairs and orients each from earlier to later in
//! the permutation. Nodes are named X1..Xd. Deterministic in the seed.
PartiallyDirectedGraph random_er_dag(int node_count, int edge_count, std::uint64_t seed);

//! Linear structural equation model over a DAG: every non-root value is
//! the weighted parent sum plus noise. The sensitive column is discrete
//! with `arity` levels; see generate_data for how it is drawn.
struct LinearSem {
  PartiallyDirectedGraph dag;
  std::vector<double> weights;      // parallel to dag.directed_edges()
  std::vector<double> noise_scale;  // per-node standard deviation
  int sensitive = -1;
  int outcome = -1;
  int arity = 2;

  double weight(int tail, int head) const;
  const std::string& sensitive_name() const { return dag.name_of(sensitive); }
  const std::string& outcome_name() const { return dag.name_of(outcome); }
};

//! Post-nonlinear extension: X = g(f(weighted parent sum + eps)) with f a
//! (composition of) smooth transform(s) and g an output distortion.
struct NonlinearSem {
  enum class F : unsigned char { linear, sine, cosine, tanh, sigmoid };
  enum class G : unsigned char { linear, absolute, reciprocal };
  enum class Noise : unsigned char { gaussian, exponential, gumbel };

  LinearSem base;
  std::vector<std::vector<F>> f_chain;  // per node, applied in order (1 or 2 entries)
  std::vector<G> g_out;                 // per node
  std::vector<Noise> noise_kind;        // per node
};

//! Rows of simulated data plus the noise that produced them; the noise is
//! what makes counterfactual replay possible. Columns follow a topological
//! order of the generating DAG.
struct Dataset {
  std::vector<std::string> columns;
  Eigen::MatrixXd values;                 // n x d
  std::optional<Eigen::MatrixXd> noise;   // n x d, same column order
  std::uint64_t seed = 0;

  int rows() const { return static_cast<int>(values.rows()); }
  int column_of(std::string_view name) const;  // throws schema_mismatch when absent
};

struct CounterfactualPair {
  Dataset factual;
  Dataset counterfactual;
  std::vector<std::pair<int, int>> intervention;  // per row: (a, a')
};

//! Edge weights uniform over [-2,-0.5] u [0.5,2]; noise N(0, 1.5), read as
//! variance 1.5. Deterministic in the seed.
LinearSem sample_sem(const PartiallyDirectedGraph& dag, std::string_view sensitive,
                     std::string_view outcome, int arity, std::uint64_t seed);

//! Simulates n rows in topological order. A parentless sensitive node is
//! drawn uniformly over its levels; a parented one gets its linear value
//! discretised into levels by empirical quantiles so parent dependence
//! survives.
Dataset generate_data(const LinearSem& sem, int n, std::uint64_t seed);

//! Abduction-action-prediction: flips each row's sensitive value to
//! (a+1) mod arity, keeps all noise fixed and recomputes the descendants
//! of the sensitive node. Non-descendant columns are copied bit for bit.
CounterfactualPair generate_counterfactual(const LinearSem& sem, const Dataset& data);
CounterfactualPair generate_counterfactual(const NonlinearSem& sem, const Dataset& data);

//! Per-node random draw of transform chain, output distortion and noise
//! family; weights as in sample_sem.
NonlinearSem sample_nonlinear_sem(const PartiallyDirectedGraph& dag,
                                  std::string_view sensitive, std::string_view outcome,
                                  int arity, std::uint64_t seed);

Dataset generate_data(const NonlinearSem& sem, int n, std::uint64_t seed);

//! Convenience for the CLI: sample_nonlinear_sem + generate_data.
Dataset generate_nonlinear(const PartiallyDirectedGraph& dag, std::string_view sensitive,
                           std::string_view outcome, int arity, int n,
                           std::uint64_t seed);

}  // namespace causalfair
