#include "causalfair/scm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "causalfair/seeds.hpp"

namespace causalfair {

namespace {

constexpr double kNoiseSigma = 1.2247448713915890;  // sqrt(1.5)

double apply_f(NonlinearSem::F f, double x) {
  switch (f) {
    case NonlinearSem::F::linear:
      return x;
    case NonlinearSem::F::sine:
      return std::sin(x);
    case NonlinearSem::F::cosine:
      return std::cos(x);
    case NonlinearSem::F::tanh:
      return std::tanh(x);
    case NonlinearSem::F::sigmoid:
      return 1.0 / (1.0 + std::exp(-x));
  }
  return x;
}

double apply_g(NonlinearSem::G g, double x) {
  switch (g) {
    case NonlinearSem::G::linear:
      return x;
    case NonlinearSem::G::absolute:
      return std::abs(x);
    case NonlinearSem::G::reciprocal:
      // Guarded away from the pole at zero.
      return 1.0 / (x + std::copysign(0.1, x));
  }
  return x;
}

//! Weighted parent sum plus retained noise, then the node's transforms.
//! Both simulation and counterfactual replay go through here so replayed
//! values are bit-identical.
void compute_column(const LinearSem& sem, const NonlinearSem* nonlinear,
                    Eigen::MatrixXd& values, const Eigen::MatrixXd& noise,
                    const std::vector<int>& col_of, int node) {
  const int col = col_of[node];
  values.col(col) = noise.col(col);
  for (int parent : sem.dag.parents_of(node))
    values.col(col) += sem.weight(parent, node) * values.col(col_of[parent]);
  if (nonlinear) {
    auto column = values.col(col);
    for (Eigen::Index r = 0; r < column.size(); ++r) {
      double x = column(r);
      for (auto f : nonlinear->f_chain[node]) x = apply_f(f, x);
      column(r) = apply_g(nonlinear->g_out[node], x);
    }
  }
}

//! Discretises a column into `arity` levels at its empirical quantiles.
void quantile_discretise(Eigen::Ref<Eigen::VectorXd> column, int arity) {
  const Eigen::Index n = column.size();
  std::vector<double> sorted(column.data(), column.data() + n);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> thresholds;
  for (int level = 1; level < arity; ++level)
    thresholds.push_back(sorted[static_cast<std::size_t>(
        std::min<Eigen::Index>(n - 1, level * n / arity))]);
  for (Eigen::Index r = 0; r < n; ++r) {
    int level = 0;
    for (double t : thresholds)
      if (column(r) >= t) ++level;
    column(r) = static_cast<double>(level);
  }
}

struct GenerationPlan {
  std::vector<int> topo;    // node indices in generation order
  std::vector<int> col_of;  // node index -> dataset column
};

GenerationPlan plan_for(const LinearSem& sem) {
  auto order = dag_order(sem.dag);
  if (!order)
    throw Error(ErrorKind::not_a_dag, "structural model graph must be a DAG");
  GenerationPlan plan;
  plan.topo = *order;
  plan.col_of.assign(sem.dag.node_count(), -1);
  for (std::size_t c = 0; c < plan.topo.size(); ++c)
    plan.col_of[plan.topo[c]] = static_cast<int>(c);
  return plan;
}

Dataset simulate(const LinearSem& sem, const NonlinearSem* nonlinear, int n,
                 std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::bad_config, "sample size must be at least 1");
  const auto plan = plan_for(sem);
  const int d = sem.dag.node_count();

  std::mt19937_64 rng(seed);
  Eigen::MatrixXd noise(n, d);
  for (int c = 0; c < d; ++c) {
    const int node = plan.topo[c];
    if (nonlinear) {
      switch (nonlinear->noise_kind[node]) {
        case NonlinearSem::Noise::gaussian: {
          std::normal_distribution<double> dist(0.0, sem.noise_scale[node]);
          for (int r = 0; r < n; ++r) noise(r, c) = dist(rng);
          break;
        }
        case NonlinearSem::Noise::exponential: {
          std::exponential_distribution<double> dist(1.0);
          for (int r = 0; r < n; ++r) noise(r, c) = dist(rng);
          break;
        }
        case NonlinearSem::Noise::gumbel: {
          std::extreme_value_distribution<double> dist(0.0, 1.0);
          for (int r = 0; r < n; ++r) noise(r, c) = dist(rng);
          break;
        }
      }
    } else {
      std::normal_distribution<double> dist(0.0, sem.noise_scale[node]);
      for (int r = 0; r < n; ++r) noise(r, c) = dist(rng);
    }
  }

  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(n, d);
  for (int node : plan.topo) {
    if (node == sem.sensitive) {
      if (sem.dag.parents_of(node).empty()) {
        // Exogenous discrete draw; the level doubles as the node's noise.
        std::uniform_int_distribution<int> dist(0, sem.arity - 1);
        for (int r = 0; r < n; ++r) {
          double level = static_cast<double>(dist(rng));
          values(r, plan.col_of[node]) = level;
          noise(r, plan.col_of[node]) = level;
        }
      } else {
        compute_column(sem, nonlinear, values, noise, plan.col_of, node);
        quantile_discretise(values.col(plan.col_of[node]), sem.arity);
      }
    } else {
      compute_column(sem, nonlinear, values, noise, plan.col_of, node);
    }
  }

  Dataset out;
  out.columns = names_of(sem.dag, plan.topo);
  out.values = std::move(values);
  out.noise = std::move(noise);
  out.seed = seed;
  return out;
}

CounterfactualPair counterfactual_impl(const LinearSem& sem, const NonlinearSem* nonlinear,
                                       const Dataset& data) {
  if (!data.noise)
    throw Error(ErrorKind::no_noise_retained,
                "dataset carries no noise matrix; counterfactuals need it");
  const auto plan = plan_for(sem);
  const int n = data.rows();
  const int s_col = plan.col_of[sem.sensitive];

  CounterfactualPair pair;
  pair.factual = data;
  pair.counterfactual = data;
  pair.intervention.reserve(n);

  for (int r = 0; r < n; ++r) {
    int a = static_cast<int>(data.values(r, s_col));
    int flipped = (a + 1) % sem.arity;
    pair.intervention.emplace_back(a, flipped);
    pair.counterfactual.values(r, s_col) = static_cast<double>(flipped);
  }

  auto descendants = directed_descendants_idx(sem.dag, sem.sensitive);
  std::vector<bool> is_descendant(sem.dag.node_count(), false);
  for (int v : descendants) is_descendant[v] = true;

  for (int node : plan.topo) {
    if (node == sem.sensitive || !is_descendant[node]) continue;
    compute_column(sem, nonlinear, pair.counterfactual.values, *data.noise, plan.col_of,
                   node);
  }
  return pair;
}

int pick_position(std::mt19937_64& rng, int upper) {
  std::uniform_int_distribution<int> dist(0, upper - 1);
  return dist(rng);
}

}  // namespace

PartiallyDirectedGraph random_er_dag(int node_count, int edge_count, std::uint64_t seed) {
  if (node_count < 1) throw Error(ErrorKind::bad_config, "need at least one node");
  const long long max_edges =
      static_cast<long long>(node_count) * (node_count - 1) / 2;
  if (edge_count < 0 || edge_count > max_edges)
    throw Error(ErrorKind::too_many_edges,
                "cannot place " + std::to_string(edge_count) + " edges on " +
                    std::to_string(node_count) + " nodes");

  std::mt19937_64 rng(seed);
  std::vector<int> position(node_count);
  {
    std::vector<int> perm(node_count);
    for (int i = 0; i < node_count; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int rank = 0; rank < node_count; ++rank) position[perm[rank]] = rank;
  }

  std::set<std::pair<int, int>> chosen;
  std::vector<std::pair<int, int>> edges;
  while (static_cast<int>(edges.size()) < edge_count) {
    int a = pick_position(rng, node_count);
    int b = pick_position(rng, node_count);
    if (a == b) continue;
    auto pair = std::minmax(a, b);
    if (!chosen.insert({pair.first, pair.second}).second) continue;
    if (position[pair.first] < position[pair.second])
      edges.emplace_back(pair.first, pair.second);
    else
      edges.emplace_back(pair.second, pair.first);
  }

  GraphBuilder builder;
  for (int i = 0; i < node_count; ++i) builder.add_node("X" + std::to_string(i + 1));
  for (const auto& [t, h] : edges)
    builder.add_directed("X" + std::to_string(t + 1), "X" + std::to_string(h + 1));
  return builder.build();
}

double LinearSem::weight(int tail, int head) const {
  const auto& edges = dag.directed_edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == tail && edges[i].second == head) return weights[i];
  throw Error(ErrorKind::unknown_node, "no directed edge " + dag.name_of(tail) + " -> " +
                                            dag.name_of(head));
}

int Dataset::column_of(std::string_view name) const {
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (columns[c] == name) return static_cast<int>(c);
  throw Error(ErrorKind::schema_mismatch,
              "dataset has no column '" + std::string(name) + "'");
}

LinearSem sample_sem(const PartiallyDirectedGraph& dag, std::string_view sensitive,
                     std::string_view outcome, int arity, std::uint64_t seed) {
  if (!dag_order(dag))
    throw Error(ErrorKind::not_a_dag, "structural model graph must be a DAG");
  if (arity < 2) throw Error(ErrorKind::bad_config, "sensitive arity must be >= 2");
  LinearSem sem;
  sem.dag = dag;
  sem.sensitive = dag.index_of(sensitive);
  sem.outcome = dag.index_of(outcome);
  if (sem.sensitive == sem.outcome)
    throw Error(ErrorKind::same_node, "sensitive and outcome must differ");
  sem.arity = arity;
  sem.noise_scale.assign(dag.node_count(), kNoiseSigma);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> magnitude(0.5, 2.0);
  std::bernoulli_distribution negative(0.5);
  sem.weights.reserve(dag.directed_edges().size());
  for (std::size_t i = 0; i < dag.directed_edges().size(); ++i) {
    double w = magnitude(rng);
    sem.weights.push_back(negative(rng) ? -w : w);
  }
  return sem;
}

Dataset generate_data(const LinearSem& sem, int n, std::uint64_t seed) {
  return simulate(sem, nullptr, n, seed);
}

CounterfactualPair generate_counterfactual(const LinearSem& sem, const Dataset& data) {
  return counterfactual_impl(sem, nullptr, data);
}

CounterfactualPair generate_counterfactual(const NonlinearSem& sem, const Dataset& data) {
  return counterfactual_impl(sem.base, &sem, data);
}

NonlinearSem sample_nonlinear_sem(const PartiallyDirectedGraph& dag,
                                  std::string_view sensitive, std::string_view outcome,
                                  int arity, std::uint64_t seed) {
  NonlinearSem sem;
  sem.base = sample_sem(dag, sensitive, outcome, arity, seed);

  std::mt19937_64 rng(derive_seed(seed, 0));
  std::uniform_int_distribution<int> f_pick(0, 4);
  std::uniform_int_distribution<int> chain_len(1, 2);
  std::uniform_int_distribution<int> g_pick(0, 2);
  std::uniform_int_distribution<int> noise_pick(0, 2);
  const int d = dag.node_count();
  sem.f_chain.resize(d);
  sem.g_out.resize(d);
  sem.noise_kind.resize(d);
  for (int v = 0; v < d; ++v) {
    int len = chain_len(rng);
    for (int i = 0; i < len; ++i)
      sem.f_chain[v].push_back(static_cast<NonlinearSem::F>(f_pick(rng)));
    sem.g_out[v] = static_cast<NonlinearSem::G>(g_pick(rng));
    sem.noise_kind[v] = static_cast<NonlinearSem::Noise>(noise_pick(rng));
  }
  return sem;
}

Dataset generate_data(const NonlinearSem& sem, int n, std::uint64_t seed) {
  return simulate(sem.base, &sem, n, seed);
}

Dataset generate_nonlinear(const PartiallyDirectedGraph& dag, std::string_view sensitive,
                           std::string_view outcome, int arity, int n,
                           std::uint64_t seed) {
  NonlinearSem sem = sample_nonlinear_sem(dag, sensitive, outcome, arity, seed);
  return generate_data(sem, n, seed);
}

}  // namespace causalfair
