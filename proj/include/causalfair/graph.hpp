#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "causalfair/errors.hpp"

namespace causalfair {

//! A graph mixing directed and undirected edges over named vertices.
//!
//! Vertices keep their insertion order and every set-valued query reports
//! its result in that order, so downstream output is reproducible.
//! Instances are immutable once built; orientation algorithms construct
//! new graphs instead of mutating. All const queries are safe to call
//! concurrently.
class PartiallyDirectedGraph {
 public:
  enum class Mark : unsigned char { none, arrow_out, arrow_in, undirected };

  PartiallyDirectedGraph() = default;

  int node_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& node_names() const { return names_; }
  const std::string& name_of(int v) const { return names_[v]; }

  //! Index of a named vertex, or nullopt when absent.
  std::optional<int> find(std::string_view name) const;
  //! Index of a named vertex; throws ErrorKind::unknown_node when absent.
  int index_of(std::string_view name) const;

  //! Relation of vertex j as seen from vertex i.
  Mark mark(int i, int j) const { return marks_[static_cast<std::size_t>(i) * names_.size() + j]; }
  bool has_directed(int tail, int head) const { return mark(tail, head) == Mark::arrow_out; }
  bool has_undirected(int a, int b) const { return mark(a, b) == Mark::undirected; }
  bool adjacent(int a, int b) const { return mark(a, b) != Mark::none; }

  // Index-order neighbour queries (ascending vertex index).
  std::vector<int> parents_of(int v) const;
  std::vector<int> children_of(int v) const;
  std::vector<int> siblings_of(int v) const;
  std::vector<int> adjacents_of(int v) const;

  //! Directed edges as (tail, head), in insertion order.
  const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }
  //! Undirected edges as first-seen (a, b) pairs, in insertion order.
  const std::vector<std::pair<int, int>>& undirected_edges() const { return undirected_; }

  int edge_count() const { return static_cast<int>(directed_.size() + undirected_.size()); }

  //! Equal vertex list (same order) and equal edge sets.
  bool operator==(const PartiallyDirectedGraph& other) const {
    return names_ == other.names_ && marks_ == other.marks_;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Mark> marks_;  // row-major node_count x node_count
  std::vector<std::pair<int, int>> directed_;
  std::vector<std::pair<int, int>> undirected_;
};

//! Accumulates vertices and edges, validates them, and freezes the result.
class GraphBuilder {
 public:
  //! Registers a vertex (idempotent). Names are tokens over [A-Za-z0-9_].
  int add_node(std::string_view name);
  void add_directed(std::string_view tail, std::string_view head);
  void add_undirected(std::string_view a, std::string_view b);

  PartiallyDirectedGraph build();

 private:
  int ensure_node(std::string_view name);
  void check_new_pair(int a, int b, std::string_view a_name, std::string_view b_name);

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> directed_;
  std::vector<std::pair<int, int>> undirected_;
};

struct Neighborhood {
  std::vector<std::string> parents;
  std::vector<std::string> children;
  std::vector<std::string> siblings;
  std::vector<std::string> adjacents;
};

//! Parents, children, siblings and adjacents of a vertex. The first three
//! partition the fourth.
Neighborhood neighborhood(const PartiallyDirectedGraph& g, std::string_view v);

//! Topological order when the graph is a DAG (no undirected edges, no
//! directed cycle); nullopt otherwise. Ties broken by vertex insertion
//! order, so the result is deterministic.
std::optional<std::vector<int>> dag_order(const PartiallyDirectedGraph& g);
std::optional<std::vector<std::string>> dag_order_names(const PartiallyDirectedGraph& g);

//! True iff every distinct pair in `nodes` is adjacent; vacuously true
//! for zero or one node.
bool induces_complete_subgraph(const PartiallyDirectedGraph& g,
                               std::span<const std::string> nodes);
bool induces_complete_subgraph_idx(const PartiallyDirectedGraph& g,
                                   std::span<const int> nodes);

//! Vertices reachable from s via directed edges only, s included.
std::vector<int> directed_descendants_idx(const PartiallyDirectedGraph& g, int s);
std::vector<std::string> directed_descendants(const PartiallyDirectedGraph& g,
                                              std::string_view s);

//! Checks Definition-style possible causality with background edges: the
//! path is rejected as soon as any later path vertex has a directed edge
//! back to an earlier one, whether or not that edge lies on the path.
//! The input must be a valid path: >= 2 distinct vertices, consecutive
//! pairs adjacent.
bool is_b_possibly_causal(const PartiallyDirectedGraph& g,
                          std::span<const std::string> path);
bool is_b_possibly_causal_idx(const PartiallyDirectedGraph& g, std::span<const int> path);

//! Maps indices to names preserving order.
std::vector<std::string> names_of(const PartiallyDirectedGraph& g, std::span<const int> idx);

}  // namespace causalfair
