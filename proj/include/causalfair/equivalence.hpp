#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalfair/graph.hpp"

namespace causalfair {

//! Direct-cause statements S -> T applied on top of a CPDAG.
struct BackgroundKnowledge {
  std::vector<std::pair<std::string, std::string>> edges;  // (tail, head), list order matters

  //! Rejects duplicates and self-loops.
  static BackgroundKnowledge from_edges(
      std::vector<std::pair<std::string, std::string>> edges);

  bool empty() const { return edges.empty(); }
};

enum class GraphRole { cpdag, mpdag };

//! A partially directed graph closed under the orientation rules, tagged
//! with how it was obtained. When provenance is present the graph equals
//! construct_mpdag(provenance.base_cpdag, provenance.background).
struct MaxOrientedGraph {
  PartiallyDirectedGraph graph;
  GraphRole role = GraphRole::cpdag;

  struct Provenance {
    PartiallyDirectedGraph base_cpdag;
    BackgroundKnowledge background;
  };
  std::optional<Provenance> provenance;
};

//! Repeatedly applies orientation rules R1-R4 until none fires. The result
//! keeps the input skeleton and a superset of its directed edges. Throws
//! ErrorKind::inconsistent_orientation when the directed part of the input
//! already contains a cycle (contradictory input).
PartiallyDirectedGraph meek_closure(const PartiallyDirectedGraph& g);

//! True when meek_closure leaves the graph unchanged.
bool is_meek_closed(const PartiallyDirectedGraph& g);

//! Unique equivalence-class representative of a DAG: shared skeleton,
//! v-structure edges, and every orientation those force.
MaxOrientedGraph dag_to_cpdag(const PartiallyDirectedGraph& dag);

//! Orients each background edge in list order and re-closes after each.
//! Throws ErrorKind::construct_fail when an edge contradicts the current
//! orientation or joins non-adjacent vertices.
MaxOrientedGraph construct_mpdag(const MaxOrientedGraph& base,
                                 const BackgroundKnowledge& bk);

//! All DAGs of the equivalence class: orientations of the undirected edges
//! that stay acyclic and introduce no v-structure absent from g. When g
//! carries provenance every member is additionally verified by recomputing
//! its CPDAG and checking the background edges. Members are returned sorted
//! by their canonical edge-list encoding. Throws ErrorKind::too_large above
//! 20 undirected edges.
std::vector<PartiallyDirectedGraph> enumerate_equivalent_dags(const MaxOrientedGraph& g);

//! Wraps a graph that is expected to already be maximally oriented; throws
//! ErrorKind::inconsistent_orientation when it is not Meek-closed.
MaxOrientedGraph as_max_oriented(PartiallyDirectedGraph g, GraphRole role);

}  // namespace causalfair
