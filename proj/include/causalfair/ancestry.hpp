#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "causalfair/equivalence.hpp"

namespace causalfair {

enum class AncestralRelation {
  definite_descendant,
  possible_descendant,
  definite_non_descendant,
};

std::string to_string(AncestralRelation r);

//! Neighbours of the source that lie on at least one chordless possibly
//! causal path to the target. `dequeued` counts the search triples taken
//! off the queue; it never exceeds (|sib(S)|+|ch(S)|) * |E|.
struct CriticalSet {
  std::vector<std::string> members;  // vertex insertion order
  std::size_t dequeued = 0;
};

//! Optional record of the breadth-first search, for diagnostics and tests.
//! Triple i extends triple `parent` (or starts at the source when -1).
struct SearchTrace {
  struct Triple {
    int alpha, phi, tau;
    int parent;
    bool reached_target;
  };
  std::vector<Triple> triples;
};

//! Breadth-first search over triples (alpha, phi, tau): alpha is the node
//! right after S on a candidate path, phi the predecessor of the frontier
//! node tau. A triple extends to beta when the step keeps the path possibly
//! causal and of definite status (tau -> beta, or phi non-adjacent to beta,
//! or tau is the node right after S) and beta is not adjacent to S (no
//! chord ending in S). Confirming alpha prunes its pending triples.
CriticalSet find_critical_set(const MaxOrientedGraph& g, std::string_view s,
                              std::string_view t, SearchTrace* trace = nullptr);

//! Classifies T against S: an empty critical set means no possibly causal
//! path at all; otherwise T is a definite descendant exactly when S has an
//! arrow into the critical set or the set induces an incomplete subgraph.
AncestralRelation classify_relation(const MaxOrientedGraph& g, std::string_view s,
                                    std::string_view t);

//! Relations of every other vertex to the source, split by kind. Each list
//! is in vertex insertion order and the three lists partition V \ {s}.
struct RelationPartition {
  std::vector<std::string> definite_descendants;
  std::vector<std::string> possible_descendants;
  std::vector<std::string> definite_non_descendants;
};

RelationPartition classify_all(const MaxOrientedGraph& g, std::string_view s);

//! Fast path when every edge at `a` points away from it: relations are
//! fully identified, so the partition never contains possible descendants.
//! Throws ErrorKind::root_assumption_violated otherwise.
RelationPartition classify_root(const MaxOrientedGraph& g, std::string_view a);

}  // namespace causalfair
