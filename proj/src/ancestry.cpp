#include "causalfair/ancestry.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace causalfair {

namespace {

struct Triple {
  int alpha, phi, tau;
  int trace_id = -1;
  bool operator==(const Triple& o) const {
    return alpha == o.alpha && phi == o.phi && tau == o.tau;
  }
};

std::uint64_t key_of(const Triple& t, int n) {
  return (static_cast<std::uint64_t>(t.alpha) * n + t.phi) * n + t.tau;
}

}  // namespace

std::string to_string(AncestralRelation r) {
  switch (r) {
    case AncestralRelation::definite_descendant:
      return "definite-descendant";
    case AncestralRelation::possible_descendant:
      return "possible-descendant";
    case AncestralRelation::definite_non_descendant:
      return "definite-non-descendant";
  }
  return "?";
}

CriticalSet find_critical_set(const MaxOrientedGraph& graph, std::string_view s_name,
                              std::string_view t_name, SearchTrace* trace) {
  const PartiallyDirectedGraph& g = graph.graph;
  const int s = g.index_of(s_name);
  const int t = g.index_of(t_name);
  if (s == t)
    throw Error(ErrorKind::same_node,
                "source and target must differ: " + std::string(s_name));
  const int n = g.node_count();

  std::vector<bool> in_set(n, false);
  std::deque<Triple> queue;
  std::unordered_set<std::uint64_t> visited;   // H
  std::unordered_set<std::uint64_t> enqueued;  // membership mirror of the queue

  auto record = [&](const Triple& triple, int parent) -> int {
    if (!trace) return -1;
    trace->triples.push_back({triple.alpha, triple.phi, triple.tau, parent, false});
    return static_cast<int>(trace->triples.size()) - 1;
  };

  for (int alpha = 0; alpha < n; ++alpha) {
    auto m = g.mark(s, alpha);
    if (m == PartiallyDirectedGraph::Mark::undirected ||
        m == PartiallyDirectedGraph::Mark::arrow_out) {
      Triple seed{alpha, s, alpha};
      seed.trace_id = record(seed, -1);
      enqueued.insert(key_of(seed, n));
      queue.push_back(seed);
    }
  }

  std::size_t dequeued = 0;
  while (!queue.empty()) {
    Triple cur = queue.front();
    queue.pop_front();
    ++dequeued;
    enqueued.erase(key_of(cur, n));
    visited.insert(key_of(cur, n));

    if (cur.tau == t) {
      in_set[cur.alpha] = true;
      if (trace && cur.trace_id >= 0) trace->triples[cur.trace_id].reached_target = true;
      // alpha is confirmed: drop its pending work.
      for (auto it = queue.begin(); it != queue.end();) {
        if (it->alpha == cur.alpha) {
          enqueued.erase(key_of(*it, n));
          it = queue.erase(it);
        } else {
          ++it;
        }
      }
      continue;
    }

    for (int beta = 0; beta < n; ++beta) {
      auto step = g.mark(cur.tau, beta);
      const bool arrow = step == PartiallyDirectedGraph::Mark::arrow_out;
      const bool tie = step == PartiallyDirectedGraph::Mark::undirected;
      if (!arrow && !tie) continue;
      // Definite-status condition; when tau is the node right after S the
      // predecessor is S itself and the check below covers it.
      if (!(arrow || !g.adjacent(cur.phi, beta) || cur.phi == s)) continue;
      if (g.adjacent(beta, s)) continue;  // would be a chord ending in S
      Triple next{cur.alpha, cur.tau, beta};
      auto key = key_of(next, n);
      if (visited.count(key) || enqueued.count(key)) continue;
      next.trace_id = record(next, cur.trace_id);
      enqueued.insert(key);
      queue.push_back(next);
    }
  }

  CriticalSet out;
  out.dequeued = dequeued;
  for (int v = 0; v < n; ++v)
    if (in_set[v]) out.members.push_back(g.name_of(v));
  return out;
}

AncestralRelation classify_relation(const MaxOrientedGraph& graph, std::string_view s,
                                    std::string_view t) {
  CriticalSet critical = find_critical_set(graph, s, t);
  if (critical.members.empty()) return AncestralRelation::definite_non_descendant;

  const PartiallyDirectedGraph& g = graph.graph;
  const int s_idx = g.index_of(s);
  bool arrow_into_set = false;
  std::vector<int> members;
  members.reserve(critical.members.size());
  for (const auto& name : critical.members) {
    int v = g.index_of(name);
    members.push_back(v);
    arrow_into_set |= g.has_directed(s_idx, v);
  }
  if (arrow_into_set || !induces_complete_subgraph_idx(g, members))
    return AncestralRelation::definite_descendant;
  return AncestralRelation::possible_descendant;
}

RelationPartition classify_all(const MaxOrientedGraph& graph, std::string_view s) {
  const PartiallyDirectedGraph& g = graph.graph;
  const int s_idx = g.index_of(s);
  RelationPartition out;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v == s_idx) continue;
    switch (classify_relation(graph, s, g.name_of(v))) {
      case AncestralRelation::definite_descendant:
        out.definite_descendants.push_back(g.name_of(v));
        break;
      case AncestralRelation::possible_descendant:
        out.possible_descendants.push_back(g.name_of(v));
        break;
      case AncestralRelation::definite_non_descendant:
        out.definite_non_descendants.push_back(g.name_of(v));
        break;
    }
  }
  return out;
}

RelationPartition classify_root(const MaxOrientedGraph& graph, std::string_view a) {
  const PartiallyDirectedGraph& g = graph.graph;
  const int root = g.index_of(a);
  for (int v = 0; v < g.node_count(); ++v) {
    auto m = g.mark(root, v);
    if (m == PartiallyDirectedGraph::Mark::arrow_in ||
        m == PartiallyDirectedGraph::Mark::undirected)
      throw Error(ErrorKind::root_assumption_violated,
                  "node '" + std::string(a) + "' has an incoming or undirected edge (" +
                      g.name_of(v) + ")");
  }
  auto reachable = directed_descendants_idx(g, root);
  std::vector<bool> is_descendant(g.node_count(), false);
  for (int v : reachable) is_descendant[v] = true;

  RelationPartition out;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v == root) continue;
    if (is_descendant[v])
      out.definite_descendants.push_back(g.name_of(v));
    else
      out.definite_non_descendants.push_back(g.name_of(v));
  }
  return out;
}

}  // namespace causalfair
