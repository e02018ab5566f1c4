#include "causalfair/equivalence.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace causalfair {

namespace {

using Mark = PartiallyDirectedGraph::Mark;

//! Mutable orientation state over a fixed skeleton. Directed edges only
//! ever grow; undirected edges only ever get oriented.
class Orienter {
 public:
  explicit Orienter(const PartiallyDirectedGraph& g) : base_(&g), n_(g.node_count()) {
    marks_.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) marks_[idx(i, j)] = g.mark(i, j);
  }

  int n() const { return n_; }
  Mark mark(int i, int j) const { return marks_[idx(i, j)]; }
  bool directed(int t, int h) const { return mark(t, h) == Mark::arrow_out; }
  bool undirected(int a, int b) const { return mark(a, b) == Mark::undirected; }
  bool adjacent(int a, int b) const { return mark(a, b) != Mark::none; }

  //! Turns a -- b into a -> b. Returns false when already oriented that
  //! way; throws when the opposite orientation is present.
  bool orient(int tail, int head) {
    Mark m = mark(tail, head);
    if (m == Mark::arrow_out) return false;
    if (m == Mark::arrow_in)
      throw Error(ErrorKind::inconsistent_orientation,
                  "cannot orient " + base_->name_of(tail) + " -> " + base_->name_of(head) +
                      ": the reverse edge is already directed");
    if (m == Mark::none)
      throw Error(ErrorKind::inconsistent_orientation,
                  "cannot orient non-adjacent pair " + base_->name_of(tail) + ", " +
                      base_->name_of(head));
    marks_[idx(tail, head)] = Mark::arrow_out;
    marks_[idx(head, tail)] = Mark::arrow_in;
    return true;
  }

  bool directed_part_acyclic() const {
    std::vector<int> indegree(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (directed(i, j)) ++indegree[j];
    std::vector<int> ready;
    for (int v = 0; v < n_; ++v)
      if (indegree[v] == 0) ready.push_back(v);
    int emitted = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++emitted;
      for (int u = 0; u < n_; ++u)
        if (directed(v, u) && --indegree[u] == 0) ready.push_back(u);
    }
    return emitted == n_;
  }

  //! Applies R1-R4 until a full scan changes nothing.
  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      // R1: a -> b, b -- c, a and c non-adjacent  =>  b -> c
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          if (!directed(a, b)) continue;
          for (int c = 0; c < n_; ++c)
            if (undirected(b, c) && c != a && !adjacent(a, c)) changed |= orient(b, c);
        }
      // R2: a -> c -> b, a -- b  =>  a -> b
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          if (!undirected(a, b)) continue;
          for (int c = 0; c < n_; ++c)
            if (directed(a, c) && directed(c, b)) {
              changed |= orient(a, b);
              break;
            }
        }
      // R3: a -- b, a -- c, a -- d, c -> b, d -> b, c and d non-adjacent  =>  a -> b
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          if (!undirected(a, b)) continue;
          bool fired = false;
          for (int c = 0; c < n_ && !fired; ++c) {
            if (!(undirected(a, c) && directed(c, b))) continue;
            for (int d = c + 1; d < n_ && !fired; ++d)
              if (undirected(a, d) && directed(d, b) && !adjacent(c, d)) {
                changed |= orient(a, b);
                fired = true;
              }
          }
        }
      // R4: a -- b, a -- c, c -> d, d -> b, c and b non-adjacent  =>  a -> b
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          if (!undirected(a, b)) continue;
          bool fired = false;
          for (int c = 0; c < n_ && !fired; ++c) {
            if (!(undirected(a, c) && !adjacent(c, b))) continue;
            for (int d = 0; d < n_ && !fired; ++d)
              if (directed(c, d) && directed(d, b)) {
                changed |= orient(a, b);
                fired = true;
              }
          }
        }
    }
  }

  //! Freezes the current orientation. Pre-existing directed edges keep
  //! their insertion order, newly oriented ones follow in the order the
  //! undirected list had them, so output is deterministic.
  PartiallyDirectedGraph freeze() const {
    GraphBuilder builder;
    for (const auto& name : base_->node_names()) builder.add_node(name);
    for (const auto& [t, h] : base_->directed_edges())
      builder.add_directed(base_->name_of(t), base_->name_of(h));
    for (const auto& [a, b] : base_->undirected_edges()) {
      if (undirected(a, b))
        builder.add_undirected(base_->name_of(a), base_->name_of(b));
      else if (directed(a, b))
        builder.add_directed(base_->name_of(a), base_->name_of(b));
      else
        builder.add_directed(base_->name_of(b), base_->name_of(a));
    }
    return builder.build();
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  const PartiallyDirectedGraph* base_;
  int n_;
  std::vector<Mark> marks_;
};

std::vector<std::pair<int, int>> canonical_edges(const PartiallyDirectedGraph& g) {
  auto edges = g.directed_edges();
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

BackgroundKnowledge BackgroundKnowledge::from_edges(
    std::vector<std::pair<std::string, std::string>> edges) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : edges) {
    if (e.first == e.second)
      throw Error(ErrorKind::self_loop, "background edge is a self-loop: " + e.first);
    if (!seen.insert(e).second)
      throw Error(ErrorKind::duplicate_adjacency,
                  "duplicate background edge: " + e.first + " -> " + e.second);
  }
  BackgroundKnowledge bk;
  bk.edges = std::move(edges);
  return bk;
}

PartiallyDirectedGraph meek_closure(const PartiallyDirectedGraph& g) {
  Orienter state(g);
  if (!state.directed_part_acyclic())
    throw Error(ErrorKind::inconsistent_orientation,
                "directed edges already contain a cycle");
  state.close();
  return state.freeze();
}

bool is_meek_closed(const PartiallyDirectedGraph& g) { return meek_closure(g) == g; }

MaxOrientedGraph dag_to_cpdag(const PartiallyDirectedGraph& dag) {
  if (!dag_order(dag))
    throw Error(ErrorKind::not_a_dag,
                "input must be a DAG (fully directed and acyclic)");
  // Pattern = skeleton plus v-structure edges, then closure.
  const int n = dag.node_count();
  std::vector<std::vector<bool>> keep(n, std::vector<bool>(n, false));
  for (int z = 0; z < n; ++z) {
    auto parents = dag.parents_of(z);
    for (std::size_t i = 0; i < parents.size(); ++i)
      for (std::size_t j = i + 1; j < parents.size(); ++j)
        if (!dag.adjacent(parents[i], parents[j])) {
          keep[parents[i]][z] = true;
          keep[parents[j]][z] = true;
        }
  }
  GraphBuilder builder;
  for (const auto& name : dag.node_names()) builder.add_node(name);
  for (const auto& [t, h] : dag.directed_edges()) {
    if (keep[t][h])
      builder.add_directed(dag.name_of(t), dag.name_of(h));
    else
      builder.add_undirected(dag.name_of(t), dag.name_of(h));
  }
  MaxOrientedGraph out;
  out.graph = meek_closure(builder.build());
  out.role = GraphRole::cpdag;
  return out;
}

MaxOrientedGraph construct_mpdag(const MaxOrientedGraph& base,
                                 const BackgroundKnowledge& bk) {
  Orienter state(base.graph);
  for (const auto& [tail, head] : bk.edges) {
    int t = base.graph.index_of(tail);
    int h = base.graph.index_of(head);
    if (state.undirected(t, h) || state.directed(t, h)) {
      state.orient(t, h);
      state.close();
    } else {
      throw Error(ErrorKind::construct_fail,
                  "background edge " + tail + " -> " + head +
                      (state.directed(h, t) ? " contradicts the current orientation"
                                            : " joins non-adjacent vertices"));
    }
  }
  MaxOrientedGraph out;
  out.graph = state.freeze();
  out.role = GraphRole::mpdag;
  // Provenance always points at the underlying CPDAG so that enumeration
  // can re-derive it; stacking onto an MPDAG concatenates the knowledge.
  if (base.role == GraphRole::cpdag) {
    out.provenance = MaxOrientedGraph::Provenance{base.graph, bk};
  } else if (base.provenance) {
    auto merged = base.provenance->background.edges;
    merged.insert(merged.end(), bk.edges.begin(), bk.edges.end());
    out.provenance = MaxOrientedGraph::Provenance{
        base.provenance->base_cpdag, BackgroundKnowledge{std::move(merged)}};
  }
  return out;
}

std::vector<PartiallyDirectedGraph> enumerate_equivalent_dags(const MaxOrientedGraph& g) {
  const auto& undirected = g.graph.undirected_edges();
  const std::size_t k = undirected.size();
  if (k > 20)
    throw Error(ErrorKind::too_large,
                "refusing to enumerate " + std::to_string(k) +
                    " undirected edges (limit 20)");
  const int n = g.graph.node_count();

  std::vector<std::pair<std::vector<std::pair<int, int>>, PartiallyDirectedGraph>> members;
  std::vector<std::vector<bool>> dir(n, std::vector<bool>(n, false));

  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dir[i][j] = g.graph.has_directed(i, j);
    for (std::size_t e = 0; e < k; ++e) {
      auto [a, b] = undirected[e];
      if (mask & (1u << e))
        dir[a][b] = true;
      else
        dir[b][a] = true;
    }

    // Acyclicity.
    std::vector<int> indegree(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dir[i][j]) ++indegree[j];
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
      if (indegree[v] == 0) ready.push_back(v);
    int emitted = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++emitted;
      for (int u = 0; u < n; ++u)
        if (dir[v][u] && --indegree[u] == 0) ready.push_back(u);
    }
    if (emitted != n) continue;

    // No v-structure beyond those already present in g.
    bool ok = true;
    for (int z = 0; z < n && ok; ++z)
      for (int x = 0; x < n && ok; ++x) {
        if (!dir[x][z]) continue;
        for (int y = x + 1; y < n && ok; ++y)
          if (dir[y][z] && !g.graph.adjacent(x, y) &&
              !(g.graph.has_directed(x, z) && g.graph.has_directed(y, z)))
            ok = false;
      }
    if (!ok) continue;

    GraphBuilder builder;
    for (const auto& name : g.graph.node_names()) builder.add_node(name);
    for (const auto& [t, h] : g.graph.directed_edges())
      builder.add_directed(g.graph.name_of(t), g.graph.name_of(h));
    for (const auto& [a, b] : undirected) {
      if (dir[a][b])
        builder.add_directed(g.graph.name_of(a), g.graph.name_of(b));
      else
        builder.add_directed(g.graph.name_of(b), g.graph.name_of(a));
    }
    PartiallyDirectedGraph dag = builder.build();

    if (g.provenance) {
      bool consistent = dag_to_cpdag(dag).graph == g.provenance->base_cpdag;
      for (const auto& [tail, head] : g.provenance->background.edges) {
        if (!consistent) break;
        consistent = dag.has_directed(dag.index_of(tail), dag.index_of(head));
      }
      if (!consistent) continue;
    }

    members.emplace_back(canonical_edges(dag), std::move(dag));
  }

  std::sort(members.begin(), members.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  std::vector<PartiallyDirectedGraph> out;
  out.reserve(members.size());
  for (auto& m : members) out.push_back(std::move(m.second));
  if (out.empty())
    throw Error(ErrorKind::inconsistent_orientation,
                "graph admits no consistent extension; not a valid MPDAG");
  return out;
}

MaxOrientedGraph as_max_oriented(PartiallyDirectedGraph g, GraphRole role) {
  if (!is_meek_closed(g))
    throw Error(ErrorKind::inconsistent_orientation,
                "graph is not closed under the orientation rules");
  MaxOrientedGraph out;
  out.graph = std::move(g);
  out.role = role;
  return out;
}

}  // namespace causalfair
