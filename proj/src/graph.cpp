#include "causalfair/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace causalfair {

namespace {

bool valid_token(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::optional<int> PartiallyDirectedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int PartiallyDirectedGraph::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw Error(ErrorKind::unknown_node, "unknown node: " + std::string(name));
}

std::vector<int> PartiallyDirectedGraph::parents_of(int v) const {
  std::vector<int> out;
  for (int u = 0; u < node_count(); ++u)
    if (mark(v, u) == Mark::arrow_in) out.push_back(u);
  return out;
}

std::vector<int> PartiallyDirectedGraph::children_of(int v) const {
  std::vector<int> out;
  for (int u = 0; u < node_count(); ++u)
    if (mark(v, u) == Mark::arrow_out) out.push_back(u);
  return out;
}

std::vector<int> PartiallyDirectedGraph::siblings_of(int v) const {
  std::vector<int> out;
  for (int u = 0; u < node_count(); ++u)
    if (mark(v, u) == Mark::undirected) out.push_back(u);
  return out;
}

std::vector<int> PartiallyDirectedGraph::adjacents_of(int v) const {
  std::vector<int> out;
  for (int u = 0; u < node_count(); ++u)
    if (mark(v, u) != Mark::none) out.push_back(u);
  return out;
}

int GraphBuilder::ensure_node(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  if (!valid_token(name))
    throw Error(ErrorKind::invalid_token,
                "invalid node name '" + std::string(name) + "' (expected [A-Za-z0-9_]+)");
  int idx = static_cast<int>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), idx);
  return idx;
}

int GraphBuilder::add_node(std::string_view name) { return ensure_node(name); }

void GraphBuilder::check_new_pair(int a, int b, std::string_view a_name,
                                  std::string_view b_name) {
  if (a == b)
    throw Error(ErrorKind::self_loop, "self-loop on node '" + std::string(a_name) + "'");
  for (const auto& [t, h] : directed_)
    if ((t == a && h == b) || (t == b && h == a))
      throw Error(ErrorKind::duplicate_adjacency,
                  "duplicate adjacency between '" + std::string(a_name) + "' and '" +
                      std::string(b_name) + "'");
  for (const auto& [x, y] : undirected_)
    if ((x == a && y == b) || (x == b && y == a))
      throw Error(ErrorKind::duplicate_adjacency,
                  "duplicate adjacency between '" + std::string(a_name) + "' and '" +
                      std::string(b_name) + "'");
}

void GraphBuilder::add_directed(std::string_view tail, std::string_view head) {
  int t = ensure_node(tail);
  int h = ensure_node(head);
  check_new_pair(t, h, tail, head);
  directed_.emplace_back(t, h);
}

void GraphBuilder::add_undirected(std::string_view a, std::string_view b) {
  int x = ensure_node(a);
  int y = ensure_node(b);
  check_new_pair(x, y, a, b);
  undirected_.emplace_back(x, y);
}

PartiallyDirectedGraph GraphBuilder::build() {
  PartiallyDirectedGraph g;
  g.names_ = names_;
  g.index_ = index_;
  g.directed_ = directed_;
  g.undirected_ = undirected_;
  const std::size_t n = names_.size();
  g.marks_.assign(n * n, PartiallyDirectedGraph::Mark::none);
  auto at = [&](int i, int j) -> PartiallyDirectedGraph::Mark& {
    return g.marks_[static_cast<std::size_t>(i) * n + j];
  };
  for (const auto& [t, h] : directed_) {
    at(t, h) = PartiallyDirectedGraph::Mark::arrow_out;
    at(h, t) = PartiallyDirectedGraph::Mark::arrow_in;
  }
  for (const auto& [a, b] : undirected_) {
    at(a, b) = PartiallyDirectedGraph::Mark::undirected;
    at(b, a) = PartiallyDirectedGraph::Mark::undirected;
  }
  return g;
}

Neighborhood neighborhood(const PartiallyDirectedGraph& g, std::string_view v) {
  int idx = g.index_of(v);
  Neighborhood out;
  out.parents = names_of(g, g.parents_of(idx));
  out.children = names_of(g, g.children_of(idx));
  out.siblings = names_of(g, g.siblings_of(idx));
  out.adjacents = names_of(g, g.adjacents_of(idx));
  return out;
}

std::optional<std::vector<int>> dag_order(const PartiallyDirectedGraph& g) {
  if (!g.undirected_edges().empty()) return std::nullopt;
  const int n = g.node_count();
  std::vector<int> indegree(n, 0);
  for (const auto& [t, h] : g.directed_edges()) {
    (void)t;
    ++indegree[h];
  }
  // Kahn's algorithm; the ready set is scanned in index order so the
  // returned order is unique for a given graph.
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> emitted(n, false);
  for (int produced = 0; produced < n; ++produced) {
    int next = -1;
    for (int v = 0; v < n; ++v) {
      if (!emitted[v] && indegree[v] == 0) {
        next = v;
        break;
      }
    }
    if (next < 0) return std::nullopt;  // remaining nodes all sit on a cycle
    emitted[next] = true;
    order.push_back(next);
    for (int u : g.children_of(next)) --indegree[u];
  }
  return order;
}

std::optional<std::vector<std::string>> dag_order_names(const PartiallyDirectedGraph& g) {
  auto order = dag_order(g);
  if (!order) return std::nullopt;
  return names_of(g, *order);
}

bool induces_complete_subgraph_idx(const PartiallyDirectedGraph& g,
                                   std::span<const int> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!g.adjacent(nodes[i], nodes[j])) return false;
  return true;
}

bool induces_complete_subgraph(const PartiallyDirectedGraph& g,
                               std::span<const std::string> nodes) {
  std::vector<int> idx;
  idx.reserve(nodes.size());
  for (const auto& name : nodes) idx.push_back(g.index_of(name));
  return induces_complete_subgraph_idx(g, idx);
}

std::vector<int> directed_descendants_idx(const PartiallyDirectedGraph& g, int s) {
  std::vector<bool> seen(g.node_count(), false);
  seen[s] = true;
  std::deque<int> frontier{s};
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop_front();
    for (int c : g.children_of(v)) {
      if (!seen[c]) {
        seen[c] = true;
        frontier.push_back(c);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.node_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::vector<std::string> directed_descendants(const PartiallyDirectedGraph& g,
                                              std::string_view s) {
  return names_of(g, directed_descendants_idx(g, g.index_of(s)));
}

bool is_b_possibly_causal_idx(const PartiallyDirectedGraph& g, std::span<const int> path) {
  if (path.size() < 2)
    throw Error(ErrorKind::invalid_path, "path needs at least two vertices");
  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.node_count())
      throw Error(ErrorKind::invalid_path, "path vertex out of range");
    if (!seen.insert(path[i]).second)
      throw Error(ErrorKind::invalid_path,
                  "repeated vertex '" + g.name_of(path[i]) + "' on path");
    if (i + 1 < path.size() && !g.adjacent(path[i], path[i + 1]))
      throw Error(ErrorKind::invalid_path,
                  "consecutive path vertices '" + g.name_of(path[i]) + "' and '" +
                      g.name_of(path[i + 1]) + "' are not adjacent");
  }
  // Any edge later-vertex -> earlier-vertex disqualifies the path, chords
  // included, not just the edges along it.
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j)
      if (g.has_directed(path[j], path[i])) return false;
  return true;
}

bool is_b_possibly_causal(const PartiallyDirectedGraph& g,
                          std::span<const std::string> path) {
  std::vector<int> idx;
  idx.reserve(path.size());
  for (const auto& name : path) {
    auto v = g.find(name);
    if (!v)
      throw Error(ErrorKind::invalid_path, "path vertex '" + name + "' not in graph");
    idx.push_back(*v);
  }
  return is_b_possibly_causal_idx(g, idx);
}

std::vector<std::string> names_of(const PartiallyDirectedGraph& g, std::span<const int> idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int v : idx) out.push_back(g.name_of(v));
  return out;
}

}  // namespace causalfair
