#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "fbranch/decomp.hpp"
#include "fbranch/errors.hpp"

namespace fbranch {

std::vector<std::vector<std::pair<NodeId, std::size_t>>> Tree::adjacency() const {
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(node_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  return adj;
}

std::vector<std::size_t> Tree::degrees() const {
  std::vector<std::size_t> d(node_count, 0);
  for (auto [u, v] : edges) ++d[u], ++d[v];
  return d;
}

bool Tree::is_tree() const {
  if (node_count == 0) return edges.empty();
  if (edges.size() != node_count - 1) return false;
  std::vector<NodeId> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<NodeId(NodeId)> find = [&](NodeId x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count || u == v) return false;
    NodeId a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::optional<Vertex> BranchDecomposition::vertex_at(NodeId node) const {
  auto it = std::lower_bound(leaves.begin(), leaves.end(), std::pair<NodeId, Vertex>{node, 0});
  if (it != leaves.end() && it->first == node) return it->second;
  return std::nullopt;
}

std::optional<NodeId> BranchDecomposition::node_of(Vertex v) const {
  for (auto [node, vert] : leaves)
    if (vert == v) return node;
  return std::nullopt;
}

std::size_t BranchDecomposition::vertex_universe() const {
  std::size_t u = 0;
  for (auto [node, v] : leaves) u = std::max<std::size_t>(u, v + 1);
  return u;
}

void validate_decomposition(const BranchDecomposition& bd, const Graph& g) {
  const auto& t = bd.tree;
  for (auto [u, v] : t.edges)
    if (u >= t.node_count || v >= t.node_count)
      throw DecompositionError(DecompositionErrorKind::NotATree, "edge endpoint outside node range");
  if (!t.is_tree()) throw DecompositionError(DecompositionErrorKind::NotATree, "decomposition is not a tree");
  auto deg = t.degrees();
  for (NodeId x = 0; x < t.node_count; ++x)
    if (deg[x] > 3)
      throw DecompositionError(DecompositionErrorKind::DegreeTooHigh, "node " + std::to_string(x) + " has degree " +
                                                                          std::to_string(deg[x]));
  if (!std::is_sorted(bd.leaves.begin(), bd.leaves.end()))
    throw DecompositionError(DecompositionErrorKind::LeafMapNotBijective, "leaf map not sorted by node");
  std::vector<int> vertex_hits(g.order(), 0);
  std::vector<bool> mapped(t.node_count, false);
  for (auto [node, v] : bd.leaves) {
    if (node >= t.node_count || v >= g.order())
      throw DecompositionError(DecompositionErrorKind::LeafMapNotBijective, "leaf map entry out of range");
    if (mapped[node]) throw DecompositionError(DecompositionErrorKind::LeafMapNotBijective, "node mapped twice");
    mapped[node] = true;
    ++vertex_hits[v];
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (vertex_hits[v] != 1)
      throw DecompositionError(DecompositionErrorKind::LeafMapNotBijective,
                               "vertex " + std::to_string(v) + " mapped " + std::to_string(vertex_hits[v]) + " times");
  for (NodeId x = 0; x < t.node_count; ++x)
    if ((deg[x] <= 1) != mapped[x])
      throw DecompositionError(DecompositionErrorKind::LeafMapNotBijective,
                               "node " + std::to_string(x) + (mapped[x] ? " is mapped but not a leaf" : " is an unmapped leaf"));
}

std::vector<Cut> edge_cuts(const BranchDecomposition& bd) {
  const auto& t = bd.tree;
  const std::size_t universe = bd.vertex_universe();
  std::vector<Cut> out(t.edges.size(), Cut{VertexSet(universe)});
  if (t.edges.empty()) return out;
  VertexSet all(universe);
  for (auto [node, v] : bd.leaves) all.insert(v);
  auto min_leaf = std::min_element(bd.leaves.begin(), bd.leaves.end(),
                                   [](const auto& a, const auto& b) { return a.second < b.second; });
  const NodeId root = min_leaf->first;
  auto adj = t.adjacency();
  // Post-order: subtree vertex sets below each edge, away from the root.
  std::vector<VertexSet> below(t.node_count, VertexSet(universe));
  std::vector<std::pair<NodeId, std::size_t>> order;  // (node, parent edge)
  std::vector<NodeId> stack{root};
  std::vector<std::size_t> parent_edge(t.node_count, SIZE_MAX);
  std::vector<bool> seen(t.node_count, false);
  seen[root] = true;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    order.emplace_back(x, parent_edge[x]);
    for (auto [y, e] : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        parent_edge[y] = e;
        stack.push_back(y);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [x, pe] = *it;
    if (auto v = bd.vertex_at(x)) below[x].insert(*v);
    if (pe == SIZE_MAX) continue;
    out[pe].side_x = all - below[x];
    NodeId p = t.edges[pe].first == x ? t.edges[pe].second : t.edges[pe].first;
    below[p] |= below[x];
  }
  return out;
}

Cut edge_cut(const BranchDecomposition& bd, std::size_t edge) {
  if (edge >= bd.tree.edges.size())
    throw DecompositionError(DecompositionErrorKind::UnknownEdge, "unknown tree edge " + std::to_string(edge));
  return edge_cuts(bd)[edge];
}

WidthReport decomposition_width(const BranchDecomposition& bd, const Graph& g, const FamilySelector& sel) {
  validate_decomposition(bd, g);
  WidthReport r;
  auto cuts = edge_cuts(bd);
  for (std::size_t e = 0; e < cuts.size(); ++e) {
    Cut c{VertexSet(g.order())};
    cuts[e].side_x.for_each([&](Vertex v) { c.side_x.insert(v); });
    CutValue v = family_cut_value(g, c, sel);
    if (!r.argmax || v.value > r.width) {
      r.width = v.value;
      r.argmax = e;
    }
    r.per_edge.push_back({e, std::move(c), std::move(v)});
  }
  return r;
}

void for_each_decomposition(std::size_t n, const std::function<void(const BranchDecomposition&)>& visit,
                            std::size_t limit) {
  if (n > limit) throw LimitExceeded("enumerate_decompositions", n, limit);
  BranchDecomposition bd;
  for (Vertex v = 0; v < n; ++v) bd.leaves.emplace_back(v, v);
  if (n <= 2) {
    bd.tree.node_count = n;
    if (n == 2) bd.tree.edges.emplace_back(0, 1);
    visit(bd);
    return;
  }
  // Leaves are nodes 0..n-1; internal nodes n.. in insertion order.
  bd.tree.node_count = n + 1;
  bd.tree.edges = {{0, NodeId(n)}, {1, NodeId(n)}, {2, NodeId(n)}};
  std::function<void(NodeId)> insert = [&](NodeId leaf) {
    if (leaf == n) {
      visit(bd);
      return;
    }
    const std::size_t existing = bd.tree.edges.size();
    const NodeId mid = NodeId(n + leaf - 2);
    bd.tree.node_count = n + leaf - 1;
    for (std::size_t e = 0; e < existing; ++e) {
      auto [u, v] = bd.tree.edges[e];
      bd.tree.edges[e] = {u, mid};
      bd.tree.edges.emplace_back(mid, v);
      bd.tree.edges.emplace_back(mid, leaf);
      insert(leaf + 1);
      bd.tree.edges.pop_back();
      bd.tree.edges.pop_back();
      bd.tree.edges[e] = {u, v};
    }
    bd.tree.node_count = n + leaf - 2;
  };
  insert(3);
}

std::vector<BranchDecomposition> enumerate_decompositions(std::size_t n, std::size_t limit) {
  std::vector<BranchDecomposition> out;
  for_each_decomposition(n, [&](const BranchDecomposition& bd) { out.push_back(bd); }, limit);
  return out;
}

RestrictedTree restrict_tree(const Tree& t, std::span<const NodeId> keep) {
  if (keep.empty()) throw Error("restrict_tree needs a non-empty node set");
  std::vector<bool> in_a(t.node_count, false);
  for (NodeId x : keep) {
    if (x >= t.node_count) throw Error("restrict_tree node out of range");
    in_a[x] = true;
  }
  auto adj = t.adjacency();
  // Minimal spanning subtree: strip leaves outside A.
  std::vector<std::size_t> deg = t.degrees();
  std::vector<bool> alive(t.node_count, true);
  std::vector<NodeId> queue;
  for (NodeId x = 0; x < t.node_count; ++x)
    if (!in_a[x] && deg[x] <= 1) queue.push_back(x);
  while (!queue.empty()) {
    NodeId x = queue.back();
    queue.pop_back();
    if (!alive[x]) continue;
    alive[x] = false;
    for (auto [y, e] : adj[x])
      if (alive[y] && --deg[y] <= 1 && !in_a[y]) queue.push_back(y);
  }
  RestrictedTree r;
  std::vector<std::int64_t> new_id(t.node_count, -1);
  for (NodeId x = 0; x < t.node_count; ++x)
    if (alive[x] && (in_a[x] || deg[x] != 2)) {
      new_id[x] = std::int64_t(r.original.size());
      r.original.push_back(x);
    }
  r.tree.node_count = r.original.size();
  // Walk from each kept node through contracted nodes to the next kept one.
  for (NodeId start : r.original)
    for (auto [first, e0] : adj[start]) {
      if (!alive[first]) continue;
      std::vector<std::size_t> path{e0};
      NodeId prev = start, cur = first;
      while (new_id[cur] < 0) {
        for (auto [nxt, e] : adj[cur])
          if (alive[nxt] && nxt != prev) {
            path.push_back(e);
            prev = cur;
            cur = nxt;
            break;
          }
      }
      if (start < cur) {
        r.tree.edges.emplace_back(NodeId(new_id[start]), NodeId(new_id[cur]));
        r.paths.push_back(std::move(path));
      }
    }
  return r;
}

std::size_t find_balanced_edge(const Tree& t, std::span<const double> w) {
  if (w.size() != t.node_count) throw Error("one weight per tree node required");
  if (!t.is_tree() || t.edges.empty()) throw Error("balanced edge needs a tree with at least one edge");
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0)) throw Error("total weight must be positive");
  const double eps = 1e-12 * total;
  auto deg = t.degrees();
  for (NodeId x = 0; x < t.node_count; ++x) {
    if (w[x] < 0) throw Error("negative weight");
    if (deg[x] > 3) throw Error("tree is not subcubic");
    const double cap = deg[x] >= 3 ? 0.0 : deg[x] == 2 ? total / 3 : 2 * total / 3;
    if (w[x] > cap + eps) throw Error("weight on node " + std::to_string(x) + " too large for a balanced edge");
  }
  auto adj = t.adjacency();
  // below[x]: weight of the subtree under x when rooted at node 0.
  std::vector<double> below(t.node_count, 0.0);
  std::vector<NodeId> parent(t.node_count, NodeId(-1)), order{0};
  std::vector<bool> seen(t.node_count, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto [y, e] : adj[order[i]])
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = order[i];
        order.push_back(y);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    below[*it] += w[*it];
    if (parent[*it] != NodeId(-1)) below[parent[*it]] += below[*it];
  }
  auto far_side = [&](NodeId from, NodeId to) { return parent[to] == from ? below[to] : total - below[from]; };
  // Walk toward any side holding more than half the weight.
  NodeId cur = 0;
  for (;;) {
    NodeId next = cur;
    for (auto [y, e] : adj[cur])
      if (far_side(cur, y) > total / 2 + eps) next = y;
    if (next == cur) break;
    cur = next;
  }
  std::size_t best = adj[cur].front().second;
  double best_w = -1;
  for (auto [y, e] : adj[cur])
    if (far_side(cur, y) > best_w + eps) {
      best_w = far_side(cur, y);
      best = e;
    }
  const double lo = std::min(best_w, total - best_w);
  if (lo < total / 3 - eps) throw InternalError("balanced edge search ended on an unbalanced edge");
  return best;
}

namespace {

// Copy `src` into `dst` with node ids shifted by `offset`.
void append_shifted(BranchDecomposition& dst, const BranchDecomposition& src, NodeId offset) {
  for (auto [u, v] : src.tree.edges) dst.tree.edges.emplace_back(u + offset, v + offset);
  for (auto [node, v] : src.leaves) dst.leaves.emplace_back(node + offset, v);
  dst.tree.node_count += src.tree.node_count;
}

// Splits `edge` with a new node and returns it.
NodeId subdivide(BranchDecomposition& bd, std::size_t edge) {
  NodeId mid = NodeId(bd.tree.node_count++);
  auto [u, v] = bd.tree.edges[edge];
  bd.tree.edges[edge] = {u, mid};
  bd.tree.edges.emplace_back(mid, v);
  return mid;
}

}  // namespace

BranchDecomposition join_components(const BranchDecomposition& a, const BranchDecomposition& b) {
  for (auto [na, va] : a.leaves)
    for (auto [nb, vb] : b.leaves)
      if (va == vb) throw DecompositionError(DecompositionErrorKind::Overlap, "vertex " + std::to_string(va) + " in both parts");
  if (a.leaves.empty()) return b;
  if (b.leaves.empty()) return a;
  BranchDecomposition out;
  append_shifted(out, a, 0);
  const std::size_t b_first_edge = out.tree.edges.size();
  const NodeId shift = NodeId(out.tree.node_count);
  append_shifted(out, b, shift);
  const NodeId wa = a.tree.edges.empty() ? a.leaves.front().first : subdivide(out, 0);
  const NodeId wb = b.tree.edges.empty() ? b.leaves.front().first + shift : subdivide(out, b_first_edge);
  out.tree.edges.emplace_back(wa, wb);
  std::sort(out.leaves.begin(), out.leaves.end());
  return out;
}

BranchDecomposition relabel_vertices(const BranchDecomposition& bd, std::span<const Vertex> to_original) {
  BranchDecomposition out = bd;
  for (auto& [node, v] : out.leaves) {
    if (v >= to_original.size()) throw Error("relabel map too short");
    v = to_original[v];
  }
  return out;
}

BranchDecomposition parse_decomposition(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  BranchDecomposition bd;
  auto bad = [&](ParseErrorKind k, const std::string& why) { return ParseError(k, lineno, why); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    long long a = 0, b = 0;
    std::string extra;
    if (tag == "tree") {
      if (header) throw bad(ParseErrorKind::Malformed, "duplicate 'tree' line");
      if (!(ls >> a) || (ls >> extra) || a < 0) throw bad(ParseErrorKind::Malformed, "expected 'tree <nodes>'");
      bd.tree.node_count = std::size_t(a);
      header = true;
      continue;
    }
    if (!header) throw bad(ParseErrorKind::Malformed, "first line must be 'tree <nodes>'");
    if (tag != "t" && tag != "leaf") throw bad(ParseErrorKind::Malformed, "unknown record '" + tag + "'");
    if (!(ls >> a >> b) || (ls >> extra)) throw bad(ParseErrorKind::Malformed, "expected two integers");
    if (a < 0 || b < 0) throw bad(ParseErrorKind::OutOfRange, "negative index");
    if (a >= (long long)bd.tree.node_count || (tag == "t" && b >= (long long)bd.tree.node_count))
      throw bad(ParseErrorKind::OutOfRange, "node index out of range");
    if (tag == "t") {
      if (a == b) throw bad(ParseErrorKind::Loop, "tree loop edge");
      bd.tree.edges.emplace_back(NodeId(a), NodeId(b));
    } else {
      bd.leaves.emplace_back(NodeId(a), Vertex(b));
    }
  }
  if (!header) throw ParseError(ParseErrorKind::Malformed, lineno + 1, "missing 'tree <nodes>' line");
  std::sort(bd.leaves.begin(), bd.leaves.end());
  return bd;
}

std::string write_decomposition(const BranchDecomposition& bd) {
  std::ostringstream os;
  os << "tree " << bd.tree.node_count << '\n';
  for (auto [u, v] : bd.tree.edges) os << "t " << u << ' ' << v << '\n';
  for (auto [node, v] : bd.leaves) os << "leaf " << node << ' ' << v << '\n';
  return os.str();
}

std::string decomposition_to_json(const BranchDecomposition& bd) {
  nlohmann::json j;
  j["nodes"] = bd.tree.node_count;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : bd.tree.edges) j["edges"].push_back({u, v});
  j["leaves"] = nlohmann::json::array();
  for (auto [node, v] : bd.leaves) j["leaves"].push_back({node, v});
  return j.dump();
}

}  // namespace fbranch
