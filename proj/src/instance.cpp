#include "tap/instance.hpp"

#include <algorithm>
#include <deque>

#include "tap/error.hpp"

namespace tap {

const char* link_class_name(LinkClass c) {
  switch (c) {
    case LinkClass::Cross: return "cross";
    case LinkClass::Up: return "up";
    case LinkClass::In: return "in";
  }
  return "?";
}

int TreeIndex::id_of(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw Error(ErrorCode::UnknownVertex, name);
  return it->second;
}

bool TreeIndex::has_vertex(const std::string& name) const { return ids_.count(name) > 0; }

std::pair<std::string, std::string> TreeIndex::edge_names(int e) const {
  return {names_[edge_parent(e)], names_[edge_child(e)]};
}

int TreeIndex::edge_index(const std::string& a, const std::string& b) const {
  int ia = id_of(a);
  int ib = id_of(b);
  if (parent_[ia] == ib && child_edge_[ia] >= 0) return child_edge_[ia];
  if (parent_[ib] == ia && child_edge_[ib] >= 0) return child_edge_[ib];
  throw Error(ErrorCode::UnknownEdge, "(" + a + "," + b + ") is not a tree edge");
}

int TreeIndex::lca(int u, int v) const {
  while (level_[u] > level_[v]) u = parent_[u];
  while (level_[v] > level_[u]) v = parent_[v];
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
  }
  return u;
}

bool TreeIndex::is_ancestor(int anc, int desc) const {
  while (level_[desc] > level_[anc]) desc = parent_[desc];
  return desc == anc;
}

int TreeIndex::ancestor_at_level(int v, int lvl) const {
  if (level_[v] < lvl) return -1;
  while (level_[v] > lvl) v = parent_[v];
  return v;
}

std::vector<int> TreeIndex::path_edges(int u, int v) const {
  std::vector<int> up;
  std::vector<int> down;
  int a = u;
  int b = v;
  while (level_[a] > level_[b]) {
    up.push_back(child_edge_[a]);
    a = parent_[a];
  }
  while (level_[b] > level_[a]) {
    down.push_back(child_edge_[b]);
    b = parent_[b];
  }
  while (a != b) {
    up.push_back(child_edge_[a]);
    down.push_back(child_edge_[b]);
    a = parent_[a];
    b = parent_[b];
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

TreeIndex validate(const TapInstance& inst) {
  TreeIndex idx;
  if (inst.vertices.empty()) throw Error(ErrorCode::UnknownVertex, "empty vertex set");
  for (const auto& v : inst.vertices) {
    if (idx.ids_.count(v)) throw Error(ErrorCode::DuplicateId, "vertex " + v);
    idx.ids_[v] = static_cast<int>(idx.names_.size());
    idx.names_.push_back(v);
  }
  const int n = idx.vertex_count();
  if (!idx.ids_.count(inst.root)) throw Error(ErrorCode::UnknownVertex, "root " + inst.root);
  idx.root_ = idx.ids_[inst.root];

  // Adjacency with edge ids; traversal detects duplicates and cycles.
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
  for (int e = 0; e < static_cast<int>(inst.tree_edges.size()); ++e) {
    const auto& [a, b] = inst.tree_edges[e];
    auto ia = idx.ids_.find(a);
    auto ib = idx.ids_.find(b);
    if (ia == idx.ids_.end()) throw Error(ErrorCode::UnknownVertex, "tree edge endpoint " + a);
    if (ib == idx.ids_.end()) throw Error(ErrorCode::UnknownVertex, "tree edge endpoint " + b);
    if (ia->second == ib->second) {
      throw Error(ErrorCode::CycleDetected, "self-loop tree edge at " + a);
    }
    adj[ia->second].push_back({ib->second, e});
    adj[ib->second].push_back({ia->second, e});
  }

  idx.parent_.assign(n, -1);
  idx.level_.assign(n, 0);
  idx.children_.assign(n, {});
  idx.child_edge_.assign(n, -1);
  idx.edge_child_.assign(inst.tree_edges.size(), -1);

  std::vector<char> visited(n, 0);
  std::vector<char> edge_used(inst.tree_edges.size(), 0);
  std::deque<int> queue;
  visited[idx.root_] = 1;
  idx.parent_[idx.root_] = idx.root_;
  idx.level_[idx.root_] = 1;
  queue.push_back(idx.root_);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : adj[u]) {
      if (edge_used[e]) continue;
      if (visited[w]) {
        const auto& [a, b] = inst.tree_edges[e];
        throw Error(ErrorCode::CycleDetected, "tree edge (" + a + "," + b + ")");
      }
      edge_used[e] = 1;
      visited[w] = 1;
      idx.parent_[w] = u;
      idx.level_[w] = idx.level_[u] + 1;
      idx.children_[u].push_back(w);
      idx.child_edge_[w] = e;
      idx.edge_child_[e] = w;
      queue.push_back(w);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!visited[v]) throw Error(ErrorCode::DisconnectedTree, "vertex " + idx.names_[v]);
  }
  // Connected and acyclic on all n vertices implies exactly n-1 edges.

  idx.depth_ = 0;
  for (int v = 0; v < n; ++v) {
    if (idx.is_internal(v)) idx.depth_ = std::max(idx.depth_, idx.level_[v]);
  }

  std::set<std::string> link_ids;
  for (const auto& link : inst.links) {
    if (!idx.ids_.count(link.u)) throw Error(ErrorCode::UnknownVertex, "link " + link.id + " endpoint " + link.u);
    if (!idx.ids_.count(link.v)) throw Error(ErrorCode::UnknownVertex, "link " + link.id + " endpoint " + link.v);
    if (link.u == link.v) throw Error(ErrorCode::SelfLoopLink, "link " + link.id);
    if (link.cost < 0) throw Error(ErrorCode::NegativeCost, "link " + link.id);
    if (!link_ids.insert(link.id).second) throw Error(ErrorCode::DuplicateId, "link " + link.id);
  }
  return idx;
}

CoverMap::CoverMap(const TapInstance& inst, const TreeIndex& idx) {
  links_ = inst.links;
  std::sort(links_.begin(), links_.end(),
            [](const Link& a, const Link& b) { return a.id < b.id; });
  for (int i = 0; i < static_cast<int>(links_.size()); ++i) index_[links_[i].id] = i;

  const int m = static_cast<int>(links_.size());
  const int ne = idx.edge_count();
  link_edges_.resize(m);
  edge_links_.resize(ne);
  link_mask_.assign(m, 0);
  edge_mask_.assign(ne, 0);
  for (int i = 0; i < m; ++i) {
    link_edges_[i] = idx.path_edges(idx.id_of(links_[i].u), idx.id_of(links_[i].v));
    std::sort(link_edges_[i].begin(), link_edges_[i].end());
    for (int e : link_edges_[i]) {
      edge_links_[e].push_back(i);
      if (ne <= 64) link_mask_[i] |= 1ull << e;
      if (m <= 64) edge_mask_[e] |= 1ull << i;
    }
  }
}

int CoverMap::link_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownLink, id);
  return it->second;
}

bool CoverMap::has_link(const std::string& id) const { return index_.count(id) > 0; }

std::string lca(const TreeIndex& idx, const std::string& u, const std::string& v) {
  return idx.name_of(idx.lca(idx.id_of(u), idx.id_of(v)));
}

std::vector<std::pair<std::string, std::string>> covered_edges(const TreeIndex& idx,
                                                               const Link& link) {
  std::vector<std::pair<std::string, std::string>> result;
  for (int e : idx.path_edges(idx.id_of(link.u), idx.id_of(link.v))) {
    result.push_back(idx.edge_names(e));
  }
  return result;
}

std::set<std::string> cov(const TapInstance& inst, const TreeIndex& idx,
                          const std::string& a, const std::string& b) {
  int e = idx.edge_index(a, b);
  std::set<std::string> result;
  for (const auto& link : inst.links) {
    auto path = idx.path_edges(idx.id_of(link.u), idx.id_of(link.v));
    if (std::find(path.begin(), path.end(), e) != path.end()) result.insert(link.id);
  }
  return result;
}

LinkClass classify(const TreeIndex& idx, const Link& link, const std::string& center) {
  int u = idx.id_of(link.u);
  int v = idx.id_of(link.v);
  int c = idx.id_of(center);
  if (u != c && v != c) {
    // Both endpoints survive T - center; they are separated exactly when the
    // tree path between them passes through the center.
    bool through = (idx.is_ancestor(c, u) || idx.is_ancestor(c, v)) &&
                   idx.is_ancestor(idx.lca(u, v), c);
    if (through) return LinkClass::Cross;
  }
  if (idx.is_ancestor(u, v) || idx.is_ancestor(v, u)) return LinkClass::Up;
  return LinkClass::In;
}

bool is_leaf_to_leaf(const TapInstance& inst, const TreeIndex& idx) {
  for (const auto& link : inst.links) {
    if (idx.is_internal(idx.id_of(link.u)) || idx.is_internal(idx.id_of(link.v))) return false;
  }
  return true;
}

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += "_";
  return base;
}

}  // namespace

LeafToLeafResult leaf_to_leaf(const TapInstance& inst) {
  TreeIndex idx = validate(inst);
  LeafToLeafResult result;
  TapInstance& out = result.reduced;
  out.name = inst.name.empty() ? "" : inst.name + "-l2l";
  out.vertices = inst.vertices;
  out.root = inst.root;
  out.tree_edges = inst.tree_edges;
  out.links = inst.links;

  std::set<std::string> vertex_names(inst.vertices.begin(), inst.vertices.end());
  std::set<std::string> link_ids;
  for (const auto& link : inst.links) link_ids.insert(link.id);

  std::map<std::string, std::string> reattach;  // internal vertex -> its first new leaf
  for (int v = 0; v < idx.vertex_count(); ++v) {
    if (!idx.is_internal(v)) continue;
    const std::string& u = idx.name_of(v);
    std::string p1 = fresh_name(u + "__p1", vertex_names);
    vertex_names.insert(p1);
    std::string p2 = fresh_name(u + "__p2", vertex_names);
    vertex_names.insert(p2);
    out.vertices.push_back(p1);
    out.vertices.push_back(p2);
    out.tree_edges.push_back({u, p1});
    out.tree_edges.push_back({u, p2});
    std::string helper = fresh_name("z__" + u, link_ids);
    link_ids.insert(helper);
    out.links.push_back({helper, p1, p2, Rational(0)});
    result.helper_ids.insert(helper);
    reattach[u] = p1;
  }
  for (auto& link : out.links) {
    if (result.helper_ids.count(link.id)) continue;
    auto iu = reattach.find(link.u);
    if (iu != reattach.end()) link.u = iu->second;
    auto iv = reattach.find(link.v);
    if (iv != reattach.end()) link.v = iv->second;
  }
  return result;
}

std::set<std::string> LeafToLeafResult::forward_solution(
    const std::set<std::string>& original) const {
  std::set<std::string> sol = original;
  sol.insert(helper_ids.begin(), helper_ids.end());
  return sol;
}

std::set<std::string> LeafToLeafResult::backward_solution(
    const std::set<std::string>& reduced_sol) const {
  std::set<std::string> sol;
  for (const auto& id : reduced_sol) {
    if (!helper_ids.count(id)) sol.insert(id);
  }
  return sol;
}

std::vector<std::vector<int>> partition_by_lca_level(const TreeIndex& idx,
                                                     const std::vector<Link>& links) {
  std::vector<std::vector<int>> buckets(idx.depth() + 1);
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    int c = idx.lca(idx.id_of(links[i].u), idx.id_of(links[i].v));
    int lvl = idx.level(c);
    if (lvl >= static_cast<int>(buckets.size())) buckets.resize(lvl + 1);
    buckets[lvl].push_back(i);
  }
  return buckets;
}

}  // namespace tap
