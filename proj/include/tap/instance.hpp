#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tap/rational.hpp"

namespace tap {

// A purchasable non-tree edge. Ids are opaque strings; parallel links between
// the same vertex pair are allowed and distinguished by id.
struct Link {
  std::string id;
  std::string u;
  std::string v;
  Rational cost;
};

// A rooted spanning tree plus weighted links. Immutable after construction;
// all queries below are pure functions.
struct TapInstance {
  std::string name;
  std::vector<std::string> vertices;
  std::string root;
  std::vector<std::pair<std::string, std::string>> tree_edges;
  std::vector<Link> links;
};

enum class LinkClass { Cross, Up, In };

const char* link_class_name(LinkClass c);

// Rooted-tree queries over a validated instance. Vertices and tree edges are
// mapped to dense indices; every tree edge is identified by its child
// endpoint. Levels are 1-based with the root at level 1, and depth() is the
// maximum level of any internal node.
class TreeIndex {
 public:
  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edge_child_.size()); }

  int id_of(const std::string& name) const;  // throws UnknownVertex
  const std::string& name_of(int v) const { return names_[v]; }
  bool has_vertex(const std::string& name) const;

  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  int level(int v) const { return level_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  bool is_internal(int v) const { return !children_[v].empty(); }
  int depth() const { return depth_; }

  // Edge e points from parent(edge_child(e)) down to edge_child(e).
  int edge_child(int e) const { return edge_child_[e]; }
  int edge_parent(int e) const { return parent_[edge_child_[e]]; }
  int edge_of_child(int child) const { return child_edge_[child]; }
  std::pair<std::string, std::string> edge_names(int e) const;
  // Index of the tree edge {a, b}; throws UnknownEdge.
  int edge_index(const std::string& a, const std::string& b) const;

  int lca(int u, int v) const;
  bool is_ancestor(int anc, int desc) const;  // ancestor-of-or-equal
  // Ancestor of v at the given level, or -1 when level(v) < lvl.
  int ancestor_at_level(int v, int lvl) const;
  // Edge indices on the tree path u -> v (empty when u == v).
  std::vector<int> path_edges(int u, int v) const;

 private:
  friend TreeIndex validate(const TapInstance&);

  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
  std::vector<int> parent_;
  std::vector<int> level_;
  std::vector<std::vector<int>> children_;
  std::vector<int> edge_child_;  // edge index -> child vertex
  std::vector<int> child_edge_;  // child vertex -> edge index (-1 for root)
  int root_ = 0;
  int depth_ = 0;
};

// Checks every TapInstance invariant and builds the index.
TreeIndex validate(const TapInstance& inst);

// Link/edge incidence for one instance. Links are kept in lexicographic id
// order, which is the canonical variable order everywhere downstream.
class CoverMap {
 public:
  CoverMap(const TapInstance& inst, const TreeIndex& idx);

  int link_count() const { return static_cast<int>(links_.size()); }
  const Link& link(int i) const { return links_[i]; }
  int link_index(const std::string& id) const;  // throws UnknownLink
  bool has_link(const std::string& id) const;

  const std::vector<int>& covered_edges(int link) const { return link_edges_[link]; }
  const std::vector<int>& cov(int edge) const { return edge_links_[edge]; }

  // Bitmask views; valid only while edge_count <= 64 (resp. link_count <= 64).
  uint64_t covered_mask(int link) const { return link_mask_[link]; }
  uint64_t cov_mask(int edge) const { return edge_mask_[edge]; }

 private:
  std::vector<Link> links_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> link_edges_;
  std::vector<std::vector<int>> edge_links_;
  std::vector<uint64_t> link_mask_;
  std::vector<uint64_t> edge_mask_;
};

// Spec-level queries (name based).
std::string lca(const TreeIndex& idx, const std::string& u, const std::string& v);
std::vector<std::pair<std::string, std::string>> covered_edges(const TreeIndex& idx,
                                                               const Link& link);
std::set<std::string> cov(const TapInstance& inst, const TreeIndex& idx,
                          const std::string& a, const std::string& b);
LinkClass classify(const TreeIndex& idx, const Link& link, const std::string& center);

bool is_leaf_to_leaf(const TapInstance& inst, const TreeIndex& idx);

// Result of the leaf-to-leaf reduction. Original link ids survive unchanged;
// each internal node u contributes two fresh leaves and one zero-cost helper
// link between them. Solutions map back and forth cost-preservingly.
struct LeafToLeafResult {
  TapInstance reduced;
  std::set<std::string> helper_ids;

  std::set<std::string> forward_solution(const std::set<std::string>& original) const;
  std::set<std::string> backward_solution(const std::set<std::string>& reduced_sol) const;
};

LeafToLeafResult leaf_to_leaf(const TapInstance& inst);

// Buckets link indices by the level of their lca; result[l] holds level l,
// result[0] is unused.
std::vector<std::vector<int>> partition_by_lca_level(const TreeIndex& idx,
                                                     const std::vector<Link>& links);

}  // namespace tap
