#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rigidlift {

using VertexIndex = int;
using EdgeIndex = int;

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
};

// Connected directed multigraph without loops, with a distinguished base edge.
// The stored direction of every edge is the reference orientation: o(e) is the
// tail and t(e) the head. Vertices and edges are indexed densely in
// lexicographic order of their ids, so index order is the canonical tie-break.
class Multigraph {
 public:
  // Validates and builds. Errors: DuplicateEdgeId, LoopEdge, MissingBaseEdge,
  // Disconnected.
  static Multigraph build(const std::vector<EdgeSpec>& edges, const std::string& base_edge);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }
  const std::string& edge_id(EdgeIndex e) const { return edge_ids_[e]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }

  // Lookups by id; throw UnknownVertex / UnknownEdge.
  VertexIndex vertex(std::string_view id) const;
  EdgeIndex edge(std::string_view id) const;
  bool has_vertex(std::string_view id) const;
  bool has_edge(std::string_view id) const;

  VertexIndex tail(EdgeIndex e) const { return tail_[e]; }
  VertexIndex head(EdgeIndex e) const { return head_[e]; }
  VertexIndex other_end(EdgeIndex e, VertexIndex v) const { return tail_[e] == v ? head_[e] : tail_[e]; }

  EdgeIndex base_edge() const { return base_; }
  // t(base edge), the vertex used for q-reduction and Abel-Jacobi maps.
  VertexIndex base_vertex() const { return head_[base_]; }

  // Edges incident to v, in edge index order.
  const std::vector<EdgeIndex>& incident(VertexIndex v) const { return incident_[v]; }
  int degree(VertexIndex v) const { return static_cast<int>(incident_[v].size()); }

  std::vector<EdgeSpec> edge_specs() const;
  Multigraph with_base(EdgeIndex e) const;

  bool operator==(const Multigraph& other) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::map<std::string, VertexIndex, std::less<>> vertex_index_;
  std::map<std::string, EdgeIndex, std::less<>> edge_index_;
  std::vector<VertexIndex> tail_;
  std::vector<VertexIndex> head_;
  std::vector<std::vector<EdgeIndex>> incident_;
  EdgeIndex base_ = 0;
};

// A walk given by its start vertex and the edges crossed; sign +1 means the
// edge was crossed from tail to head.
struct EdgePath {
  VertexIndex start = 0;
  std::vector<EdgeIndex> edges;
  std::vector<int> signs;

  std::vector<VertexIndex> vertices(const Multigraph& g) const;
  VertexIndex finish(const Multigraph& g) const;
  // The algebraic path: signed edge indicator as an integer 1-chain.
  std::vector<std::int64_t> algebraic(const Multigraph& g) const;
  EdgePath reversed(const Multigraph& g) const;
};

bool is_simple_cycle(const Multigraph& g, const EdgePath& p);

struct ConnectivityProfile {
  bool two_connected = false;
  int edge_connectivity = 0;
};

int genus(const Multigraph& g);

// Connectivity of the graph with the masked edges and vertices deleted.
// Empty and single-vertex remainders count as connected.
bool is_connected_without(const Multigraph& g, const std::vector<bool>& removed_edges,
                          const std::vector<bool>& removed_vertices);

ConnectivityProfile connectivity_profile(const Multigraph& g);
bool is_two_edge_connected(const Multigraph& g);
bool is_two_connected(const Multigraph& g);

// Blocks in index order, each sorted. Errors: NotTwoEdgeConnected.
std::vector<std::vector<EdgeIndex>> series_classes(const Multigraph& g);
// The block containing e.
std::vector<EdgeIndex> series_class_of(const Multigraph& g, EdgeIndex e);

// Simple cycle crossing both a and b, found from two vertex-disjoint paths
// between their endpoints. Passing an engine shuffles the search order, which
// is how callers obtain a different but equally valid cycle.
// Errors: NoCommonCycle.
EdgePath cycle_through_edges(const Multigraph& g, EdgeIndex a, EdgeIndex b,
                             std::mt19937_64* shuffle = nullptr);

struct SpanningTree {
  VertexIndex root = 0;
  std::vector<bool> in_tree;          // per edge
  std::vector<EdgeIndex> parent_edge; // per vertex, -1 at the root
  std::vector<VertexIndex> parent;    // per vertex, -1 at the root
  std::vector<int> depth;
  std::vector<VertexIndex> order;     // root first, parents before children
};

// Kruskal over edges in index order, rooted at `root`.
SpanningTree spanning_tree(const Multigraph& g, VertexIndex root);
EdgePath tree_path(const Multigraph& g, const SpanningTree& t, VertexIndex from, VertexIndex to);

// One cycle per non-tree edge of the lowest-index spanning tree; each cycle
// crosses its non-tree edge forwards first.
std::vector<EdgePath> fundamental_cycles(const Multigraph& g);
// The non-tree edges, aligned with fundamental_cycles.
std::vector<EdgeIndex> cotree_edges(const Multigraph& g);

// BFS shortest path, ties by vertex index.
EdgePath shortest_path(const Multigraph& g, VertexIndex from, VertexIndex to);

struct Arch {
  std::vector<EdgeIndex> edges;
  VertexIndex tip_v = 0;
  VertexIndex tip_w = 0;
  std::vector<EdgeIndex> complement;
};

// All arches, from every 2-vertex separator. Errors: NotTwoConnected.
std::vector<Arch> find_arches(const Multigraph& g);
bool is_arch(const Multigraph& g, const Arch& x);

// The graph W_X G: endpoints of arch edges have the tips exchanged, edge ids,
// directions and base are kept. Errors: BaseEdgeInArch.
Multigraph whitney_graph(const Multigraph& g, const Arch& x);

}  // namespace rigidlift
