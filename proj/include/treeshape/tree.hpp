#ifndef TREESHAPE_TREE_HPP_
#define TREESHAPE_TREE_HPP_

// Binary phylogenetic trees, rooted or unrooted, and the cherry/pitchfork
// bookkeeping that all counting in this library is built on.
//
// A tree is a value. Vertex and edge ids are opaque small integers; leaves
// carry positive taxon labels. A rooted tree has an extra degree-one root
// vertex which is not a leaf, so a rooted tree on n leaves has 2n-1 edges and
// an unrooted one has 2n-3.
//
// Subtree counting rule: a cherry (pitchfork) is a connected component with
// exactly 2 (3) leaves left after deleting one edge.
//  - unrooted: only interior-edge cuts are considered, and both sides count;
//  - rooted: any edge may be cut, and only the side without the root counts.
// For unrooted trees with n >= 6 a pendant cut never leaves 2 or 3 leaves on
// one side, so restricting to interior edges changes nothing there; for the
// quartet it gives two cherries and no pitchfork.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treeshape {

enum class Rootedness { unrooted, rooted };

auto to_string(Rootedness r) -> std::string;

using Vertex_id = int;
using Edge_id = int;
using Taxon = int;

inline constexpr Vertex_id k_no_vertex = -1;

struct Edge {
  Vertex_id u;
  Vertex_id v;
};

class PhyloTree {
 public:
  // The tree on two taxa: a single edge (unrooted), or a cherry hanging from
  // the root (rooted).
  static auto two_leaf(Rootedness rootedness, Taxon x1 = 1, Taxon x2 = 2) -> PhyloTree;

  // Vertices are 0..vertex_count-1. Every vertex named in `leaves` is a leaf;
  // `root` must be given iff the tree is rooted. Throws std::invalid_argument
  // if the result is not a binary phylogenetic tree.
  static auto from_edges(Rootedness rootedness,
                         int vertex_count,
                         std::vector<Edge> edges,
                         const std::vector<std::pair<Vertex_id, Taxon>>& leaves,
                         std::optional<Vertex_id> root = std::nullopt) -> PhyloTree;

  auto rootedness() const -> Rootedness { return rootedness_; }
  auto is_rooted() const -> bool { return rootedness_ == Rootedness::rooted; }
  auto leaf_count() const -> int { return leaf_count_; }
  auto vertex_count() const -> int { return static_cast<int>(degree_.size()); }
  auto edge_count() const -> int { return static_cast<int>(edges_.size()); }

  auto edge(Edge_id e) const -> const Edge& { return edges_[static_cast<std::size_t>(e)]; }
  auto edges() const -> std::span<const Edge> { return edges_; }
  auto has_edge(Edge_id e) const -> bool { return e >= 0 && e < edge_count(); }

  auto degree(Vertex_id v) const -> int { return degree_[static_cast<std::size_t>(v)]; }
  auto incident_edges(Vertex_id v) const -> std::span<const Edge_id> {
    return {incident_[static_cast<std::size_t>(v)].data(),
            static_cast<std::size_t>(degree_[static_cast<std::size_t>(v)])};
  }
  auto other_end(Edge_id e, Vertex_id v) const -> Vertex_id {
    const auto& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  auto is_leaf(Vertex_id v) const -> bool { return taxon_[static_cast<std::size_t>(v)] != 0; }
  auto is_pendant(Edge_id e) const -> bool { return is_leaf(edge(e).u) || is_leaf(edge(e).v); }
  // 0 for non-leaf vertices.
  auto taxon(Vertex_id v) const -> Taxon { return taxon_[static_cast<std::size_t>(v)]; }
  auto leaf_of(Taxon x) const -> Vertex_id;
  auto has_taxon(Taxon x) const -> bool { return leaf_of(x) != k_no_vertex; }
  // Sorted ascending.
  auto taxa() const -> std::vector<Taxon>;
  // True iff the taxa are exactly {1, ..., n}.
  auto has_standard_taxa() const -> bool;

  auto root() const -> std::optional<Vertex_id> {
    return root_ == k_no_vertex ? std::nullopt : std::optional{root_};
  }

  // Checks every structural invariant; throws std::logic_error on failure.
  void validate() const;

 private:
  PhyloTree() = default;

  void add_vertex(Taxon taxon);
  auto add_edge(Vertex_id u, Vertex_id v) -> Edge_id;
  void replace_incident(Vertex_id v, Edge_id from, Edge_id to);
  void set_taxon(Vertex_id v, Taxon x);

  friend auto attach_leaf(PhyloTree tree, Edge_id e, Taxon taxon) -> PhyloTree;

  Rootedness rootedness_ = Rootedness::unrooted;
  std::vector<Edge> edges_;
  std::vector<std::array<Edge_id, 3>> incident_;
  std::vector<std::uint8_t> degree_;
  std::vector<Taxon> taxon_;
  std::vector<Vertex_id> leaf_of_;
  Vertex_id root_ = k_no_vertex;
  int leaf_count_ = 0;
};

// T[e; x]: subdivide e = {u, v} with a fresh vertex w and hang leaf x from w.
// Edge e keeps its id and becomes {u, w}; {w, v} and {w, x} get the next two
// ids, in that order. If e is pendant the leaf end is v; if e is the root
// edge the root end is u, so the root edge keeps its id.
// Throws std::invalid_argument on an unknown edge or a taxon already present.
auto attach_leaf(PhyloTree tree, Edge_id e, Taxon taxon) -> PhyloTree;

// Remove the root and suppress its neighbour. Throws on unrooted input.
auto deroot(const PhyloTree& tree) -> PhyloTree;

struct SubtreeCounts {
  int a = 0;  // pitchforks
  int b = 0;  // cherries
  int n = 0;  // leaves

  friend auto operator==(const SubtreeCounts&, const SubtreeCounts&) -> bool = default;
};

auto count_subtrees(const PhyloTree& tree) -> SubtreeCounts;

enum class EdgeClass : std::uint8_t {
  pendant_essential_cherry,  // pendant, in a cherry that is in no pitchfork
  pendant_pitchfork,         // pendant, in a pitchfork but not in a cherry
  pendant_cherry_pitchfork,  // pendant, in a cherry inside a pitchfork
  pendant_independent,       // pendant, in neither
  interior_essential_cherry, // interior, cutting it leaves an essential cherry
  interior_other,
};

struct EdgeClassCounts {
  int pend_ec = 0;
  int pend_pf = 0;
  int pend_cp = 0;
  int pend_ind = 0;
  int int_ec = 0;
  int int_nec = 0;

  auto total() const -> int { return pend_ec + pend_pf + pend_cp + pend_ind + int_ec + int_nec; }
  friend auto operator==(const EdgeClassCounts&, const EdgeClassCounts&) -> bool = default;
};

// Class sizes implied by (a, b) for an unrooted tree with n >= 6 leaves.
auto class_counts_from(const SubtreeCounts& counts) -> EdgeClassCounts;

struct EdgeClassification {
  std::vector<EdgeClass> class_of;  // indexed by Edge_id
  EdgeClassCounts counts;
};

// Unrooted trees with at least 6 leaves only; throws std::invalid_argument
// otherwise.
auto classify_edges(const PhyloTree& tree) -> EdgeClassification;

struct CountIncrement {
  int delta_a = 0;
  int delta_b = 0;

  friend auto operator==(const CountIncrement&, const CountIncrement&) -> bool = default;
};

auto increment_for_class(EdgeClass c) -> CountIncrement;

// (A(T[e]) - A(T), B(T[e]) - B(T)) predicted from the class of e.
auto increment_for_edge(const PhyloTree& tree, Edge_id e) -> CountIncrement;

}  // namespace treeshape

#endif  // TREESHAPE_TREE_HPP_
