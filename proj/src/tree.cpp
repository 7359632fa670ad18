#include "treeshape/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace treeshape {

namespace {

// Orientation of every edge away from `start`: for each edge, the endpoint
// farther from `start` and the number of leaves on that far side.
struct EdgeSides {
  std::vector<Vertex_id> far_end;
  std::vector<int> far_leaves;
};

auto compute_edge_sides(const PhyloTree& tree, Vertex_id start) -> EdgeSides {
  const auto vertex_count = static_cast<std::size_t>(tree.vertex_count());
  auto sides = EdgeSides{
      std::vector<Vertex_id>(static_cast<std::size_t>(tree.edge_count()), k_no_vertex),
      std::vector<int>(static_cast<std::size_t>(tree.edge_count()), 0)};

  auto parent_edge = std::vector<Edge_id>(vertex_count, -1);
  auto order = std::vector<Vertex_id>{};
  order.reserve(vertex_count);
  auto stack = std::vector<Vertex_id>{start};
  auto seen = std::vector<bool>(vertex_count, false);
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto e : tree.incident_edges(v)) {
      auto w = tree.other_end(e, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        parent_edge[static_cast<std::size_t>(w)] = e;
        sides.far_end[static_cast<std::size_t>(e)] = w;
        stack.push_back(w);
      }
    }
  }

  auto leaves_below = std::vector<int>(vertex_count, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = *it;
    auto& below = leaves_below[static_cast<std::size_t>(v)];
    if (tree.is_leaf(v)) {
      below += 1;
    }
    auto pe = parent_edge[static_cast<std::size_t>(v)];
    if (pe >= 0) {
      sides.far_leaves[static_cast<std::size_t>(pe)] = below;
      leaves_below[static_cast<std::size_t>(tree.other_end(pe, v))] += below;
    }
  }
  return sides;
}

auto is_interior_edge(const PhyloTree& tree, Edge_id e) -> bool {
  const auto& ed = tree.edge(e);
  return !tree.is_leaf(ed.u) && !tree.is_leaf(ed.v);
}

// Leaves reachable from `from` without crossing `cut`.
auto collect_leaves(const PhyloTree& tree, Vertex_id from, Edge_id cut) -> std::vector<Vertex_id> {
  auto leaves = std::vector<Vertex_id>{};
  auto stack = std::vector<std::pair<Vertex_id, Edge_id>>{{from, cut}};
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) {
      leaves.push_back(v);
    }
    for (auto e : tree.incident_edges(v)) {
      if (e != via) {
        stack.emplace_back(tree.other_end(e, v), e);
      }
    }
  }
  return leaves;
}

}  // namespace

auto to_string(Rootedness r) -> std::string {
  return r == Rootedness::rooted ? "rooted" : "unrooted";
}

// ---------------------------------------------------------------------------
// PhyloTree

void PhyloTree::add_vertex(Taxon taxon) {
  incident_.push_back({-1, -1, -1});
  degree_.push_back(0);
  taxon_.push_back(0);
  if (taxon != 0) {
    set_taxon(static_cast<Vertex_id>(degree_.size()) - 1, taxon);
  }
}

void PhyloTree::set_taxon(Vertex_id v, Taxon x) {
  if (x <= 0) {
    throw std::invalid_argument("taxon labels must be positive, got " + std::to_string(x));
  }
  if (has_taxon(x)) {
    throw std::invalid_argument("duplicate taxon " + std::to_string(x));
  }
  if (static_cast<std::size_t>(x) >= leaf_of_.size()) {
    leaf_of_.resize(static_cast<std::size_t>(x) + 1, k_no_vertex);
  }
  leaf_of_[static_cast<std::size_t>(x)] = v;
  taxon_[static_cast<std::size_t>(v)] = x;
  ++leaf_count_;
}

auto PhyloTree::add_edge(Vertex_id u, Vertex_id v) -> Edge_id {
  auto e = static_cast<Edge_id>(edges_.size());
  for (auto w : {u, v}) {
    auto& d = degree_[static_cast<std::size_t>(w)];
    if (d == 3) {
      throw std::invalid_argument("vertex " + std::to_string(w) + " would have degree above 3");
    }
    incident_[static_cast<std::size_t>(w)][d] = e;
    ++d;
  }
  edges_.push_back({u, v});
  return e;
}

void PhyloTree::replace_incident(Vertex_id v, Edge_id from, Edge_id to) {
  auto& slots = incident_[static_cast<std::size_t>(v)];
  auto it = std::find(slots.begin(), slots.begin() + degree(v), from);
  if (it == slots.begin() + degree(v)) {
    throw std::logic_error("edge not incident to vertex");
  }
  *it = to;
}

auto PhyloTree::leaf_of(Taxon x) const -> Vertex_id {
  if (x <= 0 || static_cast<std::size_t>(x) >= leaf_of_.size()) {
    return k_no_vertex;
  }
  return leaf_of_[static_cast<std::size_t>(x)];
}

auto PhyloTree::taxa() const -> std::vector<Taxon> {
  auto result = std::vector<Taxon>{};
  result.reserve(static_cast<std::size_t>(leaf_count_));
  for (auto x = 1; x < static_cast<int>(leaf_of_.size()); ++x) {
    if (leaf_of_[static_cast<std::size_t>(x)] != k_no_vertex) {
      result.push_back(x);
    }
  }
  return result;
}

auto PhyloTree::has_standard_taxa() const -> bool {
  if (static_cast<int>(leaf_of_.size()) != leaf_count_ + 1) {
    return false;
  }
  return std::all_of(leaf_of_.begin() + 1, leaf_of_.end(),
                     [](Vertex_id v) { return v != k_no_vertex; });
}

auto PhyloTree::two_leaf(Rootedness rootedness, Taxon x1, Taxon x2) -> PhyloTree {
  auto tree = PhyloTree{};
  tree.rootedness_ = rootedness;
  if (rootedness == Rootedness::unrooted) {
    tree.add_vertex(x1);
    tree.add_vertex(x2);
    tree.add_edge(0, 1);
  } else {
    tree.add_vertex(0);  // root
    tree.add_vertex(0);  // its neighbour
    tree.add_vertex(x1);
    tree.add_vertex(x2);
    tree.root_ = 0;
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    tree.add_edge(1, 3);
  }
  return tree;
}

auto PhyloTree::from_edges(Rootedness rootedness,
                           int vertex_count,
                           std::vector<Edge> edges,
                           const std::vector<std::pair<Vertex_id, Taxon>>& leaves,
                           std::optional<Vertex_id> root) -> PhyloTree {
  if (vertex_count < 2) {
    throw std::invalid_argument("a phylogenetic tree needs at least two vertices");
  }
  if (root.has_value() != (rootedness == Rootedness::rooted)) {
    throw std::invalid_argument("a root vertex must be given iff the tree is rooted");
  }
  auto tree = PhyloTree{};
  tree.rootedness_ = rootedness;
  for (auto v = 0; v < vertex_count; ++v) {
    tree.add_vertex(0);
  }
  auto in_range = [&](Vertex_id v) { return v >= 0 && v < vertex_count; };
  for (const auto& [v, x] : leaves) {
    if (!in_range(v)) {
      throw std::invalid_argument("leaf vertex out of range");
    }
    if (tree.is_leaf(v)) {
      throw std::invalid_argument("vertex labelled twice");
    }
    tree.set_taxon(v, x);
  }
  for (const auto& e : edges) {
    if (!in_range(e.u) || !in_range(e.v) || e.u == e.v) {
      throw std::invalid_argument("invalid edge endpoints");
    }
    tree.add_edge(e.u, e.v);
  }
  if (root) {
    if (!in_range(*root)) {
      throw std::invalid_argument("root vertex out of range");
    }
    tree.root_ = *root;
  }
  try {
    tree.validate();
  } catch (const std::logic_error& err) {
    throw std::invalid_argument(err.what());
  }
  return tree;
}

void PhyloTree::validate() const {
  auto fail = [](const std::string& what) { throw std::logic_error("invalid tree: " + what); };
  const auto n = leaf_count_;
  if (n < 2) {
    fail("fewer than two leaves");
  }
  const auto expected_edges = is_rooted() ? 2 * n - 1 : 2 * n - 3;
  if (edge_count() != expected_edges) {
    fail("edge count " + std::to_string(edge_count()) + ", expected " +
         std::to_string(expected_edges));
  }
  if (edge_count() != vertex_count() - 1) {
    fail("edge count does not match vertex count");
  }
  if (is_rooted()) {
    if (root_ < 0 || root_ >= vertex_count()) {
      fail("rooted tree without a root");
    }
    if (is_leaf(root_) || degree(root_) != 1) {
      fail("root must be an unlabelled degree-one vertex");
    }
  } else if (root_ != k_no_vertex) {
    fail("unrooted tree with a root");
  }
  for (auto v = 0; v < vertex_count(); ++v) {
    if (is_leaf(v)) {
      if (degree(v) != 1) {
        fail("leaf " + std::to_string(taxon(v)) + " has degree " + std::to_string(degree(v)));
      }
    } else if (v != root_ && degree(v) != 3) {
      fail("interior vertex " + std::to_string(v) + " has degree " + std::to_string(degree(v)));
    }
  }
  // |E| = |V| - 1 plus connectivity makes it a tree.
  auto seen = std::vector<bool>(static_cast<std::size_t>(vertex_count()), false);
  auto stack = std::vector<Vertex_id>{0};
  seen[0] = true;
  auto reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto e : incident_edges(v)) {
      auto w = other_end(e, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count()) {
    fail("graph is disconnected");
  }
}

// ---------------------------------------------------------------------------
// Operations

auto attach_leaf(PhyloTree tree, Edge_id e, Taxon taxon) -> PhyloTree {
  if (!tree.has_edge(e)) {
    throw std::invalid_argument("unknown edge " + std::to_string(e));
  }
  if (taxon <= 0) {
    throw std::invalid_argument("taxon labels must be positive");
  }
  if (tree.has_taxon(taxon)) {
    throw std::invalid_argument("taxon " + std::to_string(taxon) + " already in tree");
  }
  auto [u, v] = tree.edge(e);
  if (tree.is_leaf(u) || v == tree.root_) {
    std::swap(u, v);
  }
  const auto w = tree.vertex_count();
  tree.add_vertex(0);
  const auto x = tree.vertex_count();
  tree.add_vertex(taxon);

  // e becomes {u, w}; v's slot for e is handed to the new edge {w, v}.
  tree.edges_[static_cast<std::size_t>(e)] = {u, w};
  tree.incident_[static_cast<std::size_t>(w)][0] = e;
  tree.degree_[static_cast<std::size_t>(w)] = 1;
  const auto wv = static_cast<Edge_id>(tree.edges_.size());
  tree.replace_incident(v, e, wv);
  tree.edges_.push_back({w, v});
  tree.incident_[static_cast<std::size_t>(w)][1] = wv;
  tree.degree_[static_cast<std::size_t>(w)] = 2;
  tree.add_edge(w, x);
  return tree;
}

auto deroot(const PhyloTree& tree) -> PhyloTree {
  if (!tree.is_rooted()) {
    throw std::invalid_argument("deroot: tree is already unrooted");
  }
  const auto rho = *tree.root();
  const auto r = tree.other_end(tree.incident_edges(rho)[0], rho);

  auto new_id = std::vector<Vertex_id>(static_cast<std::size_t>(tree.vertex_count()), k_no_vertex);
  auto next = 0;
  for (auto v = 0; v < tree.vertex_count(); ++v) {
    if (v != rho && v != r) {
      new_id[static_cast<std::size_t>(v)] = next++;
    }
  }
  auto edges = std::vector<Edge>{};
  auto joined = std::vector<Vertex_id>{};
  for (const auto& ed : tree.edges()) {
    if (ed.u == r || ed.v == r) {
      auto other = ed.u == r ? ed.v : ed.u;
      if (other != rho) {
        joined.push_back(new_id[static_cast<std::size_t>(other)]);
      }
      continue;
    }
    edges.push_back({new_id[static_cast<std::size_t>(ed.u)], new_id[static_cast<std::size_t>(ed.v)]});
  }
  edges.push_back({joined[0], joined[1]});

  auto leaves = std::vector<std::pair<Vertex_id, Taxon>>{};
  for (auto x : tree.taxa()) {
    leaves.emplace_back(new_id[static_cast<std::size_t>(tree.leaf_of(x))], x);
  }
  return PhyloTree::from_edges(Rootedness::unrooted, next, std::move(edges), leaves);
}

auto count_subtrees(const PhyloTree& tree) -> SubtreeCounts {
  const auto n = tree.leaf_count();
  auto counts = SubtreeCounts{0, 0, n};
  if (tree.is_rooted()) {
    auto sides = compute_edge_sides(tree, *tree.root());
    for (auto s : sides.far_leaves) {
      counts.b += (s == 2);
      counts.a += (s == 3);
    }
    return counts;
  }
  auto sides = compute_edge_sides(tree, 0);
  for (auto e = 0; e < tree.edge_count(); ++e) {
    if (!is_interior_edge(tree, e)) {
      continue;
    }
    auto s = sides.far_leaves[static_cast<std::size_t>(e)];
    auto t = n - s;
    counts.b += (s == 2) + (t == 2);
    counts.a += (s == 3) + (t == 3);
  }
  return counts;
}

auto class_counts_from(const SubtreeCounts& c) -> EdgeClassCounts {
  return EdgeClassCounts{
      .pend_ec = 2 * (c.b - c.a),
      .pend_pf = c.a,
      .pend_cp = 2 * c.a,
      .pend_ind = c.n - c.a - 2 * c.b,
      .int_ec = c.b - c.a,
      .int_nec = c.n - 3 + c.a - c.b,
  };
}

auto classify_edges(const PhyloTree& tree) -> EdgeClassification {
  if (tree.is_rooted()) {
    throw std::invalid_argument("classify_edges: unrooted trees only");
  }
  const auto n = tree.leaf_count();
  if (n < 6) {
    throw std::invalid_argument("classify_edges: needs at least 6 leaves, got " + std::to_string(n));
  }
  const auto vertex_count = static_cast<std::size_t>(tree.vertex_count());
  auto sides = compute_edge_sides(tree, 0);

  struct Cherry {
    Edge_id edge;
    Vertex_id x, y;
  };
  auto cherries = std::vector<Cherry>{};
  auto cherry_of = std::vector<int>(vertex_count, -1);
  auto pitchfork_of = std::vector<int>(vertex_count, -1);
  auto pitchfork_count = 0;

  for (auto e = 0; e < tree.edge_count(); ++e) {
    if (!is_interior_edge(tree, e)) {
      continue;
    }
    const auto far = sides.far_end[static_cast<std::size_t>(e)];
    const auto near = tree.other_end(e, far);
    const auto s = sides.far_leaves[static_cast<std::size_t>(e)];
    for (auto [side_vertex, size] : {std::pair{far, s}, std::pair{near, n - s}}) {
      if (size == 2) {
        auto leaves = collect_leaves(tree, side_vertex, e);
        auto id = static_cast<int>(cherries.size());
        cherries.push_back({e, leaves[0], leaves[1]});
        cherry_of[static_cast<std::size_t>(leaves[0])] = id;
        cherry_of[static_cast<std::size_t>(leaves[1])] = id;
      } else if (size == 3) {
        for (auto leaf : collect_leaves(tree, side_vertex, e)) {
          pitchfork_of[static_cast<std::size_t>(leaf)] = pitchfork_count;
        }
        ++pitchfork_count;
      }
    }
  }

  auto essential = [&](const Cherry& c) {
    auto px = pitchfork_of[static_cast<std::size_t>(c.x)];
    return px < 0 || px != pitchfork_of[static_cast<std::size_t>(c.y)];
  };

  auto result = EdgeClassification{
      std::vector<EdgeClass>(static_cast<std::size_t>(tree.edge_count()), EdgeClass::interior_other),
      {}};
  for (const auto& c : cherries) {
    if (essential(c)) {
      result.class_of[static_cast<std::size_t>(c.edge)] = EdgeClass::interior_essential_cherry;
    }
  }
  for (auto e = 0; e < tree.edge_count(); ++e) {
    if (is_interior_edge(tree, e)) {
      continue;
    }
    const auto& ed = tree.edge(e);
    const auto leaf = tree.is_leaf(ed.u) ? ed.u : ed.v;
    const auto in_cherry = cherry_of[static_cast<std::size_t>(leaf)] >= 0;
    const auto in_pitchfork = pitchfork_of[static_cast<std::size_t>(leaf)] >= 0;
    auto& cls = result.class_of[static_cast<std::size_t>(e)];
    if (in_cherry && in_pitchfork) {
      cls = EdgeClass::pendant_cherry_pitchfork;
    } else if (in_cherry) {
      cls = EdgeClass::pendant_essential_cherry;
    } else if (in_pitchfork) {
      cls = EdgeClass::pendant_pitchfork;
    } else {
      cls = EdgeClass::pendant_independent;
    }
  }

  auto& k = result.counts;
  for (auto cls : result.class_of) {
    switch (cls) {
      case EdgeClass::pendant_essential_cherry: ++k.pend_ec; break;
      case EdgeClass::pendant_pitchfork: ++k.pend_pf; break;
      case EdgeClass::pendant_cherry_pitchfork: ++k.pend_cp; break;
      case EdgeClass::pendant_independent: ++k.pend_ind; break;
      case EdgeClass::interior_essential_cherry: ++k.int_ec; break;
      case EdgeClass::interior_other: ++k.int_nec; break;
    }
  }
  return result;
}

auto increment_for_class(EdgeClass c) -> CountIncrement {
  switch (c) {
    case EdgeClass::pendant_pitchfork:
      return {-1, +1};
    case EdgeClass::pendant_essential_cherry:
    case EdgeClass::interior_essential_cherry:
      return {+1, 0};
    case EdgeClass::pendant_independent:
      return {0, +1};
    default:
      return {0, 0};
  }
}

auto increment_for_edge(const PhyloTree& tree, Edge_id e) -> CountIncrement {
  if (!tree.has_edge(e)) {
    throw std::invalid_argument("unknown edge " + std::to_string(e));
  }
  return increment_for_class(classify_edges(tree).class_of[static_cast<std::size_t>(e)]);
}

}  // namespace treeshape
