#ifndef TREESHAPE_TESTS_TEST_TREES_HPP_
#define TREESHAPE_TESTS_TEST_TREES_HPP_

#include <algorithm>
#include <set>
#include <string_view>
#include <vector>

#include "treeshape/newick.hpp"
#include "treeshape/tree.hpp"

namespace treeshape::testing_support {

// An 8-leaf unrooted tree with the pendant edge of taxon i called e_i:
// cherries {1,3} and {4,8} hang off the central vertex, and {5,7} sits in the
// pitchfork {2,5,7}, whose neighbour 6 is a leaf on no cherry or pitchfork.
inline constexpr std::string_view k_fig1 = "((1,3),(4,8),((2,(5,7)),6));";
// A rooting of the same tree on the edge above {2,5,6,7}.
inline constexpr std::string_view k_fig1_rooted = "(((1,3),(4,8)),((2,(5,7)),6))R;";

inline constexpr std::string_view k_caterpillar6 = "(1,2,(3,(4,(5,6))));";
inline constexpr std::string_view k_snowflake6 = "((1,2),(3,4),(5,6));";

// Taxa on the side of edge e away from vertex `from`.
inline auto side_taxa(const PhyloTree& tree, Edge_id e, Vertex_id from) -> std::set<Taxon> {
  auto out = std::set<Taxon>{};
  auto stack = std::vector<std::pair<Vertex_id, Edge_id>>{{tree.other_end(e, from), e}};
  while (!stack.empty()) {
    auto [v, in] = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) {
      out.insert(tree.taxon(v));
    }
    for (auto f : tree.incident_edges(v)) {
      if (f != in) {
        stack.push_back({tree.other_end(f, v), f});
      }
    }
  }
  return out;
}

// The edge whose removal leaves exactly `taxa` on one side.
inline auto edge_splitting(const PhyloTree& tree, const std::set<Taxon>& taxa) -> Edge_id {
  for (auto e = 0; e < tree.edge_count(); ++e) {
    const auto& ed = tree.edge(e);
    if (side_taxa(tree, e, ed.u) == taxa || side_taxa(tree, e, ed.v) == taxa) {
      return e;
    }
  }
  return -1;
}

inline auto pendant_edge(const PhyloTree& tree, Taxon x) -> Edge_id {
  return tree.incident_edges(tree.leaf_of(x))[0];
}

}  // namespace treeshape::testing_support

#endif  // TREESHAPE_TESTS_TEST_TREES_HPP_
