#ifndef TREESHAPE_NEWICK_HPP_
#define TREESHAPE_NEWICK_HPP_

// Newick reading and writing for binary trees.
//
// Rooted trees carry the label `R` on the outermost parenthesis pair, e.g.
// "(((1,2),3),4)R;". Reading such a string gives a rooted tree whose
// degree-one root sits above the top split. Without the marker a string is
// read as unrooted unless the caller asks for a rooted reading. An unrooted
// tree may be written with a top-level bifurcation "((1,2),(3,4));" or
// trifurcation "(1,2,(3,4));".
//
// Leaf labels that are all positive integers are used as taxa directly.
// Otherwise every label is mapped to 1..n in order of appearance and the
// names are returned alongside the tree. Branch lengths, comments in square
// brackets and interior labels are accepted and ignored.
//
// The canonical form written by `write_newick` sorts children by their
// smallest taxon. Unrooted trees are hung from the neighbour of their
// smallest taxon, so the top level is a trifurcation for n >= 3.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treeshape/tree.hpp"

namespace treeshape {

class NewickError : public std::runtime_error {
 public:
  NewickError(const std::string& what, std::size_t position);
  auto position() const -> std::size_t { return position_; }

 private:
  std::size_t position_;
};

struct ParsedNewick {
  PhyloTree tree;
  // names[x-1] is the label of taxon x; empty when labels were integers.
  std::vector<std::string> names;
};

inline constexpr std::string_view k_root_marker = "R";

auto parse_newick_with_names(std::string_view text,
                             std::optional<Rootedness> force = std::nullopt) -> ParsedNewick;

auto parse_newick(std::string_view text, std::optional<Rootedness> force = std::nullopt)
    -> PhyloTree;

auto write_newick(const PhyloTree& tree) -> std::string;

// Two trees are the same labelled tree iff their canonical strings match.
auto same_tree(const PhyloTree& lhs, const PhyloTree& rhs) -> bool;

// Splits a multi-tree file (one tree per ';') into tree strings; blank
// segments are dropped.
auto split_newick_stream(std::string_view text) -> std::vector<std::string>;

}  // namespace treeshape

#endif  // TREESHAPE_NEWICK_HPP_
