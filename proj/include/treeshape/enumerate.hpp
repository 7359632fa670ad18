#ifndef TREESHAPE_ENUMERATE_HPP_
#define TREESHAPE_ENUMERATE_HPP_

#include <cstdint>
#include <functional>

#include "treeshape/tree.hpp"

namespace treeshape {

inline constexpr int k_enumerate_min_n = 4;
// (2*10-5)!! = 2027025 unrooted and (2*10-3)!! = 34459425 rooted trees.
inline constexpr int k_enumerate_max_n = 10;

// (2n-5)!! unrooted or (2n-3)!! rooted labelled binary trees on n taxa.
auto labelled_tree_count(int n, Rootedness rootedness) -> std::uint64_t;

// Calls `visit` once for every labelled binary tree on taxa {1..n}. Trees are
// built by attaching taxa 3, 4, ..., n in that order to every edge of the
// previous tree, which reaches each labelled tree exactly once.
// Throws std::invalid_argument unless 4 <= n <= 10.
void enumerate_trees(int n, Rootedness rootedness,
                     const std::function<void(const PhyloTree&)>& visit);

}  // namespace treeshape

#endif  // TREESHAPE_ENUMERATE_HPP_
