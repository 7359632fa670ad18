#ifndef TREESHAPE_ORACLE_HPP_
#define TREESHAPE_ORACLE_HPP_

// Brute-force joint laws of (A, B) for small n, used as ground truth for the
// recursions in exact_dist. Nothing here shares code with those recursions.
//
// Tree enumeration (PDA only): PDA is the uniform law on labelled trees, so
// every tree from enumerate_trees gets weight 1 / (number of trees).
//
// Path enumeration (both models): expands every sequence of edge choices of
// the growth process, each step weighted 1/(#edges) (PDA) or 1/(#pendant
// edges) (YHK). Taxa are attached in the fixed order 1..n. The YHK process
// also draws a random insertion order, but relabelling leaves does not change
// A or B, so averaging over orders would give the same table.

#include "treeshape/exact_dist.hpp"
#include "treeshape/tree.hpp"

namespace treeshape {

inline constexpr int k_oracle_min_n = 4;
// (2*9-5)!! = 135135 unrooted and (2*9-3)!! = 2027025 rooted trees.
inline constexpr int k_tree_enumeration_max_n = 9;
// YHK: 8!/2 = 20160 unrooted paths (8! = 40320 rooted) at n = 9.
inline constexpr int k_yhk_path_max_n = 9;
// PDA: 11!! = 10395 unrooted paths (13!! = 135135 rooted) at n = 8.
inline constexpr int k_pda_path_max_n = 8;

// Throws std::invalid_argument unless 4 <= n <= 9.
auto exact_by_tree_enumeration(int n, Rootedness rootedness) -> JointPmf;

// Throws std::invalid_argument unless 4 <= n <= 9 (YHK) or 4 <= n <= 8 (PDA).
auto exact_by_path_enumeration(Model model, int n, Rootedness rootedness) -> JointPmf;

// Largest n accepted by exact_by_path_enumeration for this model.
constexpr auto path_enumeration_max_n(Model model) -> int {
  return model == Model::yhk ? k_yhk_path_max_n : k_pda_path_max_n;
}

}  // namespace treeshape

#endif  // TREESHAPE_ORACLE_HPP_
