#include "treeshape/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace treeshape {

namespace {

void extend(const PhyloTree& tree, int n, const std::function<void(const PhyloTree&)>& visit) {
  const auto next = tree.leaf_count() + 1;
  if (next > n) {
    visit(tree);
    return;
  }
  for (auto e = 0; e < tree.edge_count(); ++e) {
    extend(attach_leaf(tree, e, next), n, visit);
  }
}

}  // namespace

auto labelled_tree_count(int n, Rootedness rootedness) -> std::uint64_t {
  auto count = std::uint64_t{1};
  const auto top = rootedness == Rootedness::rooted ? 2 * n - 3 : 2 * n - 5;
  for (auto k = top; k > 1; k -= 2) {
    count *= static_cast<std::uint64_t>(k);
  }
  return count;
}

void enumerate_trees(int n, Rootedness rootedness,
                     const std::function<void(const PhyloTree&)>& visit) {
  if (n < k_enumerate_min_n || n > k_enumerate_max_n) {
    throw std::invalid_argument("enumerate_trees: n must be in [" +
                                std::to_string(k_enumerate_min_n) + ", " +
                                std::to_string(k_enumerate_max_n) + "], got " + std::to_string(n));
  }
  extend(PhyloTree::two_leaf(rootedness, 1, 2), n, visit);
}

}  // namespace treeshape
