#include "treeshape/oracle.hpp"

#include <map>
#include <stdexcept>

#include "treeshape/enumerate.hpp"

namespace treeshape {

namespace {

void require_range(int n, int max_n, const char* who) {
  if (n < k_oracle_min_n || n > max_n) {
    throw std::invalid_argument(std::string{who} + ": n must be in " +
                                std::to_string(k_oracle_min_n) + ".." + std::to_string(max_n) +
                                ", got " + std::to_string(n));
  }
}

void expand(const PhyloTree& tree, Model model, int n, const Rational& mass,
            std::map<std::pair<int, int>, Rational>& out) {
  if (tree.leaf_count() == n) {
    auto c = count_subtrees(tree);
    out[{c.a, c.b}] += mass;
    return;
  }
  auto choices = std::vector<Edge_id>{};
  for (auto e = 0; e < tree.edge_count(); ++e) {
    if (model == Model::pda || tree.is_pendant(e)) {
      choices.push_back(e);
    }
  }
  const auto step = Rational{mass / static_cast<long>(choices.size())};
  const auto next_taxon = tree.leaf_count() + 1;
  for (auto e : choices) {
    expand(attach_leaf(tree, e, next_taxon), model, n, step, out);
  }
}

}  // namespace

auto exact_by_tree_enumeration(int n, Rootedness rootedness) -> JointPmf {
  require_range(n, k_tree_enumeration_max_n, "exact_by_tree_enumeration");
  auto tally = std::map<std::pair<int, int>, long>{};
  auto total = 0L;
  enumerate_trees(n, rootedness, [&](const PhyloTree& tree) {
    auto c = count_subtrees(tree);
    ++tally[{c.a, c.b}];
    ++total;
  });
  auto pmf = JointPmf{Model::pda, rootedness, n, {}};
  for (const auto& [ab, count] : tally) {
    pmf.table.emplace(ab, make_rational(count, total));
  }
  return pmf;
}

auto exact_by_path_enumeration(Model model, int n, Rootedness rootedness) -> JointPmf {
  require_range(n, path_enumeration_max_n(model), "exact_by_path_enumeration");
  auto pmf = JointPmf{model, rootedness, n, {}};
  expand(PhyloTree::two_leaf(rootedness), model, n, Rational{1}, pmf.table);
  return pmf;
}

}  // namespace treeshape
