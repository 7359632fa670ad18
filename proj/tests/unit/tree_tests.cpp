#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "test_trees.hpp"
#include "treeshape/enumerate.hpp"
#include "treeshape/newick.hpp"
#include "treeshape/tree.hpp"

namespace treeshape {

using testing_support::edge_splitting;
using testing_support::k_caterpillar6;
using testing_support::k_fig1;
using testing_support::k_fig1_rooted;
using testing_support::k_snowflake6;
using testing_support::pendant_edge;

TEST(Tree_test, two_leaf_shapes) {
  auto u = PhyloTree::two_leaf(Rootedness::unrooted);
  EXPECT_EQ(u.leaf_count(), 2);
  EXPECT_EQ(u.edge_count(), 1);
  EXPECT_FALSE(u.root().has_value());

  auto r = PhyloTree::two_leaf(Rootedness::rooted);
  EXPECT_EQ(r.leaf_count(), 2);
  EXPECT_EQ(r.edge_count(), 3);  // 2n - 1 with the degree-one root
  ASSERT_TRUE(r.root().has_value());
  EXPECT_EQ(r.degree(*r.root()), 1);
  EXPECT_FALSE(r.is_leaf(*r.root()));
  r.validate();
}

TEST(Tree_test, attach_to_two_leaf_tree_gives_the_three_leaf_star) {
  auto t = attach_leaf(PhyloTree::two_leaf(Rootedness::unrooted), 0, 3);
  t.validate();
  EXPECT_EQ(t.leaf_count(), 3);
  EXPECT_EQ(t.edge_count(), 3);
  EXPECT_EQ(write_newick(t), "(1,2,3);");
}

TEST(Tree_test, attach_adds_two_edges) {
  auto t = parse_newick(k_fig1);
  for (auto e = 0; e < t.edge_count(); ++e) {
    auto bigger = attach_leaf(t, e, 9);
    bigger.validate();
    EXPECT_EQ(bigger.edge_count(), t.edge_count() + 2);
    EXPECT_EQ(bigger.edge_count(), 2 * 9 - 3);
  }
}

TEST(Tree_test, attach_on_backbone_edge_reproduces_the_nine_leaf_example) {
  auto t = parse_newick(k_fig1);
  auto e11 = edge_splitting(t, {2, 5, 6, 7});
  ASSERT_GE(e11, 0);
  auto t9 = attach_leaf(t, e11, 9);
  EXPECT_TRUE(same_tree(t9, parse_newick("((1,3),(4,8),(((2,(5,7)),6),9));")));
  auto before = count_subtrees(t);
  EXPECT_EQ(count_subtrees(t9), (SubtreeCounts{before.a, before.b, 9}));
}

TEST(Tree_test, attach_errors) {
  auto t = parse_newick(k_fig1);
  EXPECT_THROW((void)attach_leaf(t, t.edge_count(), 9), std::invalid_argument);
  EXPECT_THROW((void)attach_leaf(t, -1, 9), std::invalid_argument);
  EXPECT_THROW((void)attach_leaf(t, 0, 5), std::invalid_argument);
}

TEST(Tree_test, attach_keeps_root_edge_at_the_root) {
  auto r = PhyloTree::two_leaf(Rootedness::rooted);
  auto root_edge = r.incident_edges(*r.root())[0];
  auto t = attach_leaf(r, root_edge, 3);
  t.validate();
  EXPECT_EQ(t.incident_edges(*t.root())[0], root_edge);
  EXPECT_EQ(write_newick(t), "((1,2),3)R;");
}

TEST(Tree_test, deroot_recovers_the_unrooted_tree) {
  auto rooted = parse_newick(k_fig1_rooted);
  ASSERT_TRUE(rooted.is_rooted());
  EXPECT_EQ(rooted.edge_count(), 2 * 8 - 1);
  auto t = deroot(rooted);
  t.validate();
  EXPECT_EQ(t.edge_count(), 2 * 8 - 3);
  EXPECT_TRUE(same_tree(t, parse_newick(k_fig1)));
}

TEST(Tree_test, deroot_two_leaf_tree) {
  auto t = deroot(PhyloTree::two_leaf(Rootedness::rooted));
  EXPECT_EQ(t.rootedness(), Rootedness::unrooted);
  EXPECT_EQ(t.edge_count(), 1);
  EXPECT_EQ(t.leaf_count(), 2);
}

TEST(Tree_test, deroot_rejects_unrooted) {
  EXPECT_THROW((void)deroot(parse_newick(k_fig1)), std::invalid_argument);
}

TEST(Tree_test, deroot_keeps_leaf_set_on_all_rooted_six_leaf_trees) {
  enumerate_trees(6, Rootedness::rooted, [](const PhyloTree& rooted) {
    auto t = deroot(rooted);
    t.validate();
    EXPECT_EQ(t.taxa(), rooted.taxa());
    EXPECT_EQ(t.edge_count(), rooted.edge_count() - 2);
  });
}

TEST(Tree_test, deroot_count_change_is_measured) {
  // Not a claim about the models; recorded for reference.
  auto max_da = 0;
  auto max_db = 0;
  enumerate_trees(7, Rootedness::rooted, [&](const PhyloTree& rooted) {
    auto before = count_subtrees(rooted);
    auto after = count_subtrees(deroot(rooted));
    max_da = std::max(max_da, std::abs(after.a - before.a));
    max_db = std::max(max_db, std::abs(after.b - before.b));
  });
  RecordProperty("max_abs_delta_a_n7", max_da);
  RecordProperty("max_abs_delta_b_n7", max_db);
  SUCCEED();
}

TEST(Tree_test, counts_of_reference_trees) {
  EXPECT_EQ(count_subtrees(parse_newick(k_fig1)), (SubtreeCounts{1, 3, 8}));
  EXPECT_EQ(count_subtrees(parse_newick("((1,2),(3,4));")), (SubtreeCounts{0, 2, 4}));
  EXPECT_EQ(count_subtrees(parse_newick(k_caterpillar6)), (SubtreeCounts{2, 2, 6}));
  EXPECT_EQ(count_subtrees(parse_newick(k_snowflake6)), (SubtreeCounts{0, 3, 6}));
  EXPECT_EQ(count_subtrees(parse_newick("(((1,2),3),4)R;")), (SubtreeCounts{1, 1, 4}));
  EXPECT_EQ(count_subtrees(parse_newick("((1,2),(3,4))R;")), (SubtreeCounts{0, 2, 4}));
  EXPECT_EQ(count_subtrees(PhyloTree::two_leaf(Rootedness::rooted)), (SubtreeCounts{0, 1, 2}));
}

TEST(Tree_test, five_leaf_caterpillar_has_two_pitchforks_under_the_cut_rule) {
  // Both interior cuts leave a three-leaf side.
  EXPECT_EQ(count_subtrees(parse_newick("(1,2,(3,(4,5)));")), (SubtreeCounts{2, 2, 5}));
}

TEST(Tree_test, six_leaf_trees_take_only_two_count_values) {
  auto seen = std::set<std::pair<int, int>>{};
  enumerate_trees(6, Rootedness::unrooted, [&](const PhyloTree& t) {
    auto c = count_subtrees(t);
    seen.insert({c.a, c.b});
  });
  EXPECT_EQ(seen, (std::set<std::pair<int, int>>{{2, 2}, {0, 3}}));
}

TEST(Tree_test, classify_reference_tree) {
  auto t = parse_newick(k_fig1);
  auto cls = classify_edges(t);
  EXPECT_EQ(cls.counts, (EdgeClassCounts{4, 1, 2, 1, 2, 3}));
  EXPECT_EQ(cls.counts.total(), 2 * 8 - 3);

  auto pendant = [&](Taxon x) { return cls.class_of[static_cast<std::size_t>(pendant_edge(t, x))]; };
  for (auto x : {1, 3, 4, 8}) {
    EXPECT_EQ(pendant(x), EdgeClass::pendant_essential_cherry) << x;
  }
  EXPECT_EQ(pendant(2), EdgeClass::pendant_pitchfork);
  EXPECT_EQ(pendant(5), EdgeClass::pendant_cherry_pitchfork);
  EXPECT_EQ(pendant(7), EdgeClass::pendant_cherry_pitchfork);
  EXPECT_EQ(pendant(6), EdgeClass::pendant_independent);
  auto interior = [&](std::set<Taxon> side) {
    return cls.class_of[static_cast<std::size_t>(edge_splitting(t, side))];
  };
  EXPECT_EQ(interior({1, 3}), EdgeClass::interior_essential_cherry);
  EXPECT_EQ(interior({4, 8}), EdgeClass::interior_essential_cherry);
  EXPECT_EQ(interior({5, 7}), EdgeClass::interior_other);
  EXPECT_EQ(interior({2, 5, 7}), EdgeClass::interior_other);
  EXPECT_EQ(interior({2, 5, 6, 7}), EdgeClass::interior_other);
}

TEST(Tree_test, classify_snowflake) {
  auto cls = classify_edges(parse_newick(k_snowflake6));
  EXPECT_EQ(cls.counts, (EdgeClassCounts{6, 0, 0, 0, 3, 0}));
  EXPECT_EQ(cls.counts.total(), 9);
}

TEST(Tree_test, classify_rejects_small_or_rooted_trees) {
  EXPECT_THROW((void)classify_edges(parse_newick("(1,2,(3,(4,5)));")), std::invalid_argument);
  EXPECT_THROW((void)classify_edges(parse_newick(k_fig1_rooted)), std::invalid_argument);
}

TEST(Tree_test, class_sizes_match_count_formulas_exhaustively) {
  for (auto n = 6; n <= 9; ++n) {
    auto trees = 0;
    enumerate_trees(n, Rootedness::unrooted, [&](const PhyloTree& t) {
      auto counts = count_subtrees(t);
      auto cls = classify_edges(t);
      ASSERT_EQ(cls.counts, class_counts_from(counts)) << write_newick(t);
      ASSERT_EQ(cls.counts.total(), 2 * n - 3);
      ASSERT_LE(counts.a, counts.b);
      ASSERT_LE(3 * counts.a, n);
      ASSERT_GE(counts.b, 2);
      ASSERT_LE(2 * counts.b, n);
      ++trees;
    });
    EXPECT_EQ(trees, static_cast<int>(labelled_tree_count(n, Rootedness::unrooted)));
  }
}

TEST(Tree_test, increments_on_reference_tree) {
  auto t = parse_newick(k_fig1);
  EXPECT_EQ(increment_for_edge(t, pendant_edge(t, 2)), (CountIncrement{-1, 1}));
  EXPECT_EQ(increment_for_edge(t, pendant_edge(t, 6)), (CountIncrement{0, 1}));
  EXPECT_EQ(increment_for_edge(t, pendant_edge(t, 1)), (CountIncrement{1, 0}));
  EXPECT_EQ(increment_for_edge(t, edge_splitting(t, {1, 3})), (CountIncrement{1, 0}));
  EXPECT_EQ(increment_for_edge(t, pendant_edge(t, 5)), (CountIncrement{0, 0}));
  EXPECT_EQ(increment_for_edge(t, edge_splitting(t, {2, 5, 6, 7})), (CountIncrement{0, 0}));
  EXPECT_THROW((void)increment_for_edge(t, 99), std::invalid_argument);
}

TEST(Tree_test, increments_equal_recount_differences_exhaustively) {
  for (auto n = 6; n <= 8; ++n) {
    enumerate_trees(n, Rootedness::unrooted, [&](const PhyloTree& t) {
      auto before = count_subtrees(t);
      for (auto e = 0; e < t.edge_count(); ++e) {
        auto after = count_subtrees(attach_leaf(t, e, n + 1));
        auto inc = increment_for_edge(t, e);
        ASSERT_EQ(after.a - before.a, inc.delta_a) << write_newick(t) << " edge " << e;
        ASSERT_EQ(after.b - before.b, inc.delta_b) << write_newick(t) << " edge " << e;
      }
    });
  }
}

TEST(Tree_test, from_edges_rejects_bad_input) {
  // A vertex of degree two.
  EXPECT_THROW((void)PhyloTree::from_edges(Rootedness::unrooted, 3, {{0, 1}, {1, 2}},
                                           {{0, 1}, {2, 2}}),
               std::invalid_argument);
  // A cycle.
  EXPECT_THROW((void)PhyloTree::from_edges(Rootedness::unrooted, 4,
                                           {{0, 1}, {0, 2}, {1, 2}, {0, 3}},
                                           {{3, 1}, {1, 2}, {2, 3}}),
               std::invalid_argument);
}

}  // namespace treeshape
