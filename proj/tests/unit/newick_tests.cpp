#include <gtest/gtest.h>

#include "test_trees.hpp"
#include "treeshape/generators.hpp"
#include "treeshape/newick.hpp"

namespace treeshape {

TEST(Newick_test, quartet) {
  auto t = parse_newick("((1,2),(3,4));");
  EXPECT_EQ(t.rootedness(), Rootedness::unrooted);
  EXPECT_EQ(t.leaf_count(), 4);
  EXPECT_EQ(t.edge_count(), 5);
  EXPECT_EQ(count_subtrees(t), (SubtreeCounts{0, 2, 4}));
  EXPECT_EQ(write_newick(t), "(1,2,(3,4));");
}

TEST(Newick_test, top_bifurcation_and_trifurcation_agree) {
  EXPECT_TRUE(same_tree(parse_newick("((1,2),(3,4));"), parse_newick("(1,2,(3,4));")));
  EXPECT_TRUE(same_tree(parse_newick("(((1,3),(4,8)),((2,(5,7)),6));"),
                        parse_newick(testing_support::k_fig1)));
}

TEST(Newick_test, rooted_marker) {
  auto t = parse_newick("(((1,2),3),4)R;");
  EXPECT_TRUE(t.is_rooted());
  EXPECT_EQ(t.edge_count(), 7);
  EXPECT_EQ(count_subtrees(t), (SubtreeCounts{1, 1, 4}));
  EXPECT_EQ(write_newick(t), "(((1,2),3),4)R;");
}

TEST(Newick_test, forced_rootedness) {
  auto t = parse_newick("(((1,2),3),4);", Rootedness::rooted);
  EXPECT_TRUE(t.is_rooted());
  EXPECT_EQ(count_subtrees(t), (SubtreeCounts{1, 1, 4}));
  auto u = parse_newick("(((1,2),3),4)R;", Rootedness::unrooted);
  EXPECT_FALSE(u.is_rooted());
  EXPECT_EQ(count_subtrees(u), (SubtreeCounts{0, 2, 4}));
}

TEST(Newick_test, string_labels_map_to_taxa_in_order) {
  auto parsed = parse_newick_with_names("((human,chimp),(gorilla,'orang utan'));");
  EXPECT_EQ(parsed.names,
            (std::vector<std::string>{"human", "chimp", "gorilla", "orang utan"}));
  EXPECT_EQ(write_newick(parsed.tree), "(1,2,(3,4));");
}

TEST(Newick_test, branch_lengths_comments_and_interior_labels_are_ignored) {
  auto t = parse_newick("[a tree] ((1:0.5,2:1e-3)0.9:2,(3:1,4[note]:1):0.1) ;\n");
  EXPECT_TRUE(same_tree(t, parse_newick("((1,2),(3,4));")));
}

TEST(Newick_test, syntax_errors_carry_positions) {
  try {
    (void)parse_newick("((1,2);");
    FAIL() << "expected a NewickError";
  } catch (const NewickError& err) {
    EXPECT_EQ(err.position(), 6U);
  }
  EXPECT_THROW((void)parse_newick("((1,2),(3,4))"), NewickError);
  EXPECT_THROW((void)parse_newick("((1,2),(3,4)); x"), NewickError);
  EXPECT_THROW((void)parse_newick("((1,2),(3,));"), NewickError);
  EXPECT_THROW((void)parse_newick("((1,2),(3,4):);"), NewickError);
  EXPECT_THROW((void)parse_newick("[open ((1,2),3);"), NewickError);
}

TEST(Newick_test, non_binary_and_duplicates_are_rejected) {
  EXPECT_THROW((void)parse_newick("((1,2,3),(4,5));"), NewickError);
  EXPECT_THROW((void)parse_newick("(1,2,3,4);"), NewickError);
  EXPECT_THROW((void)parse_newick("(1,2,3)R;"), NewickError);
  EXPECT_THROW((void)parse_newick("((1,2),(1,3));"), NewickError);
  EXPECT_THROW((void)parse_newick("((1,2),(01,3));"), NewickError);
  EXPECT_THROW((void)parse_newick("((a,b),(a,c));"), NewickError);
  EXPECT_THROW((void)parse_newick("(1);"), NewickError);
}

TEST(Newick_test, two_leaf_trees) {
  EXPECT_EQ(write_newick(PhyloTree::two_leaf(Rootedness::unrooted)), "(1,2);");
  EXPECT_EQ(write_newick(PhyloTree::two_leaf(Rootedness::rooted)), "(1,2)R;");
  auto t = parse_newick("(2,1);");
  EXPECT_EQ(t.edge_count(), 1);
  EXPECT_EQ(write_newick(t), "(1,2);");
}

TEST(Newick_test, round_trip_on_random_trees) {
  for (auto rootedness : {Rootedness::unrooted, Rootedness::rooted}) {
    for (auto n = 4; n <= 64; ++n) {
      for (auto i = 0; i < 100; ++i) {
        auto model = i % 2 == 0 ? Model::yhk : Model::pda;
        auto seed = derive_seed(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
        auto tree = grow(model, n, rootedness, seed).tree;
        auto text = write_newick(tree);
        auto back = parse_newick(text);
        ASSERT_EQ(write_newick(back), text);
        ASSERT_EQ(count_subtrees(back), count_subtrees(tree)) << text;
        ASSERT_EQ(back.rootedness(), rootedness);
      }
    }
  }
}

TEST(Newick_test, split_stream) {
  auto parts = split_newick_stream("(1,2,3);\n((1,2),(3,4));\n['x;y'] (1,2);\n\n");
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(write_newick(parse_newick(parts[2])), "(1,2);");
  auto tail = split_newick_stream("(1,2,3);(1,2");
  ASSERT_EQ(tail.size(), 2U);
  EXPECT_THROW((void)parse_newick(tail[1]), NewickError);
}

}  // namespace treeshape
