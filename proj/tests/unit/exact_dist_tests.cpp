#include <gtest/gtest.h>

#include "treeshape/exact_dist.hpp"

namespace treeshape {

namespace {

auto q(long num, long den = 1) -> Rational { return make_rational(num, den); }

}  // namespace

TEST(Exact_dist_test, six_leaf_base) {
  auto pda = joint_unrooted(Model::pda, 6);
  EXPECT_EQ(pda.table, (std::map<std::pair<int, int>, Rational>{{{2, 2}, q(6, 7)},
                                                                {{0, 3}, q(1, 7)}}));
  auto yhk = joint_unrooted(Model::yhk, 6);
  EXPECT_EQ(yhk.table, (std::map<std::pair<int, int>, Rational>{{{2, 2}, q(4, 5)},
                                                                {{0, 3}, q(1, 5)}}));
  EXPECT_EQ(pda, joint_unrooted_base(Model::pda));
  EXPECT_EQ(yhk, joint_unrooted_base(Model::yhk));
}

TEST(Exact_dist_test, joint_rejects_small_n) {
  EXPECT_THROW((void)joint_unrooted(Model::pda, 5), std::invalid_argument);
  auto rec = JointRecursion{Model::yhk};
  rec.advance_to(9);
  EXPECT_THROW(rec.advance_to(8), std::invalid_argument);
}

TEST(Exact_dist_test, joint_normalization_and_support) {
  for (auto model : {Model::yhk, Model::pda}) {
    auto rec = JointRecursion{model};
    for (auto n = 6; n <= 80; rec.advance(), ++n) {
      auto pmf = rec.pmf();
      ASSERT_EQ(pmf.n, n);
      ASSERT_EQ(pmf.total(), 1) << to_string(model) << " n = " << n;
      for (const auto& [ab, p] : pmf.table) {
        auto [a, b] = ab;
        ASSERT_GT(p, 0);
        ASSERT_GE(a, 0);
        ASSERT_LE(a, b);
        ASSERT_GE(b, 2);
        ASSERT_LE(2 * b, n);
        ASSERT_LE(3 * a, n);
        ASSERT_GE(n - a - 2 * b, 0);
      }
    }
  }
}

TEST(Exact_dist_test, joint_by_steps_equals_joint_by_call) {
  auto rec = JointRecursion{Model::pda};
  rec.advance_to(20);
  EXPECT_EQ(rec.pmf(), joint_unrooted(Model::pda, 20));
}

TEST(Exact_dist_test, marginals_of_six_leaf_laws) {
  auto cherry = marginal_from_joint(joint_unrooted(Model::pda, 6), Statistic::cherry);
  EXPECT_EQ(cherry.table, (std::map<int, Rational>{{2, q(6, 7)}, {3, q(1, 7)}}));
  auto fork = marginal_from_joint(joint_unrooted(Model::yhk, 6), Statistic::pitchfork);
  EXPECT_EQ(fork.table, (std::map<int, Rational>{{0, q(1, 5)}, {2, q(4, 5)}}));
  EXPECT_EQ(fork.statistic, Statistic::pitchfork);
  EXPECT_EQ(fork.total(), 1);
}

TEST(Exact_dist_test, cherry_marginal_of_joint_equals_cherry_law) {
  for (auto model : {Model::yhk, Model::pda}) {
    auto rec = JointRecursion{model};
    for (auto n = 6; n <= 60; rec.advance(), ++n) {
      EXPECT_EQ(marginal_from_joint(rec.pmf(), Statistic::cherry).table,
                cherry_pmf_unrooted(model, n).table);
    }
  }
}

TEST(Exact_dist_test, pda_cherry_spot_values) {
  auto six = cherry_pmf_unrooted(Model::pda, 6);
  EXPECT_EQ(six.at(2), q(6, 7));
  EXPECT_EQ(six.at(3), q(1, 7));
  auto eight = cherry_pmf_unrooted(Model::pda, 8);
  EXPECT_EQ(eight.at(2), q(16, 33));
  EXPECT_EQ(eight.at(3), q(16, 33));
  EXPECT_EQ(pda_cherry_closed_form(8, 2), q(16, 33));
  EXPECT_EQ(pda_cherry_closed_form(8, 1), 0);
  EXPECT_EQ(pda_cherry_closed_form(8, 5), 0);
}

TEST(Exact_dist_test, small_cherry_laws) {
  EXPECT_EQ(cherry_pmf_unrooted(Model::yhk, 4).table, (std::map<int, Rational>{{2, q(1)}}));
  EXPECT_EQ(cherry_pmf_unrooted(Model::yhk, 5).table, (std::map<int, Rational>{{2, q(1)}}));
  EXPECT_EQ(cherry_pmf_unrooted(Model::pda, 4).table, (std::map<int, Rational>{{2, q(1)}}));
  EXPECT_EQ(cherry_pmf_rooted(Model::pda, 4).table,
            (std::map<int, Rational>{{1, q(4, 5)}, {2, q(1, 5)}}));
  EXPECT_EQ(cherry_pmf_rooted(Model::yhk, 2).table, (std::map<int, Rational>{{1, q(1)}}));
  EXPECT_EQ(cherry_pmf_rooted(Model::yhk, 5).at(1), q(1, 3));
  EXPECT_THROW((void)cherry_pmf_unrooted(Model::yhk, 3), std::invalid_argument);
  EXPECT_THROW((void)cherry_pmf_rooted(Model::pda, 3), std::invalid_argument);
  EXPECT_THROW((void)cherry_pmf_rooted(Model::yhk, 1), std::invalid_argument);
  EXPECT_THROW((CherryRecursion{Model::pda, Rootedness::rooted}), std::invalid_argument);
}

TEST(Exact_dist_test, pda_closed_form_equals_recursion) {
  auto rec = CherryRecursion{Model::pda, Rootedness::unrooted};
  for (auto n = 4; n <= 128; rec.advance(), ++n) {
    ASSERT_EQ(rec.pmf(), cherry_pmf_unrooted(Model::pda, n)) << "n = " << n;
    ASSERT_EQ(rec.pmf(), cherry_pmf_unrooted_recursive(Model::pda, n));
  }
}

TEST(Exact_dist_test, rooted_pda_closed_form_equals_mixture) {
  for (auto n = 4; n <= 128; ++n) {
    auto mixture = pda_rooted_from_unrooted(cherry_pmf_unrooted(Model::pda, n));
    auto direct = cherry_pmf_rooted(Model::pda, n);
    ASSERT_EQ(mixture, direct) << "n = " << n;
    ASSERT_EQ(direct.total(), 1);
    for (auto k = 1; 2 * k <= n; ++k) {
      ASSERT_EQ(direct.at(k), pda_rooted_cherry_closed_form(n, k));
    }
  }
  EXPECT_THROW((void)pda_rooted_from_unrooted(cherry_pmf_unrooted(Model::yhk, 6)),
               std::invalid_argument);
}

TEST(Exact_dist_test, rooted_yhk_boundary_mass) {
  for (auto n = 2; n <= 40; ++n) {
    auto law = cherry_pmf_rooted(Model::yhk, n);
    ASSERT_EQ(law.total(), 1);
    auto expected = Rational{pow2(static_cast<unsigned long>(n - 2))};
    expected /= Rational{factorial(static_cast<unsigned long>(n - 1))};
    ASSERT_EQ(law.at(1), expected) << "n = " << n;
  }
}

TEST(Exact_dist_test, cherry_supports) {
  for (auto n = 4; n <= 50; ++n) {
    for (auto model : {Model::yhk, Model::pda}) {
      auto u = cherry_pmf_unrooted(model, n);
      EXPECT_EQ(u.table.begin()->first, 2);
      EXPECT_EQ(u.table.rbegin()->first, n / 2);
      EXPECT_EQ(u.total(), 1);
      auto r = cherry_pmf_rooted(model, n);
      EXPECT_EQ(r.table.begin()->first, 1);
      EXPECT_EQ(r.table.rbegin()->first, n / 2);
    }
  }
}

TEST(Exact_dist_test, functional_expectation_examples) {
  auto b = [](int, int bb) { return Rational{bb}; };
  auto one = [](int, int) { return Rational{1}; };
  auto ab = [](int a, int bb) { return Rational{a * bb}; };
  EXPECT_EQ(functional_expectation(Model::pda, 7, b), q(7, 3));
  EXPECT_EQ(functional_expectation(Model::pda, 6, b), q(15, 7));
  EXPECT_EQ(functional_expectation(Model::yhk, 6, b), q(11, 5));
  EXPECT_EQ(functional_expectation(Model::yhk, 9, one), 1);
  EXPECT_EQ(functional_expectation(Model::yhk, 7, ab), q(53, 15));
  EXPECT_THROW((void)functional_expectation(Model::yhk, 5, one), std::invalid_argument);
}

TEST(Exact_dist_test, yhk_product_moment_formula) {
  for (long n = 7; n <= 40; ++n) {
    auto expected = make_rational(5 * n * n * n * n - 27 * n * n * n + 40 * n * n + 288 * n - 360,
                                  90 * (n - 3) * (n - 2));
    EXPECT_EQ(functional_expectation(Model::yhk, static_cast<int>(n),
                                     [](int a, int b) { return Rational{a * b}; }),
              expected)
        << "n = " << n;
  }
}

TEST(Exact_dist_test, functional_recursion_for_nonlinear_functions) {
  // Both routes are compared inside functional_expectation.
  auto f = [](int a, int b) -> Rational { return Rational{a * a * a - 2 * b * b + 7} / (b + 1); };
  for (auto model : {Model::yhk, Model::pda}) {
    for (auto n = 7; n <= 30; ++n) {
      EXPECT_NO_THROW((void)functional_expectation(model, n, f));
    }
  }
}

}  // namespace treeshape
