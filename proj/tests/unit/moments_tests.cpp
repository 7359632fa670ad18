#include <gtest/gtest.h>

#include "treeshape/exact_dist.hpp"
#include "treeshape/moments.hpp"

namespace treeshape {

namespace {

auto q(long num, long den = 1) -> Rational { return make_rational(num, den); }

void expect_field(const std::optional<Rational>& closed, const std::optional<Rational>& table,
                  const char* what, int n) {
  if (closed && table) {
    EXPECT_EQ(*closed, *table) << what << " n = " << n;
  }
}

void expect_agree(const MomentSummary& closed, const MomentSummary& table) {
  expect_field(closed.mean_a, table.mean_a, "mean_a", closed.n);
  expect_field(closed.mean_b, table.mean_b, "mean_b", closed.n);
  expect_field(closed.var_a, table.var_a, "var_a", closed.n);
  expect_field(closed.var_b, table.var_b, "var_b", closed.n);
  expect_field(closed.cov_ab, table.cov_ab, "cov_ab", closed.n);
}

}  // namespace

TEST(Moments_test, unrooted_closed_forms_match_tables) {
  for (auto model : {Model::yhk, Model::pda}) {
    auto rec = JointRecursion{model};
    for (auto n = 6; n <= 60; rec.advance(), ++n) {
      auto closed = closed_form(model, Rootedness::unrooted, n);
      auto table = moments_from_joint(rec.pmf());
      ASSERT_TRUE(table.var_a && table.cov_ab);
      expect_agree(closed, table);
    }
  }
}

TEST(Moments_test, rooted_closed_forms_match_oracle_tables) {
  for (auto model : {Model::yhk, Model::pda}) {
    for (auto n = 4; n <= 8; ++n) {
      expect_agree(closed_form(model, Rootedness::rooted, n),
                   table_moments(model, Rootedness::rooted, n));
    }
  }
}

TEST(Moments_test, rooted_cherry_moments_beyond_oracle) {
  for (auto model : {Model::yhk, Model::pda}) {
    for (auto n = 10; n <= 40; ++n) {
      auto table = table_moments(model, Rootedness::rooted, n);
      EXPECT_FALSE(table.mean_a.has_value());
      ASSERT_TRUE(table.mean_b && table.var_b);
      expect_agree(closed_form(model, Rootedness::rooted, n), table);
    }
  }
}

TEST(Moments_test, small_n_values) {
  auto yr6 = best_moments(Model::yhk, Rootedness::rooted, 6);
  ASSERT_TRUE(yr6.var_a);
  EXPECT_EQ(*yr6.var_a, q(2, 5));
  auto pr6 = best_moments(Model::pda, Rootedness::rooted, 6);
  ASSERT_TRUE(pr6.var_a);
  EXPECT_EQ(*pr6.var_a, q(104, 441));
  auto yu6 = best_moments(Model::yhk, Rootedness::unrooted, 6);
  EXPECT_EQ(*yu6.mean_a, q(8, 5));
  EXPECT_EQ(*yu6.mean_b, q(11, 5));
  EXPECT_EQ(*yu6.var_a, q(16, 25));
  EXPECT_EQ(*yu6.cov_ab, q(-8, 25));
  auto pu6 = best_moments(Model::pda, Rootedness::unrooted, 6);
  EXPECT_EQ(*pu6.mean_a, q(12, 7));
  EXPECT_EQ(*pu6.mean_b, q(15, 7));
}

TEST(Moments_test, closed_form_validity_ranges) {
  auto yu6 = closed_form(Model::yhk, Rootedness::unrooted, 6);
  EXPECT_FALSE(yu6.var_a.has_value());
  auto yu5 = closed_form(Model::yhk, Rootedness::unrooted, 5);
  EXPECT_FALSE(yu5.mean_a.has_value());
  EXPECT_TRUE(yu5.mean_b.has_value());
  auto pu4 = closed_form(Model::pda, Rootedness::unrooted, 4);
  EXPECT_TRUE(pu4.mean_b.has_value());
  EXPECT_FALSE(pu4.cov_ab.has_value());
  auto best = best_moments(Model::yhk, Rootedness::unrooted, 6);
  EXPECT_TRUE(best.var_a.has_value());
}

TEST(Moments_test, yhk_product_moment_from_summary) {
  auto s = best_moments(Model::yhk, Rootedness::unrooted, 7);
  EXPECT_EQ(*s.cov_ab + *s.mean_a * *s.mean_b, q(53, 15));
}

TEST(Moments_test, correlation_at_small_n_is_minus_one) {
  EXPECT_DOUBLE_EQ(*correlation(Model::yhk, 6), -1.0);
  EXPECT_DOUBLE_EQ(*correlation(Model::pda, 6), -1.0);
  EXPECT_DOUBLE_EQ(*correlation(Model::pda, 7), -1.0);
  EXPECT_EQ(correlation_squared(Model::yhk, 7), 1);
  EXPECT_THROW((void)correlation(Model::pda, 5), std::invalid_argument);
}

TEST(Moments_test, squared_correlation_decreases) {
  for (auto model : {Model::yhk, Model::pda}) {
    auto prev = correlation_squared(model, 7);
    for (auto n = 8; n <= 500; ++n) {
      auto cur = correlation_squared(model, n);
      ASSERT_LE(cur, prev) << to_string(model) << " n = " << n;
      prev = cur;
    }
    EXPECT_LT(*correlation(model, 500), 0.0);
  }
}

TEST(Moments_test, mean_gaps_match_moment_differences) {
  for (auto model : {Model::yhk, Model::pda}) {
    for (auto n = 6; n <= 80; ++n) {
      auto u = best_moments(model, Rootedness::unrooted, n);
      auto r = best_moments(model, Rootedness::rooted, n);
      EXPECT_EQ(mean_gap(model, Statistic::cherry, n), *u.mean_b - *r.mean_b);
      EXPECT_EQ(mean_gap(model, Statistic::pitchfork, n), *u.mean_a - *r.mean_a);
    }
  }
  EXPECT_THROW((void)mean_gap(Model::yhk, Statistic::cherry, 5), std::invalid_argument);
}

TEST(Moments_test, comparison_report_consistent) {
  for (auto n = 6; n <= 120; ++n) {
    auto report = comparison_report(n);
    for (const auto& c : report.checks) {
      EXPECT_TRUE(!c.applies || c.holds) << c.name << " n = " << n;
    }
  }
}

TEST(Moments_test, comparison_report_ranges) {
  auto six = comparison_report(6);
  ASSERT_NE(six.find("V_y(A*) > V_y(A)"), nullptr);
  EXPECT_FALSE(six.find("V_y(A*) > V_y(A)")->applies);
  EXPECT_TRUE(six.find("V_y(B*) > V_y(B)")->applies);
  auto eleven = comparison_report(11);
  EXPECT_FALSE(eleven.find("E_u(A) < E_y(A)")->applies);
  auto hundred = comparison_report(100);
  EXPECT_TRUE(hundred.find("E_u(A) < E_y(A)")->applies);
  EXPECT_TRUE(hundred.find("E_u(A) < E_y(A)")->holds);
  EXPECT_EQ(hundred.find("no such check"), nullptr);
  EXPECT_THROW((void)comparison_report(5), std::invalid_argument);
}

TEST(Moments_test, ratio_limits) {
  auto report = ratio_limits_check(5000);
  EXPECT_EQ(report.rows.size(), 4U);
  EXPECT_TRUE(report.all_decreasing());
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.ns, (std::vector<int>{100, 1000, 5000}));
  }
  EXPECT_EQ(ratio_limits_check(1000).rows.front().ns.size(), 2U);
  EXPECT_THROW((void)ratio_limits_check(99), std::invalid_argument);
}

TEST(Moments_test, table_moments_guards) {
  EXPECT_THROW((void)table_moments(Model::yhk, Rootedness::unrooted, 5), std::invalid_argument);
}

}  // namespace treeshape
