#ifndef TREESHAPE_MOMENTS_HPP_
#define TREESHAPE_MOMENTS_HPP_

// Means, variances and covariances of the pitchfork count A and the cherry
// count B, as exact rationals.
//
// closed_form() evaluates the closed-form expressions. Each expression is
// valid only from some n on; below that the field is empty rather than an
// extrapolation. Validity:
//                 E(A)   E(B)   V(A)   V(B)   Cov
//   PDA unrooted   6      4      6      4      6
//   PDA rooted     4      4      4      4      4
//   YHK unrooted   6      4      7      5      6
//   YHK rooted     4      4      7      5      6
//
// table_moments() recomputes the same quantities from exact distributions:
// the unrooted joint recursion (n >= 6), the rooted cherry law (B only), and
// brute-force enumeration for rooted joints when n is small enough.

#include <optional>
#include <string>
#include <vector>

#include "treeshape/exact_dist.hpp"
#include "treeshape/model.hpp"
#include "treeshape/rational.hpp"
#include "treeshape/tree.hpp"

namespace treeshape {

struct MomentSummary {
  Model model = Model::pda;
  Rootedness rootedness = Rootedness::unrooted;
  int n = 0;
  std::optional<Rational> mean_a;
  std::optional<Rational> mean_b;
  std::optional<Rational> var_a;
  std::optional<Rational> var_b;
  std::optional<Rational> cov_ab;
  // Empty when a variance or the covariance is unknown or a variance is 0.
  std::optional<double> corr_ab;
};

// Fills corr_ab from the other fields; exactly -1 or 1 when cov^2 = var_a var_b.
void fill_correlation(MomentSummary& summary);

auto closed_form(Model model, Rootedness rootedness, int n) -> MomentSummary;

auto moments_from_joint(const JointPmf& joint) -> MomentSummary;
// Only mean_b and var_b are set.
auto moments_from_cherry(const MarginalPmf& cherry) -> MomentSummary;

// Largest n for which table_moments fills the rooted A fields (by enumeration).
auto rooted_joint_table_max_n(Model model) -> int;

// Unrooted: from joint_unrooted (n >= 6). Rooted: B from cherry_pmf_rooted,
// and A, Cov as well when n <= rooted_joint_table_max_n(model).
// Throws std::invalid_argument when no table exists (unrooted n < 6).
auto table_moments(Model model, Rootedness rootedness, int n) -> MomentSummary;

// Closed form where defined, otherwise the table value where one exists.
auto best_moments(Model model, Rootedness rootedness, int n) -> MomentSummary;

// Unrooted correlation of (A_n, B_n), n >= 6; empty if undefined.
auto correlation(Model model, int n) -> std::optional<double>;
// Its exact square, for monotonicity checks.
auto correlation_squared(Model model, int n) -> Rational;

// E(Y_n) - E(Y*_n), n >= 6:
//   YHK  A: 4(2n-3)/((n-1)(n-2)(n-3))         B: 4/((n-1)(n-2))
//   PDA  A: 2n(n-1)(n-2)/((2n-3)(2n-5)(2n-7))  B: n(n-1)/((2n-3)(2n-5))
auto mean_gap(Model model, Statistic statistic, int n) -> Rational;

struct ComparisonCheck {
  std::string name;
  bool applies = false;  // the inequality is claimed at this n
  bool holds = false;    // the inequality is true at this n
};

struct ComparisonReport {
  int n = 0;
  std::vector<ComparisonCheck> checks;

  // True iff every check that applies also holds.
  auto consistent() const -> bool;
  auto find(const std::string& name) const -> const ComparisonCheck*;
};

// Rooted/unrooted and YHK/PDA inequalities between means, variances and
// covariances at one n >= 6.
auto comparison_report(int n) -> ComparisonReport;

struct RatioLimitRow {
  Model model = Model::pda;
  Rootedness rootedness = Rootedness::unrooted;
  std::vector<int> ns;
  std::vector<Rational> distance;  // |E(A_n)/E(B_n) - 1/2|
  bool decreasing = false;
};

struct RatioLimitReport {
  std::vector<RatioLimitRow> rows;
  auto all_decreasing() const -> bool;
};

// |E(A)/E(B) - 1/2| at n = 100, 1000, n_max for all four (model, rootedness)
// pairs. A row is decreasing if the distances strictly decrease or are all 0.
// Duplicate n values are dropped.
// Throws std::invalid_argument for n_max < 100.
auto ratio_limits_check(int n_max) -> RatioLimitReport;

}  // namespace treeshape

#endif  // TREESHAPE_MOMENTS_HPP_
