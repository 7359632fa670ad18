#include "treeshape/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "treeshape/oracle.hpp"

namespace treeshape {

namespace {

using Field = std::optional<Rational>;

auto when(bool valid, const std::function<Rational()>& value) -> Field {
  return valid ? Field{value()} : std::nullopt;
}

auto blank(Model model, Rootedness rootedness, int n) -> MomentSummary {
  auto s = MomentSummary{};
  s.model = model;
  s.rootedness = rootedness;
  s.n = n;
  return s;
}

auto sq(const Rational& x) -> Rational { return x * x; }

auto pda_unrooted(long n) -> MomentSummary {
  const auto q = Rational{n};
  auto s = blank(Model::pda, Rootedness::unrooted, static_cast<int>(n));
  s.mean_a = when(n >= 6, [&] {
    return Rational{q * (q - 1) * (q - 2) / (2 * (2 * q - 5) * (2 * q - 7))};
  });
  s.mean_b = when(n >= 4, [&] { return Rational{q * (q - 1) / (2 * (2 * q - 5))}; });
  s.var_a = when(n >= 6, [&] {
    auto poly = Rational{4 * q * q * q * q - 76 * q * q * q + 527 * q * q - 1555 * q + 1610};
    return Rational{3 * q * (q - 1) * (q - 2) * poly /
                    (4 * sq(2 * q - 5) * sq(2 * q - 7) * (2 * q - 9) * (2 * q - 11))};
  });
  s.var_b = when(n >= 4, [&] {
    return Rational{q * (q - 1) * (q - 4) * (q - 5) / (2 * sq(2 * q - 5) * (2 * q - 7))};
  });
  s.cov_ab = when(n >= 6, [&] {
    return Rational{-3 * q * (q - 1) * (q - 2) * (q - 5) /
                    (2 * sq(2 * q - 5) * (2 * q - 7) * (2 * q - 9))};
  });
  return s;
}

auto pda_rooted(long n) -> MomentSummary {
  const auto q = Rational{n};
  const auto ok = n >= 4;
  auto s = blank(Model::pda, Rootedness::rooted, static_cast<int>(n));
  s.mean_a = when(ok, [&] {
    return Rational{q * (q - 1) * (q - 2) / (2 * (2 * q - 3) * (2 * q - 5))};
  });
  s.mean_b = when(ok, [&] { return Rational{q * (q - 1) / (2 * (2 * q - 3))}; });
  s.var_a = when(ok, [&] {
    auto poly = Rational{4 * q * q * q - 40 * q * q + 123 * q - 110};
    return Rational{3 * q * (q - 1) * (q - 2) * (q - 3) * poly /
                    (4 * sq(2 * q - 3) * sq(2 * q - 5) * (2 * q - 7) * (2 * q - 9))};
  });
  s.var_b = when(ok, [&] {
    return Rational{q * (q - 1) * (q - 2) * (q - 3) / (2 * sq(2 * q - 3) * (2 * q - 5))};
  });
  s.cov_ab = when(ok, [&] {
    return Rational{-q * (q - 1) * (q - 2) * (q - 3) /
                    (2 * sq(2 * q - 3) * (2 * q - 5) * (2 * q - 7))};
  });
  return s;
}

auto yhk_unrooted(long n) -> MomentSummary {
  const auto q = Rational{n};
  auto s = blank(Model::yhk, Rootedness::unrooted, static_cast<int>(n));
  s.mean_a = when(n >= 6, [&] {
    return Rational{q / 6 + 4 * (2 * q - 3) / ((q - 1) * (q - 2) * (q - 3))};
  });
  s.mean_b = when(n >= 4, [&] { return Rational{q / 3 + 4 / ((q - 1) * (q - 2))}; });
  s.var_a = when(n >= 7, [&] {
    return Rational{23 * q / 420 -
                    16 * sq(2 * q - 3) / (sq(q - 1) * sq(q - 2) * sq(q - 3))};
  });
  s.var_b = when(n >= 5, [&] {
    return Rational{2 * q / 45 - 4 * (q * q - 3 * q + 14) / (3 * sq(q - 1) * sq(q - 2))};
  });
  s.cov_ab = when(n >= 6, [&] {
    return Rational{-q / 45 - 4 * (q * q * q - 6 * q * q + 35 * q - 42) /
                                  (3 * sq(q - 1) * sq(q - 2) * (q - 3))};
  });
  return s;
}

auto yhk_rooted(long n) -> MomentSummary {
  const auto q = Rational{n};
  auto s = blank(Model::yhk, Rootedness::rooted, static_cast<int>(n));
  s.mean_a = when(n >= 4, [&] { return Rational{q / 6}; });
  s.mean_b = when(n >= 4, [&] { return Rational{q / 3}; });
  s.var_a = when(n >= 7, [&] { return Rational{23 * q / 420}; });
  s.var_b = when(n >= 5, [&] { return Rational{2 * q / 45}; });
  s.cov_ab = when(n >= 6, [&] { return Rational{-q / 45}; });
  return s;
}

auto fill_from(Field& target, const Field& source) {
  if (!target && source) {
    target = source;
  }
}

}  // namespace

void fill_correlation(MomentSummary& s) {
  s.corr_ab.reset();
  if (!s.var_a || !s.var_b || !s.cov_ab) {
    return;
  }
  const auto denom = Rational{*s.var_a * *s.var_b};
  if (sgn(denom) <= 0) {
    return;
  }
  const auto sign = sgn(*s.cov_ab) < 0 ? -1.0 : 1.0;
  const auto rho2 = Rational{*s.cov_ab * *s.cov_ab / denom};
  s.corr_ab = rho2 == 1 ? sign : sign * std::sqrt(to_double(rho2));
}

auto closed_form(Model model, Rootedness rootedness, int n) -> MomentSummary {
  auto s = model == Model::pda
               ? (rootedness == Rootedness::unrooted ? pda_unrooted(n) : pda_rooted(n))
               : (rootedness == Rootedness::unrooted ? yhk_unrooted(n) : yhk_rooted(n));
  fill_correlation(s);
  return s;
}

auto moments_from_joint(const JointPmf& joint) -> MomentSummary {
  auto ea = Rational{0};
  auto eb = Rational{0};
  auto eaa = Rational{0};
  auto ebb = Rational{0};
  auto eab = Rational{0};
  for (const auto& [ab, p] : joint.table) {
    const auto a = static_cast<long>(ab.first);
    const auto b = static_cast<long>(ab.second);
    ea += a * p;
    eb += b * p;
    eaa += a * a * p;
    ebb += b * b * p;
    eab += a * b * p;
  }
  auto s = blank(joint.model, joint.rootedness, joint.n);
  s.mean_a = ea;
  s.mean_b = eb;
  s.var_a = Rational{eaa - ea * ea};
  s.var_b = Rational{ebb - eb * eb};
  s.cov_ab = Rational{eab - ea * eb};
  fill_correlation(s);
  return s;
}

auto moments_from_cherry(const MarginalPmf& cherry) -> MomentSummary {
  if (cherry.statistic != Statistic::cherry) {
    throw std::invalid_argument("moments_from_cherry: expects a cherry law");
  }
  auto eb = Rational{0};
  auto ebb = Rational{0};
  for (const auto& [k, p] : cherry.table) {
    const auto b = static_cast<long>(k);
    eb += b * p;
    ebb += b * b * p;
  }
  auto s = blank(cherry.model, cherry.rootedness, cherry.n);
  s.mean_b = eb;
  s.var_b = Rational{ebb - eb * eb};
  return s;
}

auto rooted_joint_table_max_n(Model model) -> int {
  return model == Model::yhk ? k_yhk_path_max_n : k_tree_enumeration_max_n;
}

auto table_moments(Model model, Rootedness rootedness, int n) -> MomentSummary {
  if (rootedness == Rootedness::unrooted) {
    if (n < 6) {
      throw std::invalid_argument("table_moments: unrooted tables start at n = 6");
    }
    return moments_from_joint(joint_unrooted(model, n));
  }
  if (n >= k_oracle_min_n && n <= rooted_joint_table_max_n(model)) {
    auto joint = model == Model::yhk ? exact_by_path_enumeration(model, n, rootedness)
                                     : exact_by_tree_enumeration(n, rootedness);
    return moments_from_joint(joint);
  }
  auto s = moments_from_cherry(cherry_pmf_rooted(model, n));
  return s;
}

auto best_moments(Model model, Rootedness rootedness, int n) -> MomentSummary {
  auto s = closed_form(model, rootedness, n);
  if (s.mean_a && s.mean_b && s.var_a && s.var_b && s.cov_ab) {
    return s;
  }
  const auto has_table = rootedness == Rootedness::unrooted
                             ? n >= 6
                             : n >= (model == Model::yhk ? 2 : 4);
  if (!has_table) {
    return s;
  }
  auto t = table_moments(model, rootedness, n);
  fill_from(s.mean_a, t.mean_a);
  fill_from(s.mean_b, t.mean_b);
  fill_from(s.var_a, t.var_a);
  fill_from(s.var_b, t.var_b);
  fill_from(s.cov_ab, t.cov_ab);
  fill_correlation(s);
  return s;
}

auto correlation(Model model, int n) -> std::optional<double> {
  if (n < 6) {
    throw std::invalid_argument("correlation: n must be at least 6");
  }
  return best_moments(model, Rootedness::unrooted, n).corr_ab;
}

auto correlation_squared(Model model, int n) -> Rational {
  if (n < 6) {
    throw std::invalid_argument("correlation_squared: n must be at least 6");
  }
  auto s = best_moments(model, Rootedness::unrooted, n);
  if (!s.var_a || !s.var_b || !s.cov_ab || sgn(*s.var_a) <= 0 || sgn(*s.var_b) <= 0) {
    throw std::domain_error("correlation_squared: correlation undefined at n = " +
                            std::to_string(n));
  }
  return *s.cov_ab * *s.cov_ab / (*s.var_a * *s.var_b);
}

auto mean_gap(Model model, Statistic statistic, int n) -> Rational {
  if (n < 6) {
    throw std::invalid_argument("mean_gap: n must be at least 6");
  }
  const auto q = Rational{n};
  if (model == Model::yhk) {
    return statistic == Statistic::pitchfork
               ? Rational{4 * (2 * q - 3) / ((q - 1) * (q - 2) * (q - 3))}
               : Rational{4 / ((q - 1) * (q - 2))};
  }
  return statistic == Statistic::pitchfork
             ? Rational{2 * q * (q - 1) * (q - 2) / ((2 * q - 3) * (2 * q - 5) * (2 * q - 7))}
             : Rational{q * (q - 1) / ((2 * q - 3) * (2 * q - 5))};
}

auto ComparisonReport::consistent() const -> bool {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ComparisonCheck& c) { return !c.applies || c.holds; });
}

auto ComparisonReport::find(const std::string& name) const -> const ComparisonCheck* {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const ComparisonCheck& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

auto comparison_report(int n) -> ComparisonReport {
  if (n < 6) {
    throw std::invalid_argument("comparison_report: n must be at least 6");
  }
  const auto yu = best_moments(Model::yhk, Rootedness::unrooted, n);
  const auto yr = best_moments(Model::yhk, Rootedness::rooted, n);
  const auto pu = best_moments(Model::pda, Rootedness::unrooted, n);
  const auto pr = best_moments(Model::pda, Rootedness::rooted, n);
  auto report = ComparisonReport{n, {}};
  auto add = [&](std::string name, bool applies, bool holds) {
    report.checks.push_back({std::move(name), applies, holds});
  };
  const auto four_thirds = make_rational(4, 3);

  // YHK against PDA.
  struct MeanPair {
    std::string label;
    Rational pda;
    Rational yhk;
  };
  const auto means = std::vector<MeanPair>{
      {"A", *pu.mean_a, *yu.mean_a},
      {"B", *pu.mean_b, *yu.mean_b},
      {"A*", *pr.mean_a, *yr.mean_a},
      {"B*", *pr.mean_b, *yr.mean_b},
  };
  for (const auto& m : means) {
    add("E_u(" + m.label + ") < E_y(" + m.label + ")", m.label != "A" || n >= 12, m.pda < m.yhk);
    add("E_y(" + m.label + ") < 4/3 E_u(" + m.label + ")", true, m.yhk < four_thirds * m.pda);
  }

  // Rooted against unrooted means.
  const auto yhk_cap = make_rational(3, 5);
  const auto pda_floor = make_rational(1, 4);
  const auto pda_cap = make_rational(16, 21);
  struct GapPair {
    std::string label;
    Rational yu, yr, pu, pr;
  };
  const auto gaps = std::vector<GapPair>{
      {"A", *yu.mean_a, *yr.mean_a, *pu.mean_a, *pr.mean_a},
      {"B", *yu.mean_b, *yr.mean_b, *pu.mean_b, *pr.mean_b},
  };
  for (const auto& g : gaps) {
    const auto& y = g.label;
    add("E_y(" + y + "*) < E_y(" + y + ")", true, g.yr < g.yu);
    add("E_y(" + y + ") <= E_y(" + y + "*) + 3/5", true, g.yu <= g.yr + yhk_cap);
    add("E_u(" + y + "*) + 1/4 < E_u(" + y + ")", true, g.pr + pda_floor < g.pu);
    add("E_u(" + y + ") <= E_u(" + y + "*) + 16/21", true, g.pu <= g.pr + pda_cap);
  }

  // Variances: claimed from n = 7 for A; for B the argument extends to n >= 4.
  add("V_y(A*) > V_y(A)", n >= 7, *yr.var_a > *yu.var_a);
  add("V_u(A*) > V_u(A)", n >= 7, *pr.var_a > *pu.var_a);
  add("V_y(B*) > V_y(B)", true, *yr.var_b > *yu.var_b);
  add("V_u(B*) > V_u(B)", true, *pr.var_b > *pu.var_b);

  add("Cov_y(A*,B*) > Cov_y(A,B)", true, *yr.cov_ab > *yu.cov_ab);
  add("Cov_u(A*,B*) > Cov_u(A,B)", true, *pr.cov_ab > *pu.cov_ab);
  return report;
}

auto RatioLimitReport::all_decreasing() const -> bool {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RatioLimitRow& r) { return r.decreasing; });
}

auto ratio_limits_check(int n_max) -> RatioLimitReport {
  if (n_max < 100) {
    throw std::invalid_argument("ratio_limits_check: n_max must be at least 100");
  }
  auto ns = std::vector<int>{100, 1000, n_max};
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  const auto half = make_rational(1, 2);

  auto report = RatioLimitReport{};
  for (auto model : {Model::yhk, Model::pda}) {
    for (auto rootedness : {Rootedness::unrooted, Rootedness::rooted}) {
      auto row = RatioLimitRow{model, rootedness, ns, {}, true};
      for (auto n : ns) {
        auto s = closed_form(model, rootedness, n);
        row.distance.push_back(abs(Rational{*s.mean_a / *s.mean_b - half}));
      }
      auto all_zero = std::all_of(row.distance.begin(), row.distance.end(),
                                  [](const Rational& d) { return sgn(d) == 0; });
      for (auto i = 1U; i < row.distance.size() && !all_zero; ++i) {
        row.decreasing = row.decreasing && row.distance[i] < row.distance[i - 1];
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace treeshape
