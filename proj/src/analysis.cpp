#include "treeshape/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treeshape {

auto delta(long n) -> long { return n / 4; }

auto nabla(long n) -> long { return (n + 3) / 4; }

auto delta_identity(long n) -> IdentityCheck {
  if (n < 4) {
    throw std::invalid_argument("delta_identity: n must be at least 4");
  }
  auto check = IdentityCheck{};
  check.asserted = true;
  check.expected = delta(n);
  check.floor_value = n * (n - 1) / (2 * (2 * n - 3));
  check.holds = check.expected == check.floor_value;
  return check;
}

auto nabla_identity(long n) -> IdentityCheck {
  if (n < 1) {
    throw std::invalid_argument("nabla_identity: n must be positive");
  }
  auto check = IdentityCheck{};
  check.asserted = n > 8;
  check.expected = nabla(n);
  check.floor_value = (n + 1) * (n + 2) / (2 * (2 * n - 1));
  check.holds = check.expected == check.floor_value;
  return check;
}

auto log_concavity(const MarginalPmf& pmf) -> ShapeReport {
  auto report = ShapeReport{pmf.model, pmf.rootedness, pmf.statistic, pmf.n, true, {}, {}};
  if (pmf.table.empty()) {
    throw std::invalid_argument("log_concavity: empty distribution");
  }
  const auto lo = pmf.table.begin()->first;
  const auto hi = pmf.table.rbegin()->first;
  for (auto k = lo; k <= hi; ++k) {
    if (pmf.at(k) * pmf.at(k) <= pmf.at(k - 1) * pmf.at(k + 1)) {
      report.is_log_concave = false;
      report.first_violation = k;
      break;
    }
  }
  auto best = Rational{0};
  for (const auto& [k, p] : pmf.table) {
    if (p > best) {
      best = p;
      report.modes.clear();
    }
    if (p == best) {
      report.modes.push_back(k);
    }
  }
  return report;
}

auto change_point(const MarginalPmf& yhk, const MarginalPmf& pda) -> ChangePoint {
  if (yhk.model != Model::yhk || pda.model != Model::pda || yhk.n != pda.n ||
      yhk.rootedness != Rootedness::unrooted || pda.rootedness != Rootedness::unrooted ||
      yhk.statistic != Statistic::cherry || pda.statistic != Statistic::cherry) {
    throw std::invalid_argument("change_point: expects unrooted YHK and PDA cherry laws at one n");
  }
  const auto n = yhk.n;
  if (n < 6) {
    throw std::invalid_argument("change_point: n must be at least 6");
  }
  auto cp = ChangePoint{};
  cp.n = n;
  cp.ratio_increasing = true;
  for (auto k = 2; k + 1 <= n / 2; ++k) {
    // y(k)/s(k) < y(k+1)/s(k+1), all four positive
    if (!(yhk.at(k) * pda.at(k + 1) < yhk.at(k + 1) * pda.at(k))) {
      cp.ratio_increasing = false;
    }
  }
  cp.starts_below = yhk.at(2) < pda.at(2);
  auto last_sign = 0;
  cp.kappa_high = n / 2 + 1;
  for (auto k = 2; k <= n / 2; ++k) {
    const auto c = cmp(yhk.at(k), pda.at(k));
    const auto s = (c > 0) - (c < 0);
    if (s < 0) {
      cp.kappa_low = k;
    } else if (s > 0) {
      cp.kappa_high = std::min(cp.kappa_high, k);
    }
    if (s != 0) {
      if (last_sign != 0 && s != last_sign) {
        ++cp.sign_changes;
      }
      last_sign = s;
    }
  }
  return cp;
}

auto change_point(int n) -> ChangePoint {
  if (n < 6) {
    throw std::invalid_argument("change_point: n must be at least 6");
  }
  return change_point(cherry_pmf_unrooted(Model::yhk, n), cherry_pmf_unrooted(Model::pda, n));
}

auto tvd(const MarginalPmf& p, const MarginalPmf& q) -> Rational {
  if (p.n != q.n || p.statistic != q.statistic) {
    throw std::invalid_argument("tvd: distributions must share n and statistic");
  }
  auto sum = Rational{0};
  auto it_p = p.table.begin();
  auto it_q = q.table.begin();
  while (it_p != p.table.end() || it_q != q.table.end()) {
    if (it_q == q.table.end() || (it_p != p.table.end() && it_p->first < it_q->first)) {
      sum += abs(it_p->second);
      ++it_p;
    } else if (it_p == p.table.end() || it_q->first < it_p->first) {
      sum += abs(it_q->second);
      ++it_q;
    } else {
      sum += abs(Rational{it_p->second - it_q->second});
      ++it_p;
      ++it_q;
    }
  }
  return sum / 2;
}

auto tvd_pda_closed_form(long n) -> Rational {
  if (n < 4) {
    throw std::invalid_argument("tvd_pda_closed_form: n must be at least 4");
  }
  const auto d = delta(n);
  const auto f = FactorialTable(static_cast<unsigned long>(2 * n));
  auto num = Integer{f(n) * f(n - 2) * f(n - 4) * pow2(static_cast<unsigned long>(n - 2 * d - 1))};
  auto den = Integer{f(2 * n - 3) * f(n - 2 * d - 2) * f(d) * f(d - 1)};
  return make_rational(num, den);
}

auto tvd_pda_log_gamma(long n) -> double {
  if (n < 4) {
    throw std::invalid_argument("tvd_pda_log_gamma: n must be at least 4");
  }
  const auto d = static_cast<double>(delta(n));
  const auto x = static_cast<double>(n);
  // log k! = lgamma(k + 1)
  const auto log_value = std::lgamma(x + 1) + std::lgamma(x - 1) + std::lgamma(x - 3) +
                         (x - 2 * d - 1) * std::log(2.0) - std::lgamma(2 * x - 2) -
                         std::lgamma(x - 2 * d - 1) - std::lgamma(d + 1) - std::lgamma(d);
  return std::exp(log_value);
}

auto tvd_pda(long n) -> double {
  return n <= k_tvd_exact_max_n ? to_double(tvd_pda_closed_form(n)) : tvd_pda_log_gamma(n);
}

auto pda_rooted_excess_sign_pattern(int n) -> bool {
  if (n < 4) {
    throw std::invalid_argument("pda_rooted_excess_sign_pattern: n must be at least 4");
  }
  const auto sigma = cherry_pmf_unrooted(Model::pda, n);
  const auto rooted = cherry_pmf_rooted(Model::pda, n);
  for (auto k = 1; k <= n / 2; ++k) {
    const auto above = rooted.at(k) >= sigma.at(k);
    if (above != (k <= delta(n))) {
      return false;
    }
  }
  return true;
}

namespace {

// Strictly decreasing check shared by both models.
auto strictly_decreasing(const std::vector<Rational>& values) -> bool {
  for (auto i = 1U; i < values.size(); ++i) {
    if (!(values[i] < values[i - 1])) {
      return false;
    }
  }
  return true;
}

}  // namespace

auto tvd_sequence(Model model, int n_min, int n_max) -> TvdSequence {
  if (n_min < 4 || n_min >= n_max) {
    throw std::invalid_argument("tvd_sequence: need 4 <= n_min < n_max");
  }
  auto seq = TvdSequence{};
  seq.model = model;
  seq.sign_change_found = true;
  auto unrooted = CherryRecursion{model, Rootedness::unrooted};
  if (model == Model::pda) {
    // With N(k)/D the unrooted law, the rooted law is
    // [(2n-3-2k) N(k) + 2(k+1) N(k+1)] / ((2n-3) D), so the difference is
    // 2[(k+1) N(k+1) - k N(k)] / ((2n-3) D).
    for (auto n = n_min; n <= n_max; ++n) {
      unrooted.advance_to(n);
      auto sum = Integer{0};
      auto term = Integer{};
      for (long k = 1; 2 * k <= n; ++k) {
        term = (k + 1) * unrooted.numerator(static_cast<int>(k + 1)) -
               k * unrooted.numerator(static_cast<int>(k));
        sum += abs(term);
      }
      auto den = Integer{unrooted.denominator() * (2L * n - 3)};
      seq.ns.push_back(n);
      seq.distance.push_back(make_rational(sum, den));
    }
    seq.strictly_decreasing = strictly_decreasing(seq.distance);
    return seq;
  }

  auto rooted = CherryRecursion{model, Rootedness::rooted};
  for (auto n = n_min; n <= n_max; ++n) {
    unrooted.advance_to(n);
    rooted.advance_to(n);
    const auto& du = unrooted.denominator();
    const auto& dr = rooted.denominator();
    auto sum = Integer{0};
    auto diff = Integer{};
    auto previous = 0;
    auto found = false;
    for (auto k = 1; k <= n / 2; ++k) {
      diff = rooted.numerator(k) * du - unrooted.numerator(k) * dr;
      sum += abs(diff);
      const auto s = sgn(diff);
      if (k > 1 && s * previous < 0) {
        found = true;
      }
      previous = s;
    }
    seq.sign_change_found = seq.sign_change_found && found;
    seq.ns.push_back(n);
    seq.distance.push_back(make_rational(sum, Integer{2 * du * dr}));
  }
  seq.strictly_decreasing = strictly_decreasing(seq.distance);
  return seq;
}

auto tvd_conjecture_evidence(const TvdSequence& yhk, const TvdSequence& pda)
    -> ConjectureEvidence {
  if (yhk.model != Model::yhk || pda.model != Model::pda) {
    throw std::invalid_argument("tvd_conjecture_evidence: expects a YHK and a PDA sequence");
  }
  auto evidence = ConjectureEvidence{true, {}};
  auto j = 0U;
  for (auto i = 0U; i < yhk.ns.size(); ++i) {
    while (j < pda.ns.size() && pda.ns[j] < yhk.ns[i]) {
      ++j;
    }
    if (j < pda.ns.size() && pda.ns[j] == yhk.ns[i] && yhk.distance[i] > pda.distance[j]) {
      evidence.observed = false;
      evidence.counterexamples.push_back(yhk.ns[i]);
    }
  }
  return evidence;
}

}  // namespace treeshape
