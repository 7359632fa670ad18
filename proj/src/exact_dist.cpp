#include "treeshape/exact_dist.hpp"

#include <set>
#include <stdexcept>

namespace treeshape {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument(what);
  }
}

auto sigma_from(const FactorialTable& f, int n, int k) -> Rational {
  if (n < 4 || k < 2 || 2 * k > n) {
    return Rational{0};
  }
  auto num = Integer{f(n) * f(n - 2) * f(n - 4) * pow2(static_cast<unsigned long>(n - 2 * k))};
  auto den = Integer{f(n - 2 * k) * f(2 * n - 4) * f(k) * f(k - 2)};
  return make_rational(num, den);
}

auto rooted_sigma_from(const FactorialTable& f, int n, int k) -> Rational {
  if (n < 2 || k < 1 || 2 * k > n) {
    return Rational{0};
  }
  auto num = Integer{f(n) * f(n - 1) * f(n - 2) * pow2(static_cast<unsigned long>(n - 2 * k))};
  auto den = Integer{f(n - 2 * k) * f(2 * n - 2) * f(k) * f(k - 1)};
  return make_rational(num, den);
}

}  // namespace

auto to_string(Statistic s) -> std::string {
  return s == Statistic::cherry ? "cherry" : "pitchfork";
}

auto JointPmf::at(int a, int b) const -> Rational {
  auto it = table.find({a, b});
  return it == table.end() ? Rational{0} : it->second;
}

auto JointPmf::total() const -> Rational {
  auto sum = Rational{0};
  for (const auto& [ab, p] : table) {
    sum += p;
  }
  return sum;
}

auto MarginalPmf::at(int k) const -> Rational {
  auto it = table.find(k);
  return it == table.end() ? Rational{0} : it->second;
}

auto MarginalPmf::total() const -> Rational {
  auto sum = Rational{0};
  for (const auto& [k, p] : table) {
    sum += p;
  }
  return sum;
}

auto operator==(const JointPmf& lhs, const JointPmf& rhs) -> bool {
  return lhs.model == rhs.model && lhs.rootedness == rhs.rootedness && lhs.n == rhs.n &&
         lhs.table == rhs.table;
}

auto operator==(const MarginalPmf& lhs, const MarginalPmf& rhs) -> bool {
  return lhs.model == rhs.model && lhs.rootedness == rhs.rootedness && lhs.n == rhs.n &&
         lhs.statistic == rhs.statistic && lhs.table == rhs.table;
}

// ---------------------------------------------------------------------------
// Joint recursion

auto joint_unrooted_base(Model model) -> JointPmf {
  auto pmf = JointPmf{model, Rootedness::unrooted, 6, {}};
  if (model == Model::pda) {
    pmf.table[{2, 2}] = make_rational(6, 7);
    pmf.table[{0, 3}] = make_rational(1, 7);
  } else {
    pmf.table[{2, 2}] = make_rational(4, 5);
    pmf.table[{0, 3}] = make_rational(1, 5);
  }
  return pmf;
}

JointRecursion::JointRecursion(Model model) : model_{model} {
  if (model == Model::pda) {
    numerators_[{2, 2}] = 6;
    numerators_[{0, 3}] = 1;
    denominator_ = 7;
  } else {
    numerators_[{2, 2}] = 4;
    numerators_[{0, 3}] = 1;
    denominator_ = 5;
  }
}

void JointRecursion::advance() {
  const long n = n_;
  const auto pda = model_ == Model::pda;
  const auto zero = Integer{0};
  auto level = [&](long a, long b) -> const Integer& {
    auto it = numerators_.find({static_cast<int>(a), static_cast<int>(b)});
    return it == numerators_.end() ? zero : it->second;
  };

  // Every non-zero target is one step away from the current support.
  auto targets = std::set<std::pair<int, int>>{};
  for (const auto& [ab, count] : numerators_) {
    auto [a, b] = ab;
    targets.insert({a, b});
    targets.insert({a - 1, b + 1});
    targets.insert({a + 1, b});
    targets.insert({a, b + 1});
  }

  auto next = std::map<std::pair<int, int>, Integer>{};
  auto term = Integer{};
  for (auto [ai, bi] : targets) {
    const long a = ai;
    const long b = bi;
    if (a < 0 || b < 2) {
      continue;
    }
    const auto stay = pda ? n + 3 * a - b - 3 : 2 * a;
    const auto grow_pitchfork = (pda ? 3 : 2) * (b - a + 1);
    auto sum = Integer{0};
    sum += stay * level(a, b);
    sum += (a + 1) * level(a + 1, b - 1);
    sum += grow_pitchfork * level(a - 1, b);
    sum += (n - a - 2 * b + 2) * level(a, b - 1);
    if (sgn(sum) < 0) {
      throw std::logic_error("joint recursion produced a negative mass");
    }
    if (sgn(sum) > 0) {
      next.emplace(std::pair{ai, bi}, std::move(sum));
    }
  }
  numerators_ = std::move(next);
  denominator_ *= pda ? 2 * n - 3 : n;
  ++n_;
}

void JointRecursion::advance_to(int n) {
  require(n >= n_, "JointRecursion: cannot step backwards");
  while (n_ < n) {
    advance();
  }
}

auto JointRecursion::pmf() const -> JointPmf {
  auto pmf = JointPmf{model_, Rootedness::unrooted, n_, {}};
  for (const auto& [ab, count] : numerators_) {
    pmf.table.emplace(ab, make_rational(count, denominator_));
  }
  return pmf;
}

auto joint_unrooted(Model model, int n) -> JointPmf {
  require(n >= 6, "joint_unrooted: the joint recursion starts at n = 6, got " + std::to_string(n));
  auto rec = JointRecursion{model};
  rec.advance_to(n);
  return rec.pmf();
}

// ---------------------------------------------------------------------------
// Cherry recursions

CherryRecursion::CherryRecursion(Model model, Rootedness rootedness)
    : model_{model}, rootedness_{rootedness} {
  if (rootedness == Rootedness::rooted) {
    require(model == Model::yhk, "CherryRecursion: no rooted PDA recursion");
    n_ = 2;
    min_k_ = 1;
    numerators_ = {0, 1};
  } else {
    n_ = 4;
    min_k_ = 2;
    numerators_ = {0, 0, 1};
  }
  denominator_ = 1;
}

void CherryRecursion::advance() {
  const long n = n_;
  const auto pda = model_ == Model::pda;
  const auto zero = Integer{0};
  auto prev = [&](long k) -> const Integer& {
    return k < 0 || k >= static_cast<long>(numerators_.size()) ? zero
                                                               : numerators_[static_cast<std::size_t>(k)];
  };
  const long max_next = (n + 1) / 2;
  auto next = std::vector<Integer>(static_cast<std::size_t>(max_next + 1));
  for (long k = min_k_; k <= max_next; ++k) {
    auto& out = next[static_cast<std::size_t>(k)];
    out = (pda ? n + 2 * k - 3 : 2 * k) * prev(k);
    out += (n - 2 * k + 2) * prev(k - 1);
  }
  numerators_ = std::move(next);
  denominator_ *= pda ? 2 * n - 3 : n;
  ++n_;
}

void CherryRecursion::advance_to(int n) {
  require(n >= n_, "CherryRecursion: cannot step backwards");
  while (n_ < n) {
    advance();
  }
}

auto CherryRecursion::numerator(int k) const -> const Integer& {
  static const auto zero = Integer{0};
  return k < 0 || k >= static_cast<int>(numerators_.size()) ? zero
                                                            : numerators_[static_cast<std::size_t>(k)];
}

auto CherryRecursion::pmf() const -> MarginalPmf {
  auto pmf = MarginalPmf{model_, rootedness_, n_, Statistic::cherry, {}};
  for (auto k = 0; k < static_cast<int>(numerators_.size()); ++k) {
    const auto& count = numerators_[static_cast<std::size_t>(k)];
    if (sgn(count) != 0) {
      pmf.table.emplace(k, make_rational(count, denominator_));
    }
  }
  return pmf;
}

auto pda_cherry_closed_form(int n, int k) -> Rational {
  if (n < 4) {
    return Rational{0};
  }
  return sigma_from(FactorialTable(static_cast<unsigned long>(2 * n)), n, k);
}

auto pda_rooted_cherry_closed_form(int n, int k) -> Rational {
  if (n < 2) {
    return Rational{0};
  }
  return rooted_sigma_from(FactorialTable(static_cast<unsigned long>(2 * n)), n, k);
}

auto cherry_pmf_unrooted(Model model, int n) -> MarginalPmf {
  require(n >= 4, "cherry_pmf_unrooted: n must be at least 4, got " + std::to_string(n));
  if (model == Model::yhk) {
    return cherry_pmf_unrooted_recursive(model, n);
  }
  auto f = FactorialTable(static_cast<unsigned long>(2 * n));
  auto pmf = MarginalPmf{model, Rootedness::unrooted, n, Statistic::cherry, {}};
  for (auto k = 2; 2 * k <= n; ++k) {
    pmf.table.emplace(k, sigma_from(f, n, k));
  }
  return pmf;
}

auto cherry_pmf_unrooted_recursive(Model model, int n) -> MarginalPmf {
  require(n >= 4, "cherry_pmf_unrooted_recursive: n must be at least 4, got " + std::to_string(n));
  auto rec = CherryRecursion{model, Rootedness::unrooted};
  rec.advance_to(n);
  return rec.pmf();
}

auto cherry_pmf_rooted(Model model, int n) -> MarginalPmf {
  if (model == Model::yhk) {
    require(n >= 2, "cherry_pmf_rooted: n must be at least 2, got " + std::to_string(n));
    auto rec = CherryRecursion{model, Rootedness::rooted};
    rec.advance_to(n);
    return rec.pmf();
  }
  require(n >= 4, "cherry_pmf_rooted: the PDA closed form needs n >= 4, got " + std::to_string(n));
  auto f = FactorialTable(static_cast<unsigned long>(2 * n));
  auto pmf = MarginalPmf{model, Rootedness::rooted, n, Statistic::cherry, {}};
  for (auto k = 1; 2 * k <= n; ++k) {
    pmf.table.emplace(k, rooted_sigma_from(f, n, k));
  }
  return pmf;
}

auto pda_rooted_from_unrooted(const MarginalPmf& sigma) -> MarginalPmf {
  require(sigma.model == Model::pda && sigma.rootedness == Rootedness::unrooted &&
              sigma.statistic == Statistic::cherry && sigma.n >= 4,
          "pda_rooted_from_unrooted: expects an unrooted PDA cherry law with n >= 4");
  const long n = sigma.n;
  auto pmf = MarginalPmf{Model::pda, Rootedness::rooted, sigma.n, Statistic::cherry, {}};
  for (long k = 1; 2 * k <= n; ++k) {
    auto p = Rational{(2 * n - 3 - 2 * k) * sigma.at(static_cast<int>(k)) +
                      2 * (k + 1) * sigma.at(static_cast<int>(k + 1))};
    p /= 2 * n - 3;
    if (sgn(p) != 0) {
      pmf.table.emplace(static_cast<int>(k), std::move(p));
    }
  }
  return pmf;
}

auto marginal_from_joint(const JointPmf& joint, Statistic statistic) -> MarginalPmf {
  auto pmf = MarginalPmf{joint.model, joint.rootedness, joint.n, statistic, {}};
  for (const auto& [ab, p] : joint.table) {
    auto k = statistic == Statistic::cherry ? ab.second : ab.first;
    pmf.table[k] += p;
  }
  return pmf;
}

// ---------------------------------------------------------------------------
// Expectations

auto expectation(const JointPmf& joint, const JointFunction& f) -> Rational {
  auto sum = Rational{0};
  for (const auto& [ab, p] : joint.table) {
    sum += p * f(ab.first, ab.second);
  }
  return sum;
}

auto expectation_next_level(const JointPmf& level, const JointFunction& f) -> Rational {
  require(level.rootedness == Rootedness::unrooted && level.n >= 6,
          "expectation_next_level: needs an unrooted joint law with n >= 6");
  const long n = level.n;
  const auto pda = level.model == Model::pda;
  auto sum = Rational{0};
  for (const auto& [ab, p] : level.table) {
    const long a = ab.first;
    const long b = ab.second;
    const auto ai = static_cast<int>(a);
    const auto bi = static_cast<int>(b);
    auto inner = Rational{0};
    inner += (pda ? n + 3 * a - b - 3 : 2 * a) * f(ai, bi);
    inner += a * f(ai - 1, bi + 1);
    inner += (pda ? 3 : 2) * (b - a) * f(ai + 1, bi);
    inner += (n - a - 2 * b) * f(ai, bi + 1);
    sum += p * inner;
  }
  sum /= pda ? 2 * n - 3 : n;
  return sum;
}

auto functional_expectation(Model model, int n, const JointFunction& f) -> Rational {
  require(n >= 6, "functional_expectation: n must be at least 6, got " + std::to_string(n));
  auto rec = JointRecursion{model};
  if (n == 6) {
    return expectation(rec.pmf(), f);
  }
  rec.advance_to(n - 1);
  auto via_recursion = expectation_next_level(rec.pmf(), f);
  rec.advance();
  auto direct = expectation(rec.pmf(), f);
  if (direct != via_recursion) {
    throw std::logic_error("functional_expectation: table and recursion disagree at n = " +
                           std::to_string(n));
  }
  return direct;
}

}  // namespace treeshape
