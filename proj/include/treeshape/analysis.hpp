#ifndef TREESHAPE_ANALYSIS_HPP_
#define TREESHAPE_ANALYSIS_HPP_

// Shape of the cherry laws: log-concavity and modes, the YHK/PDA crossing
// point, the floor identities for n/4, and total variation distances between
// rooted and unrooted cherry laws.

#include <optional>
#include <vector>

#include "treeshape/exact_dist.hpp"
#include "treeshape/model.hpp"
#include "treeshape/rational.hpp"

namespace treeshape {

// floor(n/4) and ceil(n/4).
auto delta(long n) -> long;
auto nabla(long n) -> long;

struct IdentityCheck {
  bool asserted = false;  // false: outside the range where the identity is claimed
  bool holds = false;
  long expected = 0;      // delta(n) or nabla(n)
  long floor_value = 0;   // the floor expression
};

// floor(n(n-1) / (2(2n-3))) == delta(n), claimed for n >= 4.
// Throws std::invalid_argument for n < 4.
auto delta_identity(long n) -> IdentityCheck;
// floor((n+1)(n+2) / (2(2n-1))) == nabla(n), claimed for n > 8; for
// 1 <= n <= 8 the values are computed but `asserted` is false.
auto nabla_identity(long n) -> IdentityCheck;

struct ShapeReport {
  Model model = Model::pda;
  Rootedness rootedness = Rootedness::unrooted;
  Statistic statistic = Statistic::cherry;
  int n = 0;
  bool is_log_concave = false;
  std::vector<int> modes;              // every k attaining the maximum, ascending
  std::optional<int> first_violation;  // smallest k where y(k)^2 > y(k-1)y(k+1) fails
};

// Strict log-concavity over the support [min k, max k], zeros outside it.
// An interior zero counts as a violation.
auto log_concavity(const MarginalPmf& pmf) -> ShapeReport;

struct ChangePoint {
  int n = 0;
  bool ratio_increasing = false;  // ypmf_n(k) / sigma_n(k) strictly increasing in k
  bool starts_below = false;      // ypmf_n(2) < sigma_n(2)
  int sign_changes = 0;           // of ypmf_n(k) - sigma_n(k) over 2..n/2
  int kappa_low = 0;              // largest k with ypmf_n(k) < sigma_n(k)
  int kappa_high = 0;             // smallest k with ypmf_n(k) > sigma_n(k)

  auto ok() const -> bool {
    return ratio_increasing && starts_below && sign_changes == 1 && kappa_low < kappa_high;
  }
};

// Compares the unrooted YHK and PDA cherry laws; n >= 6.
auto change_point(int n) -> ChangePoint;
// Same, from laws already computed (both unrooted cherry laws at one n).
auto change_point(const MarginalPmf& yhk, const MarginalPmf& pda) -> ChangePoint;

// Half the L1 distance. Throws std::invalid_argument if n or the statistic differ.
auto tvd(const MarginalPmf& p, const MarginalPmf& q) -> Rational;

// TV distance between the rooted and unrooted PDA cherry laws:
//   n!(n-2)!(n-4)! 2^(n-2D-1) / ((2n-3)! (n-2D-2)! D! (D-1)!),  D = floor(n/4).
// Throws std::invalid_argument for n < 4.
auto tvd_pda_closed_form(long n) -> Rational;
// The same expression through log-gamma, for large n.
auto tvd_pda_log_gamma(long n) -> double;
// Exact up to this n, log-gamma beyond.
inline constexpr long k_tvd_exact_max_n = 1000;
auto tvd_pda(long n) -> double;

// sigma*_n(k) >= sigma_n(k) exactly for 1 <= k <= delta(n) and < for the
// rest of 1..n/2. n >= 4.
auto pda_rooted_excess_sign_pattern(int n) -> bool;

struct TvdSequence {
  Model model = Model::pda;
  std::vector<int> ns;
  std::vector<Rational> distance;
  bool strictly_decreasing = false;
  // YHK: at every n some 1 < k <= n/2 has rooted-minus-unrooted changing sign
  // between k-1 and k. Always true for PDA by the sign pattern above.
  bool sign_change_found = false;
};

// Exact d(n) for n_min <= n <= n_max. Throws std::invalid_argument unless
// 4 <= n_min < n_max.
auto tvd_sequence(Model model, int n_min, int n_max) -> TvdSequence;

struct ConjectureEvidence {
  bool observed = false;             // d^y(n) <= d^u(n) at every n compared
  std::vector<int> counterexamples;  // n where it fails
};

// Reported only; the inequality d^y <= d^u is open.
auto tvd_conjecture_evidence(const TvdSequence& yhk, const TvdSequence& pda)
    -> ConjectureEvidence;

}  // namespace treeshape

#endif  // TREESHAPE_ANALYSIS_HPP_
