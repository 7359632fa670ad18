#ifndef TREESHAPE_EXACT_DIST_HPP_
#define TREESHAPE_EXACT_DIST_HPP_

// Exact distributions of the pitchfork count A and the cherry count B.
//
// Everything here is exact rational arithmetic. The recursions run on
// integer numerators over a common denominator (the denominator of level
// n+1 is the level-n denominator times 2n-3 under PDA, times n under YHK),
// and results are reduced only when a table is handed out.
//
// Unrooted joint law of (A_n, B_n), n >= 6, starts from the six-leaf law
//   PDA: P(2,2) = 6/7, P(0,3) = 1/7     YHK: P(2,2) = 4/5, P(0,3) = 1/5
// and moves n -> n+1 by conditioning on the class of the edge that receives
// the new leaf. With d = 2n-3 (PDA) or n (YHK):
//   P'(a,b) = [ c0 P(a,b) + (a+1) P(a+1,b-1) + c2 (b-a+1) P(a-1,b)
//             + (n-a-2b+2) P(a,b-1) ] / d
// where c0 = n+3a-b-3, c2 = 3 (PDA) and c0 = 2a, c2 = 2 (YHK).
//
// Cherry laws:
//   unrooted PDA  sigma_n(k) = n!(n-2)!(n-4)! 2^(n-2k) / ((n-2k)!(2n-4)! k!(k-2)!),  2 <= k <= n/2
//   rooted PDA    sigma*_n(k) = n!(n-1)!(n-2)! 2^(n-2k) / ((n-2k)!(2n-2)! k!(k-1)!), 1 <= k <= n/2
//   unrooted      P'(k) = [(n+2k-3) P(k) + (n-2k+2) P(k-1)] / (2n-3)   (PDA)
//                 P'(k) = [2k P(k) + (n-2k+2) P(k-1)] / n                (YHK, rooted and unrooted)
//   rooted PDA from unrooted:
//                 sigma*_n(k) = [(2n-3-2k) sigma_n(k) + 2(k+1) sigma_n(k+1)] / (2n-3)
// The YHK cherry recursion starts from B_4 = 2 (unrooted) and from the
// rooted two-leaf tree, which has one cherry (rooted).

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treeshape/model.hpp"
#include "treeshape/rational.hpp"
#include "treeshape/tree.hpp"

namespace treeshape {

enum class Statistic { cherry, pitchfork };

auto to_string(Statistic s) -> std::string;

struct JointPmf {
  Model model = Model::pda;
  Rootedness rootedness = Rootedness::unrooted;
  int n = 0;
  std::map<std::pair<int, int>, Rational> table;  // (a, b) -> P, zeros omitted

  auto at(int a, int b) const -> Rational;
  auto total() const -> Rational;
};

struct MarginalPmf {
  Model model = Model::pda;
  Rootedness rootedness = Rootedness::unrooted;
  int n = 0;
  Statistic statistic = Statistic::cherry;
  std::map<int, Rational> table;  // k -> P, zeros omitted

  auto at(int k) const -> Rational;
  auto total() const -> Rational;
};

auto operator==(const JointPmf& lhs, const JointPmf& rhs) -> bool;
auto operator==(const MarginalPmf& lhs, const MarginalPmf& rhs) -> bool;

// The six-leaf unrooted joint law.
auto joint_unrooted_base(Model model) -> JointPmf;

// Steps the unrooted joint recursion one leaf at a time.
class JointRecursion {
 public:
  explicit JointRecursion(Model model);

  auto model() const -> Model { return model_; }
  auto n() const -> int { return n_; }
  void advance();
  void advance_to(int n);
  auto pmf() const -> JointPmf;

 private:
  Model model_;
  int n_ = 6;
  std::map<std::pair<int, int>, Integer> numerators_;
  Integer denominator_;
};

// Throws std::invalid_argument for n < 6.
auto joint_unrooted(Model model, int n) -> JointPmf;

// Steps a cherry recursion: unrooted PDA or YHK from n = 4, rooted YHK from
// n = 2. Rooted PDA has no recursion of its own; see pda_rooted_from_unrooted.
class CherryRecursion {
 public:
  CherryRecursion(Model model, Rootedness rootedness);

  auto n() const -> int { return n_; }
  void advance();
  void advance_to(int n);
  auto pmf() const -> MarginalPmf;
  // Unreduced: P(B_n = k) = numerator(k) / denominator().
  auto numerator(int k) const -> const Integer&;
  auto denominator() const -> const Integer& { return denominator_; }
  auto min_k() const -> int { return min_k_; }
  auto max_k() const -> int { return n_ / 2; }

 private:
  Model model_;
  Rootedness rootedness_;
  int n_;
  int min_k_;
  std::vector<Integer> numerators_;  // indexed by k, 0..n/2
  Integer denominator_;
};

// sigma_n(k) and sigma*_n(k) by their closed forms; zero outside the support.
auto pda_cherry_closed_form(int n, int k) -> Rational;
auto pda_rooted_cherry_closed_form(int n, int k) -> Rational;

// Unrooted cherry law: closed form for PDA, recursion for YHK. n >= 4.
auto cherry_pmf_unrooted(Model model, int n) -> MarginalPmf;
// Unrooted cherry law by recursion for either model. n >= 4.
auto cherry_pmf_unrooted_recursive(Model model, int n) -> MarginalPmf;
// Rooted cherry law: closed form for PDA (n >= 4), recursion for YHK (n >= 2).
auto cherry_pmf_rooted(Model model, int n) -> MarginalPmf;
// Rooted PDA cherry law as the mixture of the unrooted one.
auto pda_rooted_from_unrooted(const MarginalPmf& sigma) -> MarginalPmf;

auto marginal_from_joint(const JointPmf& joint, Statistic statistic) -> MarginalPmf;

using JointFunction = std::function<Rational(int a, int b)>;

auto expectation(const JointPmf& joint, const JointFunction& f) -> Rational;

// E f(A_{n+1}, B_{n+1}) from the level-n table by the functional form of the
// joint recursion (a push over the level-n support). Requires level.n >= 6.
auto expectation_next_level(const JointPmf& level, const JointFunction& f) -> Rational;

// E f(A_n, B_n), n >= 6. For n >= 7 it is computed both from the level-n
// table and by expectation_next_level from the level n-1 table; a mismatch
// throws std::logic_error. At n = 6 only the table route exists.
auto functional_expectation(Model model, int n, const JointFunction& f) -> Rational;

}  // namespace treeshape

#endif  // TREESHAPE_EXACT_DIST_HPP_
