#ifndef TREESHAPE_RATIONAL_HPP_
#define TREESHAPE_RATIONAL_HPP_

// Exact arithmetic used by every probability table in the library.
//
// `Rational` is GMP's mpq_class. Values built through `make_rational` are
// always canonical (reduced, positive denominator); arithmetic between
// canonical values stays canonical.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace treeshape {

using Integer = mpz_class;
using Rational = mpq_class;

auto make_rational(long num, long den = 1) -> Rational;
auto make_rational(const Integer& num, const Integer& den) -> Rational;

// "p/q", or "p" when q == 1.
auto to_string(const Rational& q) -> std::string;
auto to_string(const Integer& z) -> std::string;

auto to_double(const Rational& q) -> double;

auto factorial(unsigned long n) -> Integer;
auto pow2(unsigned long e) -> Integer;

// Cache of 0!, 1!, ..., max! for closed forms that need many factorials.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned long max);
  auto operator()(long k) const -> const Integer&;
  auto max() const -> unsigned long { return values_.size() - 1; }

 private:
  std::vector<Integer> values_;
};

}  // namespace treeshape

#endif  // TREESHAPE_RATIONAL_HPP_
