#include "treeshape/rational.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace treeshape {

auto make_rational(long num, long den) -> Rational {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  auto q = Rational{num, den};
  q.canonicalize();
  return q;
}

auto make_rational(const Integer& num, const Integer& den) -> Rational {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  auto q = Rational{num, den};
  q.canonicalize();
  return q;
}

auto to_string(const Rational& q) -> std::string { return q.get_str(); }

auto to_string(const Integer& z) -> std::string { return z.get_str(); }

auto to_double(const Rational& q) -> double {
  // mpq get_d truncates; go through 40 significant digits and let strtod
  // round to nearest.
  if (sgn(q) == 0) {
    return 0.0;
  }
  auto f = mpf_class(q, 192);
  auto exp = mp_exp_t{};
  auto digits = f.get_str(exp, 10, 40);
  auto negative = !digits.empty() && digits.front() == '-';
  if (negative) {
    digits.erase(0, 1);
  }
  auto text = (negative ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return std::strtod(text.c_str(), nullptr);
}

auto factorial(unsigned long n) -> Integer {
  auto result = Integer{};
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

auto pow2(unsigned long e) -> Integer {
  auto result = Integer{};
  mpz_ui_pow_ui(result.get_mpz_t(), 2, e);
  return result;
}

FactorialTable::FactorialTable(unsigned long max) {
  values_.reserve(max + 1);
  values_.emplace_back(1);
  for (auto k = 1UL; k <= max; ++k) {
    values_.push_back(values_.back() * k);
  }
}

auto FactorialTable::operator()(long k) const -> const Integer& {
  if (k < 0 || static_cast<unsigned long>(k) >= values_.size()) {
    throw std::out_of_range("factorial table index " + std::to_string(k));
  }
  return values_[static_cast<std::size_t>(k)];
}

}  // namespace treeshape
