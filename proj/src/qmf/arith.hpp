#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qmf/qseries.hpp"
#include "qmf/rational.hpp"

namespace qmf::arith {

/// sigma_k(n) = sum of d^k over divisors d of n, by trial division.
Int sigma_power(int k, std::int64_t n);

/// Divisor sieve: values[n] = sigma_k(n) for 1 <= n <= n_max (values[0] = 0).
std::vector<Int> sigma_table(int k, std::int64_t n_max);

/// 1 if k divides n (so 1 for n = 0), else 0. Requires k >= 1.
int delta_indicator(std::int64_t k, std::int64_t n);

/// Nonzero terms of prod_{k>=1} (1 - q^k) with exponent < bound, as
/// (exponent, sign) pairs in increasing exponent order. Pentagonal numbers:
/// exponents j(3j-1)/2 and j(3j+1)/2 carry sign (-1)^j.
std::vector<std::pair<std::int64_t, int>> pentagonal_terms(std::int64_t bound);

/// prod_{k>=1} (1 - q^k) truncated at the given precision.
QSeries euler_product(std::int64_t precision);

bool is_prime(std::int64_t n);

}  // namespace qmf::arith
