#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qmf {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
Rat ratio(long num, long den = 1);

// Parses "p/q" or "p"; result is canonical with positive denominator.
Rat rat_from_string(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

bool rat_is_integer(const Rat& r);

Int binomial(std::int64_t n, std::int64_t k);

}  // namespace qmf
