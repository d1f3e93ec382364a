#include <doctest.h>

#include "qmf/arith.hpp"
#include "qmf/error.hpp"

using namespace qmf;

namespace {

// Brute-force oracle, independent of the sieve and trial-division paths.
Int sigma_oracle(int k, std::int64_t n) {
    Int total(0);
    Int dk;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        total += dk;
    }
    return total;
}

// Direct truncated expansion of prod_{n<N} (1 - q^n), the oracle for the
// pentagonal-number route.
std::vector<long> euler_oracle(std::int64_t N) {
    std::vector<long> coeffs(static_cast<std::size_t>(N), 0);
    coeffs[0] = 1;
    for (std::int64_t n = 1; n < N; ++n) {
        for (std::int64_t i = N - 1; i >= n; --i)
            coeffs[static_cast<std::size_t>(i)] -= coeffs[static_cast<std::size_t>(i - n)];
    }
    return coeffs;
}

}  // namespace

TEST_CASE("sigma_power point values") {
    CHECK(arith::sigma_power(1, 6) == 12);
    CHECK(arith::sigma_power(3, 2) == 9);
    CHECK(arith::sigma_power(1, 10000) == sigma_oracle(1, 10000));
    CHECK(arith::sigma_power(1, 10000) == 24211);
    CHECK(arith::sigma_power(0, 12) == 6);
    CHECK_THROWS_AS((void)arith::sigma_power(1, 0), Error);
}

TEST_CASE("sigma table agrees with trial division and the oracle") {
    for (int k : {1, 3, 5}) {
        auto table = arith::sigma_table(k, 300);
        for (std::int64_t n = 1; n <= 300; ++n) {
            CHECK(table[static_cast<std::size_t>(n)] == arith::sigma_power(k, n));
        }
        CHECK(table[289] == sigma_oracle(k, 289));
    }
}

TEST_CASE("sigma is multiplicative on coprime arguments and 1 + p^k at primes") {
    auto table = arith::sigma_table(3, 200);
    CHECK(table[35] == table[5] * table[7]);
    CHECK(table[77] == table[7] * table[11]);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        Int expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p), 3);
        expected += 1;
        CHECK(table[static_cast<std::size_t>(p)] == expected);
    }
}

TEST_CASE("delta indicator") {
    CHECK(arith::delta_indicator(2, 4) == 1);
    CHECK(arith::delta_indicator(3, 4) == 0);
    CHECK(arith::delta_indicator(3, 0) == 1);
    CHECK_THROWS_AS((void)arith::delta_indicator(0, 4), Error);
}

TEST_CASE("euler product head") {
    QSeries e = arith::euler_product(6);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == -1);
    CHECK(e.coeff(2) == -1);
    CHECK(e.coeff(3) == 0);
    CHECK(e.coeff(4) == 0);
    CHECK(e.coeff(5) == 1);
    CHECK(e.precision() == 6);
    CHECK(arith::euler_product(1) == QSeries::constant(1));
    CHECK(arith::euler_product(8).coeff(7) == 1);
}

TEST_CASE("euler product equals the truncated product up to 200 terms") {
    auto oracle = euler_oracle(200);
    QSeries e = arith::euler_product(200);
    for (std::int64_t n = 0; n < 200; ++n)
        CHECK(e.coeff(n) == oracle[static_cast<std::size_t>(n)]);
}

TEST_CASE("primality helper") {
    CHECK(arith::is_prime(2));
    CHECK(arith::is_prime(13));
    CHECK_FALSE(arith::is_prime(1));
    CHECK_FALSE(arith::is_prime(15));
}
