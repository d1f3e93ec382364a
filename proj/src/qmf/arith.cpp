#include "qmf/arith.hpp"

#include "qmf/error.hpp"

namespace qmf::arith {

Int sigma_power(int k, std::int64_t n) {
    if (n <= 0)
        throw Error(ErrorCode::DomainError, "sigma_power requires n >= 1");
    if (k < 0)
        throw Error(ErrorCode::DomainError, "sigma_power requires k >= 0");
    Int result(0);
    Int dk;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        result += dk;
        std::int64_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            result += dk;
        }
    }
    return result;
}

std::vector<Int> sigma_table(int k, std::int64_t n_max) {
    if (n_max < 0) throw Error(ErrorCode::DomainError, "sigma_table requires n_max >= 0");
    if (k < 0) throw Error(ErrorCode::DomainError, "sigma_table requires k >= 0");
    std::vector<Int> values(static_cast<std::size_t>(n_max) + 1, Int(0));
    Int dk;
    for (std::int64_t d = 1; d <= n_max; ++d) {
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        for (std::int64_t m = d; m <= n_max; m += d)
            values[static_cast<std::size_t>(m)] += dk;
    }
    return values;
}

int delta_indicator(std::int64_t k, std::int64_t n) {
    if (k < 1) throw Error(ErrorCode::DomainError, "delta indicator requires k >= 1");
    if (n < 0) throw Error(ErrorCode::DomainError, "delta indicator requires n >= 0");
    return n % k == 0 ? 1 : 0;
}

std::vector<std::pair<std::int64_t, int>> pentagonal_terms(std::int64_t bound) {
    std::vector<std::pair<std::int64_t, int>> terms;
    if (bound > 0) terms.emplace_back(0, 1);
    for (std::int64_t j = 1;; ++j) {
        std::int64_t g1 = j * (3 * j - 1) / 2;
        std::int64_t g2 = j * (3 * j + 1) / 2;
        int sign = (j % 2 == 0) ? 1 : -1;
        if (g1 >= bound) break;
        terms.emplace_back(g1, sign);
        if (g2 < bound) terms.emplace_back(g2, sign);
    }
    return terms;
}

QSeries euler_product(std::int64_t precision) {
    if (precision < 1)
        throw Error(ErrorCode::DomainError, "euler_product requires precision >= 1");
    std::vector<Rat> coeffs(static_cast<std::size_t>(precision), Rat(0));
    for (const auto& [e, s] : pentagonal_terms(precision))
        coeffs[static_cast<std::size_t>(e)] = Rat(s);
    return QSeries::from_coeffs(0, std::move(coeffs), precision);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace qmf::arith
