#include "qmf/tau.hpp"

#include <numeric>
#include <ostream>

#include "qmf/arith.hpp"
#include "qmf/error.hpp"

namespace qmf::tau {

std::optional<TauKind> parse_tau_kind(const std::string& s) {
    if (s == "tau") return TauKind::Tau;
    if (s == "tau2") return TauKind::Tau2;
    if (s == "tau3") return TauKind::Tau3;
    return std::nullopt;
}

std::optional<TauMethod> parse_tau_method(const std::string& s) {
    if (s == "eta") return TauMethod::EtaProduct;
    if (s == "recursion") return TauMethod::LogRecursion;
    if (s == "formula") return TauMethod::ExplicitFormula;
    return std::nullopt;
}

namespace {

void check_exact_division(Int& value, unsigned long divisor, const char* context) {
    if (mpz_divisible_ui_p(value.get_mpz_t(), divisor) == 0)
        throw Error(ErrorCode::NonIntegralResult,
                    std::string(context) + ": division by " + std::to_string(divisor) +
                        " is not exact");
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), divisor);
}

// Dense coefficient vector of prod_f prod_{k>=1} (1 - q^{scale_f k})^{power_f}
// over exponents [0, length), one sparse pentagonal pass per unit of power.
std::vector<Int> eta_product_coeffs(std::initializer_list<std::pair<std::int64_t, int>> factors,
                                    std::int64_t length) {
    std::vector<Int> cur(static_cast<std::size_t>(length), Int(0));
    cur[0] = 1;
    std::vector<Int> next(static_cast<std::size_t>(length), Int(0));
    for (const auto& [scale, power] : factors) {
        std::vector<std::pair<std::int64_t, int>> terms;
        for (const auto& [e, s] : arith::pentagonal_terms((length + scale - 1) / scale))
            if (e * scale < length) terms.emplace_back(e * scale, s);
        for (int pass = 0; pass < power; ++pass) {
            for (auto& x : next) x = 0;
            for (std::int64_t i = 0; i < length; ++i) {
                Int& out = next[static_cast<std::size_t>(i)];
                for (const auto& [e, s] : terms) {
                    if (e > i) break;
                    if (s > 0)
                        out += cur[static_cast<std::size_t>(i - e)];
                    else
                        out -= cur[static_cast<std::size_t>(i - e)];
                }
            }
            cur.swap(next);
        }
    }
    return cur;
}

std::vector<Int> tau_values_eta(TauKind which, std::int64_t n_max) {
    std::vector<Int> unit;
    switch (which) {
        case TauKind::Tau: unit = eta_product_coeffs({{1, 24}}, n_max); break;
        case TauKind::Tau2: unit = eta_product_coeffs({{1, 8}, {2, 8}}, n_max); break;
        case TauKind::Tau3: unit = eta_product_coeffs({{1, 6}, {3, 6}}, n_max); break;
    }
    // valuation 1: tau(n) is the coefficient of q^(n-1) in the unit part
    std::vector<Int> values(static_cast<std::size_t>(n_max) + 1, Int(0));
    for (std::int64_t n = 1; n <= n_max; ++n)
        values[static_cast<std::size_t>(n)] = unit[static_cast<std::size_t>(n - 1)];
    return values;
}

// sigma(m) + c * delta_c(m) sigma(m/c); the log-derivative kernel of the
// corresponding Delta form.
std::vector<Int> shifted_sigma_kernel(const std::vector<Int>& sigma, std::int64_t c, long mult) {
    std::vector<Int> kernel(sigma.size(), Int(0));
    for (std::size_t m = 1; m < sigma.size(); ++m) {
        kernel[m] = sigma[m];
        if (static_cast<std::int64_t>(m) % c == 0) kernel[m] += mult * sigma[m / static_cast<std::size_t>(c)];
    }
    return kernel;
}

std::vector<Int> tau_values_recursion(TauKind which, std::int64_t n_max) {
    auto sigma = arith::sigma_table(1, n_max);
    std::vector<Int> kernel;
    unsigned long factor = 0;
    switch (which) {
        case TauKind::Tau:
            kernel = sigma;
            factor = 24;
            break;
        case TauKind::Tau2:
            kernel = shifted_sigma_kernel(sigma, 2, 2);
            factor = 8;
            break;
        case TauKind::Tau3:
            kernel = shifted_sigma_kernel(sigma, 3, 3);
            factor = 6;
            break;
    }
    std::vector<Int> values(static_cast<std::size_t>(n_max) + 1, Int(0));
    if (n_max >= 1) values[1] = 1;
    Int acc;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        acc = 0;
        for (std::int64_t j = 1; j < n; ++j)
            mpz_addmul(acc.get_mpz_t(), values[static_cast<std::size_t>(j)].get_mpz_t(),
                       kernel[static_cast<std::size_t>(n - j)].get_mpz_t());
        acc *= -static_cast<long>(factor);
        check_exact_division(acc, static_cast<unsigned long>(n - 1), "tau log recursion");
        values[static_cast<std::size_t>(n)] = acc;
    }
    return values;
}

std::vector<Int> tau_values_formula(TauKind which, std::int64_t n_max) {
    auto sigma = arith::sigma_table(1, n_max);
    std::vector<Int> values(static_cast<std::size_t>(n_max) + 1, Int(0));
    switch (which) {
        case TauKind::Tau: {
            // tau(n) = 40 sum_j (-10 n^2 j^2 + 30 n j^3 - 21 j^4) sigma(j) sigma(n-j)
            //          - n^4 (2n - 5) sigma(n) / 3
            for (std::int64_t n = 1; n <= n_max; ++n) {
                Int sum(0);
                Int term;
                for (std::int64_t j = 1; j < n; ++j) {
                    // j^2 (-10 n^2 + 30 n j - 21 j^2); the inner factor fits
                    // 64 bits for any table size within memory reach.
                    Int inner(-10 * n * n + 30 * n * j - 21 * j * j);
                    term = inner * (j * j);
                    term *= sigma[static_cast<std::size_t>(j)];
                    term *= sigma[static_cast<std::size_t>(n - j)];
                    sum += term;
                }
                Int tail;
                mpz_ui_pow_ui(tail.get_mpz_t(), static_cast<unsigned long>(n), 4);
                tail *= (2 * n - 5);
                tail *= sigma[static_cast<std::size_t>(n)];
                Int numerator = 120 * sum - tail;
                check_exact_division(numerator, 3, "tau explicit formula");
                values[static_cast<std::size_t>(n)] = numerator;
            }
            break;
        }
        case TauKind::Tau2: {
            auto kernel = shifted_sigma_kernel(sigma, 2, 2);
            for (std::int64_t n = 1; n <= n_max; ++n) {
                Int sum(0);
                Int term;
                for (std::int64_t j = 1; j < n; ++j) {
                    term = kernel[static_cast<std::size_t>(j)] * (3 * n * j - 5 * j * j);
                    term *= kernel[static_cast<std::size_t>(n - j)];
                    sum += term;
                }
                Int tail = kernel[static_cast<std::size_t>(n)] * (3 * n * n - 2 * n * n * n);
                values[static_cast<std::size_t>(n)] = 12 * sum + tail;
            }
            break;
        }
        case TauKind::Tau3: {
            auto plus = shifted_sigma_kernel(sigma, 3, 3);
            auto minus = shifted_sigma_kernel(sigma, 3, -3);
            for (std::int64_t n = 1; n <= n_max; ++n) {
                Int sum(0);
                Int term;
                for (std::int64_t j = 1; j < n; ++j) {
                    term = plus[static_cast<std::size_t>(j)] * (6 * (3 * n * j - 5 * j * j));
                    term *= plus[static_cast<std::size_t>(n - j)];
                    sum += term;
                    term = values[static_cast<std::size_t>(j)] * 12;
                    term *= minus[static_cast<std::size_t>(n - j)];
                    sum -= term;
                }
                Int tail = plus[static_cast<std::size_t>(n)] * (n * n * (n - 2));
                values[static_cast<std::size_t>(n)] = sum - tail;
            }
            break;
        }
    }
    return values;
}

}  // namespace

std::vector<Int> sigma_recurrence_table(std::int64_t n_max) {
    if (n_max < 1) throw Error(ErrorCode::DomainError, "sigma recurrence needs n_max >= 1");
    std::vector<Int> sigma(static_cast<std::size_t>(n_max) + 1, Int(0));
    sigma[1] = 1;
    Int acc, term;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        if (n % 2 == 0) {
            std::int64_t k = n / 2;
            acc = 0;
            for (std::int64_t j = 1; j <= k - 1; ++j) {
                term = 2 * sigma[static_cast<std::size_t>(2 * k - j)];
                term += 4 * sigma[static_cast<std::size_t>(k - j)];
                term -= 5 * sigma[static_cast<std::size_t>(2 * k - 2 * j)];
                term *= sigma[static_cast<std::size_t>(j)];
                acc += term;
            }
            acc *= 8;
            acc -= (4 * k + 1) * sigma[static_cast<std::size_t>(k)];
            acc += 8 * sigma[static_cast<std::size_t>(k)] * sigma[static_cast<std::size_t>(k)];
            check_exact_division(acc, static_cast<unsigned long>(2 * k - 1), "sigma recurrence (even)");
            sigma[static_cast<std::size_t>(n)] = acc;
        } else {
            std::int64_t k = (n - 1) / 2;
            acc = 0;
            for (std::int64_t j = 1; j <= k; ++j) {
                term = 8 * sigma[static_cast<std::size_t>(2 * k + 1 - j)];
                term -= 20 * sigma[static_cast<std::size_t>(2 * k + 1 - 2 * j)];
                term *= sigma[static_cast<std::size_t>(j)];
                acc += term;
            }
            check_exact_division(acc, static_cast<unsigned long>(k), "sigma recurrence (odd)");
            sigma[static_cast<std::size_t>(n)] = acc;
        }
    }
    return sigma;
}

Int sigma_recurrence(std::int64_t n) {
    if (n < 2) throw Error(ErrorCode::DomainError, "sigma recurrence is stated for n >= 2");
    return sigma_recurrence_table(n)[static_cast<std::size_t>(n)];
}

TauTable tau_table(TauKind which, TauMethod method, std::int64_t n_max) {
    if (n_max < 1) throw Error(ErrorCode::DomainError, "tau table needs n_max >= 1");
    TauTable table{which, method, {}};
    switch (method) {
        case TauMethod::EtaProduct: table.values = tau_values_eta(which, n_max); break;
        case TauMethod::LogRecursion: table.values = tau_values_recursion(which, n_max); break;
        case TauMethod::ExplicitFormula: table.values = tau_values_formula(which, n_max); break;
    }
    return table;
}

Int tau_value(TauKind which, TauMethod method, std::int64_t n) {
    return tau_table(which, method, n).at(n);
}

const std::vector<CongruenceRule>& congruence_rules() {
    static const std::vector<CongruenceRule> rules = {
        {"sigma-mod8", "(2k-1) sigma(2k) = (4k+7) sigma(k)  (mod 8)"},
        {"sigma-mod2", "sigma(2k) = sigma(k)  (mod 2)"},
        {"sigma-odd-mod4", "k sigma(2k+1) = 0  (mod 4)"},
        {"tau-mod24", "(n-1) tau(n) = 0  (mod 24)"},
        {"tau-mod2", "tau(n) = n sigma(n)  (mod 2)"},
        {"tau-mod5", "tau(n) = n sigma(n)  (mod 5)"},
        {"tau2-mod8", "(n-1) tau2(n) = 0  (mod 8)"},
        {"tau2-even-mod8", "tau2(2k) = 0  (mod 8)"},
        {"tau2-mod2", "tau2(n) = n sigma(n)  (mod 2)"},
        {"tau2-mod3", "tau2(3k) = 0  (mod 3)"},
        {"tau2-mod24", "tau2(6k) = 0  (mod 24)"},
        {"tau3-mod6", "(n-1) tau3(n) = 0  (mod 6)"},
        {"tau3-coprime-mod6", "tau3(n) = 0  (mod 6)  when gcd(n-1,6) = 1"},
        {"tau3-mod2", "tau3(n) = n (sigma(n) + delta_3(n) sigma(n/3))  (mod 2)"},
        {"tau3-sigma-mod3", "tau3(n) = 2n(n+1) sigma(n)  (mod 3)"},
        {"tau3-even-mod2", "tau3(2k) = 0  (mod 2)"},
        {"tau3-mod3", "tau3(3k) = 0  (mod 3)"},
        {"tau3-mod6k", "tau3(6k) = 0  (mod 6)"},
    };
    return rules;
}

namespace {

bool congruent(const Int& a, const Int& b, unsigned long mod) {
    Int d = a - b;
    return mpz_divisible_ui_p(d.get_mpz_t(), mod) != 0;
}

}  // namespace

CongruenceScanner::CongruenceScanner(std::int64_t up_to) : up_to_(up_to) {
    if (up_to < 1) throw Error(ErrorCode::DomainError, "scan bound must be >= 1");
    sigma_ = arith::sigma_table(1, up_to);
}

ScanResult CongruenceScanner::scan(const std::string& rule_id) const {
    auto& self = const_cast<CongruenceScanner&>(*this);
    auto tau_of = [&](TauKind kind) -> const std::vector<Int>& {
        std::vector<Int>* slot = nullptr;
        switch (kind) {
            case TauKind::Tau: slot = &self.tau_; break;
            case TauKind::Tau2: slot = &self.tau2_; break;
            case TauKind::Tau3: slot = &self.tau3_; break;
        }
        if (slot->empty()) *slot = tau_values_recursion(kind, up_to_);
        return *slot;
    };
    const std::int64_t N = up_to_;
    auto sigma = [&](std::int64_t n) -> const Int& { return sigma_[static_cast<std::size_t>(n)]; };
    ScanResult result;

    if (rule_id == "sigma-mod8") {
        for (std::int64_t k = 1; 2 * k <= N; ++k)
            if (!congruent((2 * k - 1) * sigma(2 * k), (4 * k + 7) * sigma(k), 8)) return ScanResult{true, 2 * k};
    } else if (rule_id == "sigma-mod2") {
        for (std::int64_t k = 1; 2 * k <= N; ++k)
            if (!congruent(sigma(2 * k), sigma(k), 2)) return ScanResult{true, 2 * k};
    } else if (rule_id == "sigma-odd-mod4") {
        for (std::int64_t k = 1; 2 * k + 1 <= N; ++k)
            if (!congruent(k * sigma(2 * k + 1), Int(0), 4)) return ScanResult{true, 2 * k + 1};
    } else if (rule_id == "tau-mod24") {
        const auto& t = tau_of(TauKind::Tau);
        for (std::int64_t n = 2; n <= N; ++n)
            if (!congruent((n - 1) * t[static_cast<std::size_t>(n)], Int(0), 24)) return ScanResult{true, n};
    } else if (rule_id == "tau-mod2") {
        const auto& t = tau_of(TauKind::Tau);
        for (std::int64_t n = 1; n <= N; ++n)
            if (!congruent(t[static_cast<std::size_t>(n)], n * sigma(n), 2)) return ScanResult{true, n};
    } else if (rule_id == "tau-mod5") {
        const auto& t = tau_of(TauKind::Tau);
        for (std::int64_t n = 1; n <= N; ++n)
            if (!congruent(t[static_cast<std::size_t>(n)], n * sigma(n), 5)) return ScanResult{true, n};
    } else if (rule_id == "tau2-mod8") {
        const auto& t = tau_of(TauKind::Tau2);
        for (std::int64_t n = 2; n <= N; ++n)
            if (!congruent((n - 1) * t[static_cast<std::size_t>(n)], Int(0), 8)) return ScanResult{true, n};
    } else if (rule_id == "tau2-even-mod8") {
        const auto& t = tau_of(TauKind::Tau2);
        for (std::int64_t k = 1; 2 * k <= N; ++k)
            if (!congruent(t[static_cast<std::size_t>(2 * k)], Int(0), 8)) return ScanResult{true, 2 * k};
    } else if (rule_id == "tau2-mod2") {
        const auto& t = tau_of(TauKind::Tau2);
        for (std::int64_t n = 1; n <= N; ++n)
            if (!congruent(t[static_cast<std::size_t>(n)], n * sigma(n), 2)) return ScanResult{true, n};
    } else if (rule_id == "tau2-mod3") {
        const auto& t = tau_of(TauKind::Tau2);
        for (std::int64_t k = 1; 3 * k <= N; ++k)
            if (!congruent(t[static_cast<std::size_t>(3 * k)], Int(0), 3)) return ScanResult{true, 3 * k};
    } else if (rule_id == "tau2-mod24") {
        const auto& t = tau_of(TauKind::Tau2);
        for (std::int64_t k = 1; 6 * k <= N; ++k)
            if (!congruent(t[static_cast<std::size_t>(6 * k)], Int(0), 24)) return ScanResult{true, 6 * k};
    } else if (rule_id == "tau3-mod6") {
        const auto& t = tau_of(TauKind::Tau3);
        for (std::int64_t n = 2; n <= N; ++n)
            if (!congruent((n - 1) * t[static_cast<std::size_t>(n)], Int(0), 6)) return ScanResult{true, n};
    } else if (rule_id == "tau3-coprime-mod6") {
        const auto& t = tau_of(TauKind::Tau3);
        for (std::int64_t n = 2; n <= N; ++n) {
            std::int64_t g = std::gcd(n - 1, static_cast<std::int64_t>(6));
            if (g == 1 && !congruent(t[static_cast<std::size_t>(n)], Int(0), 6)) return ScanResult{true, n};
        }
    } else if (rule_id == "tau3-mod2") {
        const auto& t = tau_of(TauKind::Tau3);
        for (std::int64_t n = 1; n <= N; ++n) {
            Int rhs = sigma(n);
            if (n % 3 == 0) rhs += sigma(n / 3);
            rhs *= n;
            if (!congruent(t[static_cast<std::size_t>(n)], rhs, 2)) return ScanResult{true, n};
        }
    } else if (rule_id == "tau3-sigma-mod3") {
        const auto& t = tau_of(TauKind::Tau3);
        for (std::int64_t n = 1; n <= N; ++n)
            if (!congruent(t[static_cast<std::size_t>(n)], 2 * n * (n + 1) * sigma(n), 3)) return ScanResult{true, n};
    } else if (rule_id == "tau3-even-mod2") {
        const auto& t = tau_of(TauKind::Tau3);
        for (std::int64_t k = 1; 2 * k <= N; ++k)
            if (!congruent(t[static_cast<std::size_t>(2 * k)], Int(0), 2)) return ScanResult{true, 2 * k};
    } else if (rule_id == "tau3-mod3") {
        const auto& t = tau_of(TauKind::Tau3);
        for (std::int64_t k = 1; 3 * k <= N; ++k)
            if (!congruent(t[static_cast<std::size_t>(3 * k)], Int(0), 3)) return ScanResult{true, 3 * k};
    } else if (rule_id == "tau3-mod6k") {
        const auto& t = tau_of(TauKind::Tau3);
        for (std::int64_t k = 1; 6 * k <= N; ++k)
            if (!congruent(t[static_cast<std::size_t>(6 * k)], Int(0), 6)) return ScanResult{true, 6 * k};
    } else {
        throw Error(ErrorCode::UnknownRule, "unknown congruence rule: " + rule_id);
    }
    return result;
}

ScanResult congruence_scan(const std::string& rule_id, std::int64_t up_to) {
    CongruenceScanner scanner(up_to);
    return scanner.scan(rule_id);
}

void write_bfile(std::ostream& out, const std::vector<Int>& values, std::int64_t offset) {
    std::int64_t n = offset;
    for (const Int& v : values) {
        out << n << " " << v.get_str() << "\n";
        ++n;
    }
}

}  // namespace qmf::tau
