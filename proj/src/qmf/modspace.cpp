#include "qmf/modspace.hpp"

#include <algorithm>

#include "qmf/arith.hpp"
#include "qmf/error.hpp"

namespace qmf::modspace {

X0pInvariants x0p_invariants(std::int64_t p) {
    if (!arith::is_prime(p)) throw Error(ErrorCode::NotPrime, "level must be prime");
    X0pInvariants inv{};
    inv.p = p;
    inv.index = p + 1;
    if (p == 2)
        inv.eps2 = 1;
    else
        inv.eps2 = (p % 4 == 1) ? 2 : 0;
    if (p == 3)
        inv.eps3 = 1;
    else
        inv.eps3 = (p % 3 == 1) ? 2 : 0;
    std::int64_t q = (p + 1) / 12;
    inv.genus = ((p + 1) % 12 == 2) ? q - 1 : q;
    inv.cusps = 2;
    inv.widths = {1, p};
    return inv;
}

namespace {

void require_even_weight(int k) {
    if (k < 2 || k % 2 != 0)
        throw Error(ErrorCode::DomainError, "dimension formulas require even k >= 2");
}

}  // namespace

std::int64_t dim_modular(std::int64_t p, int k) {
    require_even_weight(k);
    X0pInvariants inv = x0p_invariants(p);
    return (k - 1) * (inv.genus - 1) + (k / 4) * inv.eps2 + (k / 3) * inv.eps3 + k;
}

std::int64_t dim_cusp(std::int64_t p, int k) {
    require_even_weight(k);
    X0pInvariants inv = x0p_invariants(p);
    if (k == 2) return inv.genus;
    return (k - 1) * (inv.genus - 1) + (k / 4) * inv.eps2 + (k / 3) * inv.eps3 + k - 2;
}

std::int64_t sturm_bound(Group group, int k) {
    if (k < 0) throw Error(ErrorCode::DomainError, "weight must be non-negative");
    return static_cast<std::int64_t>(group_index(group)) * k / 12;
}

CertifyResult certify_equal(const Form& f, const Form& g, Group group, int k) {
    for (const Form* h : {&f, &g}) {
        if (h->descriptor.weight != k || h->descriptor.group != group)
            throw Error(ErrorCode::DescriptorMismatch, "weight or group differs from the stated ones");
        if (h->descriptor.kind != FormKind::Modular && h->descriptor.kind != FormKind::Cusp)
            throw Error(ErrorCode::DescriptorMismatch,
                        "effectiveness certification applies to modular forms only");
    }
    std::int64_t bound = sturm_bound(group, k);
    if (f.series.precision() <= bound || g.series.precision() <= bound)
        return {CertifyOutcome::InsufficientPrecision, -1};
    for (std::int64_t j = 0; j <= bound; ++j)
        if (f.series.coeff(j) != g.series.coeff(j)) return {CertifyOutcome::Unequal, j};
    return {CertifyOutcome::Equal, -1};
}

std::vector<std::vector<int>> monomial_basis(Group group, int k) {
    if (k < 0 || k % 2 != 0)
        throw Error(ErrorCode::DomainError, "monomial bases exist for even k >= 0 only");
    std::vector<std::vector<int>> basis;
    switch (group) {
        case Group::SL2Z:
            for (int a = 0; 4 * a <= k; ++a) {
                if ((k - 4 * a) % 6 != 0) continue;
                basis.push_back({a, (k - 4 * a) / 6});
            }
            // weight-lexicographic display order: decreasing E4 exponent
            std::sort(basis.begin(), basis.end(),
                      [](const auto& x, const auto& y) { return x[0] > y[0]; });
            break;
        case Group::Gamma0_2:
            for (int s = 0; 4 * s <= k; ++s) basis.push_back({(k - 4 * s) / 2, s});
            break;
        case Group::Gamma0_3:
            for (int j = 0; j <= k / 3; ++j) {
                // minimal-c representative of 2a + 4b + 6c = k, b + 2c = j
                int c = std::max(0, 2 * j - k / 2);
                int b = j - 2 * c;
                int a = k / 2 - 2 * j + c;
                basis.push_back({a, b, c});
            }
            break;
    }
    return basis;
}

std::vector<std::string> basis_variable_names(Group group) {
    switch (group) {
        case Group::SL2Z: return {"E4", "E6"};
        case Group::Gamma0_2: return {"Q2", "R2"};
        case Group::Gamma0_3: return {"Q3", "R3", "S3"};
    }
    throw Error(ErrorCode::DomainError, "unknown group");
}

IndependenceReport verify_independence(Group group, int k) {
    if (k < 2 || k % 2 != 0)
        throw Error(ErrorCode::DomainError, "independence check requires even k >= 2");
    auto basis = monomial_basis(group, k);
    std::int64_t dim = 0;
    switch (group) {
        case Group::SL2Z:
            // E4 and E6 are algebraically independent, so the monomial count
            // is the dimension.
            dim = static_cast<std::int64_t>(basis.size());
            break;
        case Group::Gamma0_2: dim = dim_modular(2, k); break;
        case Group::Gamma0_3: dim = dim_modular(3, k); break;
    }
    std::int64_t bound = sturm_bound(group, k);
    std::int64_t precision = bound + 2;
    std::vector<QSeries> gens = generator_series(group, precision);
    std::vector<std::vector<Rat>> matrix;
    for (const auto& exponents : basis) {
        QSeries value = QSeries::constant(1).truncated(precision);
        for (std::size_t v = 0; v < exponents.size(); ++v)
            value = value * gens[v + 1].pow(exponents[v]);  // gens[0] is quasi-modular
        std::vector<Rat> row;
        for (std::int64_t j = 0; j <= bound; ++j) row.push_back(value.coeff(j));
        matrix.push_back(std::move(row));
    }
    std::int64_t rank = rank_rational(std::move(matrix));
    return IndependenceReport{rank, dim, rank == dim};
}

std::int64_t rank_rational(std::vector<std::vector<Rat>> matrix) {
    if (matrix.empty()) return 0;
    // Clear denominators row by row, then run fraction-free (Bareiss-style)
    // elimination over the integers.
    std::size_t rows = matrix.size();
    std::size_t cols = matrix[0].size();
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int lcm(1);
        for (const Rat& x : matrix[i]) {
            Int den(x.get_den());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat scaled = matrix[i][j] * Rat(lcm);
            m[i][j] = Int(scaled.get_num());
        }
    }
    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

}  // namespace qmf::modspace
