#include "qmf/forms.hpp"

#include <algorithm>

#include "qmf/arith.hpp"
#include "qmf/error.hpp"

namespace qmf {

int group_index(Group g) {
    switch (g) {
        case Group::SL2Z: return 1;
        case Group::Gamma0_2: return 3;
        case Group::Gamma0_3: return 4;
    }
    throw Error(ErrorCode::DomainError, "unknown group");
}

const char* group_name(Group g) {
    switch (g) {
        case Group::SL2Z: return "SL2Z";
        case Group::Gamma0_2: return "Gamma0(2)";
        case Group::Gamma0_3: return "Gamma0(3)";
    }
    return "?";
}

std::optional<Group> parse_group(const std::string& name) {
    if (name == "sl2z" || name == "SL2Z") return Group::SL2Z;
    if (name == "gamma0_2" || name == "Gamma0(2)" || name == "2") return Group::Gamma0_2;
    if (name == "gamma0_3" || name == "Gamma0(3)" || name == "3") return Group::Gamma0_3;
    return std::nullopt;
}

std::int64_t EtaQuotientSpec::exponent_sum() const {
    std::int64_t sum = 0;
    for (const auto& f : factors) sum += f.scale * f.exponent;
    return sum;
}

Form eisenstein(int j, std::int64_t m, std::int64_t precision) {
    if (j < 1 || j > 3) throw Error(ErrorCode::DomainError, "eisenstein index must be 1, 2 or 3");
    if (m < 1) throw Error(ErrorCode::DomainError, "eisenstein scale must be positive");
    if (precision < 1) throw Error(ErrorCode::DomainError, "precision must be >= 1");
    static const long b[3] = {-24, 240, -504};
    std::int64_t base_prec = (precision + m - 1) / m;
    auto sigma = arith::sigma_table(2 * j - 1, base_prec - 1);
    std::vector<Rat> coeffs(static_cast<std::size_t>(base_prec), Rat(0));
    coeffs[0] = 1;
    for (std::int64_t n = 1; n < base_prec; ++n)
        coeffs[static_cast<std::size_t>(n)] = Rat(b[j - 1]) * Rat(sigma[static_cast<std::size_t>(n)]);
    QSeries base = QSeries::from_coeffs(0, std::move(coeffs), base_prec);
    if (m > 1) base = base.substituted(m).truncated(precision);
    FormDescriptor desc{2 * j,
                        m == 2 ? Group::Gamma0_2 : (m == 3 ? Group::Gamma0_3 : Group::SL2Z),
                        j == 1 ? FormKind::QuasiModular : FormKind::Modular};
    return Form{std::move(base), desc};
}

QSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t precision) {
    std::int64_t sum = spec.exponent_sum();
    if (sum % 24 != 0)
        throw Error(ErrorCode::FractionalExponent,
                    "eta quotient exponent sum " + std::to_string(sum) + " is not divisible by 24");
    std::int64_t shift = sum / 24;
    std::int64_t unit_prec = std::max<std::int64_t>(1, precision - shift);
    QSeries product = QSeries::constant(1);
    for (const auto& f : spec.factors) {
        std::int64_t base_prec = (unit_prec + f.scale - 1) / f.scale;
        QSeries factor = arith::euler_product(base_prec).substituted(f.scale).truncated(unit_prec);
        product = product * factor.pow(f.exponent);
    }
    return product.shifted(shift).truncated(precision);
}

QSeries eta_quotient_log_derivative(const EtaQuotientSpec& spec, std::int64_t precision) {
    std::int64_t sum = spec.exponent_sum();
    if (sum % 24 != 0)
        throw Error(ErrorCode::FractionalExponent,
                    "eta quotient exponent sum " + std::to_string(sum) + " is not divisible by 24");
    QSeries result = QSeries::zero(precision);
    for (const auto& f : spec.factors) {
        QSeries e2 = eisenstein(1, f.scale, precision).series;
        result = result + e2 * ratio(static_cast<long>(f.scale * f.exponent), 24);
    }
    return result;
}

QSeries theta3(std::int64_t m, int sign, std::int64_t precision) {
    if (m < 1) throw Error(ErrorCode::DomainError, "theta3 scale must be positive");
    if (sign != 1 && sign != -1) throw Error(ErrorCode::DomainError, "theta3 sign must be +1 or -1");
    if (precision < 1) throw Error(ErrorCode::DomainError, "precision must be >= 1");
    std::vector<Rat> coeffs(static_cast<std::size_t>(precision), Rat(0));
    coeffs[0] = 1;
    for (std::int64_t n = 1; m * n * n < precision; ++n)
        coeffs[static_cast<std::size_t>(m * n * n)] = (sign == -1 && (n % 2) != 0) ? Rat(-2) : Rat(2);
    return QSeries::from_coeffs(0, std::move(coeffs), precision);
}

namespace {

struct NameEntry {
    const char* text;
    FormName name;
};

constexpr NameEntry kNames[] = {
    {"E2", FormName::E2},         {"E4", FormName::E4},   {"E6", FormName::E6},
    {"Delta", FormName::Delta},   {"P2", FormName::P2},   {"Q2", FormName::Q2},
    {"R2", FormName::R2},         {"Delta2", FormName::Delta2},
    {"P3", FormName::P3},         {"Q3", FormName::Q3},   {"R3", FormName::R3},
    {"S3", FormName::S3},         {"Delta3", FormName::Delta3},
    {"j", FormName::J},           {"j2", FormName::J2},   {"j3", FormName::J3},
    {"P3orig", FormName::P3orig},
};

QSeries build_r3(std::int64_t precision) {
    // eta^8(q^3) + 9 eta^8(q^3) eta^3(q^9) / eta^3(q); exponent sums 24 and 48.
    QSeries head = eta_quotient({{{3, 8}}}, precision);
    QSeries tail = eta_quotient({{{3, 8}, {9, 3}, {1, -3}}}, precision);
    return head + tail * Rat(9);
}

QSeries build_p3orig(std::int64_t precision) {
    // Weight-1 theta form (2 theta3(q) theta3(q^3) - theta3(-q) theta3(-q^3)) / 3,
    // the particular solution component t_1 of the n=1 system in original
    // coordinates.
    QSeries plus = theta3(1, +1, precision) * theta3(3, +1, precision);
    QSeries minus = theta3(1, -1, precision) * theta3(3, -1, precision);
    return (plus * Rat(2) - minus) / Rat(3);
}

}  // namespace

std::optional<FormName> parse_form_name(const std::string& name) {
    for (const auto& e : kNames)
        if (name == e.text) return e.name;
    return std::nullopt;
}

const char* form_name_string(FormName name) {
    for (const auto& e : kNames)
        if (e.name == name) return e.text;
    return "?";
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : kNames) names.emplace_back(e.text);
    return names;
}

CatalogEntry catalog(FormName name, std::int64_t precision) {
    if (precision < 1) throw Error(ErrorCode::DomainError, "precision must be >= 1");
    // Quotient constructions lose up to two orders to the cusp-form valuation.
    std::int64_t p = precision + 4;
    auto entry = [&](QSeries s, int weight, Group g, FormKind kind) {
        return CatalogEntry{s.truncated(precision), FormDescriptor{weight, g, kind}};
    };
    switch (name) {
        case FormName::E2:
            return entry(eisenstein(1, 1, p).series, 2, Group::SL2Z, FormKind::QuasiModular);
        case FormName::E4:
            return entry(eisenstein(2, 1, p).series, 4, Group::SL2Z, FormKind::Modular);
        case FormName::E6:
            return entry(eisenstein(3, 1, p).series, 6, Group::SL2Z, FormKind::Modular);
        case FormName::Delta:
            return entry(eta_quotient({{{1, 24}}}, p), 12, Group::SL2Z, FormKind::Cusp);
        case FormName::P2: {
            QSeries s = (eisenstein(1, 1, p).series + eisenstein(1, 2, p).series * Rat(2)) / Rat(3);
            return entry(std::move(s), 2, Group::Gamma0_2, FormKind::QuasiModular);
        }
        case FormName::Q2: {
            QSeries s = eisenstein(1, 2, p).series * Rat(2) - eisenstein(1, 1, p).series;
            return entry(std::move(s), 2, Group::Gamma0_2, FormKind::Modular);
        }
        case FormName::R2: {
            QSeries s = (eisenstein(2, 2, p).series * Rat(4) - eisenstein(2, 1, p).series) / Rat(3);
            return entry(std::move(s), 4, Group::Gamma0_2, FormKind::Modular);
        }
        case FormName::Delta2:
            return entry(eta_quotient({{{1, 8}, {2, 8}}}, p), 8, Group::Gamma0_2, FormKind::Cusp);
        case FormName::P3: {
            QSeries s = (eisenstein(1, 1, p).series + eisenstein(1, 3, p).series * Rat(3)) / Rat(4);
            return entry(std::move(s), 2, Group::Gamma0_3, FormKind::QuasiModular);
        }
        case FormName::Q3: {
            QSeries s = (eisenstein(1, 3, p).series * Rat(3) - eisenstein(1, 1, p).series) / Rat(2);
            return entry(std::move(s), 2, Group::Gamma0_3, FormKind::Modular);
        }
        case FormName::R3:
            return entry(build_r3(p), 4, Group::Gamma0_3, FormKind::Modular);
        case FormName::S3:
            return entry(eta_quotient({{{3, 18}, {1, -6}}}, p), 6, Group::Gamma0_3, FormKind::Modular);
        case FormName::Delta3:
            return entry(eta_quotient({{{1, 6}, {3, 6}}}, p), 6, Group::Gamma0_3, FormKind::Cusp);
        case FormName::J: {
            QSeries s = catalog(FormName::E4, p).series.pow(3) / catalog(FormName::Delta, p).series;
            return entry(std::move(s), 0, Group::SL2Z, FormKind::Weakly);
        }
        case FormName::J2: {
            QSeries s = catalog(FormName::Q2, p).series.pow(4) / catalog(FormName::Delta2, p).series;
            return entry(std::move(s), 0, Group::Gamma0_2, FormKind::Weakly);
        }
        case FormName::J3: {
            QSeries s = catalog(FormName::Q3, p).series.pow(3) / catalog(FormName::Delta3, p).series;
            return entry(std::move(s), 0, Group::Gamma0_3, FormKind::Weakly);
        }
        case FormName::P3orig:
            return CatalogEntry{build_p3orig(p).truncated(precision), std::nullopt};
    }
    throw Error(ErrorCode::UnknownName, "unknown form name");
}

CatalogEntry catalog(const std::string& name, std::int64_t precision) {
    auto parsed = parse_form_name(name);
    if (!parsed) throw Error(ErrorCode::UnknownName, "unknown form name: " + name);
    return catalog(*parsed, precision);
}

std::vector<QSeries> generator_series(Group g, std::int64_t precision) {
    switch (g) {
        case Group::SL2Z:
            return {catalog(FormName::E2, precision).series, catalog(FormName::E4, precision).series,
                    catalog(FormName::E6, precision).series};
        case Group::Gamma0_2:
            return {catalog(FormName::P2, precision).series, catalog(FormName::Q2, precision).series,
                    catalog(FormName::R2, precision).series};
        case Group::Gamma0_3:
            return {catalog(FormName::P3, precision).series, catalog(FormName::Q3, precision).series,
                    catalog(FormName::R3, precision).series, catalog(FormName::S3, precision).series};
    }
    throw Error(ErrorCode::DomainError, "unknown group");
}

}  // namespace qmf
