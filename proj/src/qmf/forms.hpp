#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

enum class Group { SL2Z, Gamma0_2, Gamma0_3 };

/// Index d_Gamma entering the effectiveness bound: 1, 3, 4.
int group_index(Group g);
const char* group_name(Group g);
std::optional<Group> parse_group(const std::string& name);

enum class FormKind { Modular, QuasiModular, Cusp, Weakly };

struct FormDescriptor {
    int weight = 0;
    Group group = Group::SL2Z;
    FormKind kind = FormKind::Modular;
};

/// Formal product prod_j eta(q^{r_j})^{t_j}. Constructible as a q-series
/// only when 24 divides sum r_j t_j.
struct EtaQuotientSpec {
    struct Factor {
        std::int64_t scale;     // r_j
        std::int64_t exponent;  // t_j
    };
    std::vector<Factor> factors;

    std::int64_t exponent_sum() const;  // sum r_j t_j
};

/// E_{2j}(q^m) with (b_1,b_2,b_3) = (-24, 240, -504); weight 2j,
/// quasi-modular for j = 1 and modular otherwise.
struct Form {
    QSeries series;
    FormDescriptor descriptor;
};

Form eisenstein(int j, std::int64_t m, std::int64_t precision);

/// q^(sum r_j t_j / 24) * prod_j prod_k (1 - q^{r_j k})^{t_j}.
QSeries eta_quotient(const EtaQuotientSpec& spec, std::int64_t precision);

/// Logarithmic derivative of the eta quotient: sum_j (r_j t_j / 24) E_2(q^{r_j}).
QSeries eta_quotient_log_derivative(const EtaQuotientSpec& spec, std::int64_t precision);

/// theta3(s q^m) = 1 + 2 sum_{n>=1} s^n q^{m n^2}.
QSeries theta3(std::int64_t m, int sign, std::int64_t precision);

enum class FormName {
    E2, E4, E6, Delta,
    P2, Q2, R2, Delta2,
    P3, Q3, R3, S3, Delta3,
    J, J2, J3,
    P3orig,
};

std::optional<FormName> parse_form_name(const std::string& name);
const char* form_name_string(FormName name);
std::vector<std::string> catalog_names();

struct CatalogEntry {
    QSeries series;
    // Absent for P3orig: the weight-1 theta form carries no descriptor here.
    std::optional<FormDescriptor> descriptor;
};

CatalogEntry catalog(FormName name, std::int64_t precision);
CatalogEntry catalog(const std::string& name, std::int64_t precision);

/// Generator tuple used to evaluate polynomial identities:
/// SL2Z -> (E2, E4, E6); Gamma0(2) -> (P2, Q2, R2); Gamma0(3) -> (P3, Q3, R3, S3).
std::vector<QSeries> generator_series(Group g, std::int64_t precision);

}  // namespace qmf
