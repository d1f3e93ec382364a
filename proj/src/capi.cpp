#include "qmforms.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "qmf/error.hpp"
#include "qmf/forms.hpp"
#include "qmf/modspace.hpp"
#include "qmf/qseries.hpp"
#include "qmf/qseries_json.hpp"
#include "qmf/tau.hpp"
#include "qmf/verify.hpp"

struct qmf_series {
    qmf::QSeries value;
};

namespace {

qmf_status status_of(const qmf::Error& e) {
    return static_cast<qmf_status>(e.code());
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
qmf_status guarded(F&& f) {
    try {
        f();
        return QMF_OK;
    } catch (const qmf::Error& e) {
        return status_of(e);
    } catch (const std::bad_alloc&) {
        return QMF_ERR_INTERNAL;
    } catch (...) {
        return QMF_ERR_INTERNAL;
    }
}

qmf::Group require_group(const char* name) {
    auto group = qmf::parse_group(name);
    if (!group) throw qmf::Error(qmf::ErrorCode::UnknownName, "unknown group");
    return *group;
}

}  // namespace

extern "C" {

const char* qmf_status_message(qmf_status status) {
    switch (status) {
        case QMF_OK: return "ok";
        case QMF_ERR_UNKNOWN_NAME: return "unknown name";
        case QMF_ERR_UNKNOWN_RULE: return "unknown congruence rule";
        case QMF_ERR_DOMAIN: return "argument outside the operation's domain";
        case QMF_ERR_ZERO_LEADING_COEFF: return "series is zero to precision";
        case QMF_ERR_FRACTIONAL_EXPONENT: return "eta quotient exponent sum not divisible by 24";
        case QMF_ERR_NON_INTEGRAL: return "exact division failed";
        case QMF_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case QMF_ERR_SUBSTITUTION: return "ill-formed substitution";
        case QMF_ERR_DESCRIPTOR_MISMATCH: return "form descriptors do not match";
        case QMF_ERR_PRECISION: return "insufficient series precision";
        case QMF_ERR_NOT_PRIME: return "level must be prime";
        case QMF_ERR_CROSSCHECK: return "cross-check methods disagree";
        case QMF_ERR_BAD_ARGUMENT: return "bad argument";
        case QMF_ERR_INTERNAL: return "internal error";
        default: return "unknown status";
    }
}

const char* qmf_version(void) { return "1.0.0"; }

void qmf_string_free(char* s) { delete[] s; }

qmf_status qmf_series_catalog(const char* name, int64_t order, qmf_series** out) {
    if (!name || !out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto entry = qmf::catalog(std::string(name), order);
        *out = new qmf_series{std::move(entry.series)};
    });
}

void qmf_series_release(qmf_series* s) { delete s; }

int64_t qmf_series_valuation(const qmf_series* s) { return s->value.valuation(); }

int64_t qmf_series_precision(const qmf_series* s) { return s->value.precision(); }

qmf_status qmf_series_coeff(const qmf_series* s, int64_t exponent, char** out) {
    if (!s || !out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = copy_string(qmf::rat_to_string(s->value.coeff(exponent))); });
}

qmf_status qmf_series_to_json(const qmf_series* s, char** out) {
    if (!s || !out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = copy_string(qmf::qseries_to_json(s->value)); });
}

qmf_status qmf_catalog_names(char** out) {
    if (!out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        std::ostringstream text;
        for (const std::string& name : qmf::catalog_names()) text << name << "\n";
        *out = copy_string(text.str());
    });
}

qmf_status qmf_verify_suite(const char* suite, int64_t order, int quiet, char** report_out,
                            int32_t* failed_out) {
    if (!suite || !report_out || !failed_out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        qmf::verify::Report report = qmf::verify::run_suite(suite, order);
        *report_out = copy_string(report.str(quiet != 0));
        *failed_out = report.failures();
    });
}

qmf_status qmf_tau_value(const char* which, int64_t n, const char* method, char** out) {
    if (!which || !method || !out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto kind = qmf::tau::parse_tau_kind(which);
        if (!kind) throw qmf::Error(qmf::ErrorCode::UnknownName, "unknown tau function");
        auto m = qmf::tau::parse_tau_method(method);
        if (!m) throw qmf::Error(qmf::ErrorCode::UnknownName, "unknown tau method");
        if (n < 1) throw qmf::Error(qmf::ErrorCode::DomainError, "tau is indexed from 1");
        *out = copy_string(qmf::tau::tau_value(*kind, *m, n).get_str());
    });
}

qmf_status qmf_tau_crosscheck(const char* which, int64_t n, char** out) {
    if (!which || !out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto kind = qmf::tau::parse_tau_kind(which);
        if (!kind) throw qmf::Error(qmf::ErrorCode::UnknownName, "unknown tau function");
        if (n < 1) throw qmf::Error(qmf::ErrorCode::DomainError, "tau is indexed from 1");
        qmf::Int eta = qmf::tau::tau_value(*kind, qmf::tau::TauMethod::EtaProduct, n);
        qmf::Int rec = qmf::tau::tau_value(*kind, qmf::tau::TauMethod::LogRecursion, n);
        qmf::Int formula = qmf::tau::tau_value(*kind, qmf::tau::TauMethod::ExplicitFormula, n);
        if (eta != rec || eta != formula)
            throw qmf::Error(qmf::ErrorCode::CrosscheckMismatch, "tau methods disagree");
        *out = copy_string(eta.get_str());
    });
}

qmf_status qmf_scan_rules(char** out) {
    if (!out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        std::ostringstream text;
        for (const auto& rule : qmf::tau::congruence_rules())
            text << rule.id << ": " << rule.description << "\n";
        *out = copy_string(text.str());
    });
}

qmf_status qmf_scan_rule(const char* rule, int64_t up_to, int32_t* violation_out, int64_t* at_out) {
    if (!rule || !violation_out || !at_out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto result = qmf::tau::congruence_scan(rule, up_to);
        *violation_out = result.violation ? 1 : 0;
        *at_out = result.at;
    });
}

qmf_status qmf_x0p_invariants(int64_t p, qmf_x0p_info* out) {
    if (!out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto inv = qmf::modspace::x0p_invariants(p);
        out->p = inv.p;
        out->index = inv.index;
        out->eps2 = inv.eps2;
        out->eps3 = inv.eps3;
        out->genus = inv.genus;
        out->cusps = inv.cusps;
        out->width_infinity = inv.widths[0];
        out->width_zero = inv.widths[1];
    });
}

qmf_status qmf_dim_modular(int64_t p, int64_t k, int64_t* out) {
    if (!out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = qmf::modspace::dim_modular(p, static_cast<int>(k)); });
}

qmf_status qmf_dim_cusp(int64_t p, int64_t k, int64_t* out) {
    if (!out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] { *out = qmf::modspace::dim_cusp(p, static_cast<int>(k)); });
}

qmf_status qmf_sturm_bound(const char* group, int64_t k, int64_t* out) {
    if (!group || !out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        *out = qmf::modspace::sturm_bound(require_group(group), static_cast<int>(k));
    });
}

qmf_status qmf_monomial_basis(const char* group, int64_t k, char** out) {
    if (!group || !out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        qmf::Group g = require_group(group);
        auto names = qmf::modspace::basis_variable_names(g);
        std::ostringstream text;
        for (const auto& exponents : qmf::modspace::monomial_basis(g, static_cast<int>(k))) {
            bool printed = false;
            for (std::size_t v = 0; v < exponents.size(); ++v) {
                if (exponents[v] == 0) continue;
                if (printed) text << "*";
                text << names[v];
                if (exponents[v] > 1) text << "^" << exponents[v];
                printed = true;
            }
            if (!printed) text << "1";
            text << "\n";
        }
        *out = copy_string(text.str());
    });
}

qmf_status qmf_verify_independence(const char* group, int64_t k, int64_t* rank_out,
                                   int64_t* dim_out) {
    if (!group || !rank_out || !dim_out) return QMF_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto report = qmf::modspace::verify_independence(require_group(group), static_cast<int>(k));
        *rank_out = report.rank;
        *dim_out = report.dim;
    });
}

}  // extern "C"
