// Command-line front end for libqmforms. Talks to the library exclusively
// through the C API in qmforms.h.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "qmforms.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { qmf_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int report_error(qmf_status status, const std::string& context) {
    std::cerr << "error: " << context << ": " << qmf_status_message(status) << "\n";
    if (status == QMF_ERR_UNKNOWN_NAME || status == QMF_ERR_UNKNOWN_RULE) return 2;
    return 2;
}

struct SeriesHandle {
    qmf_series* s = nullptr;
    ~SeriesHandle() { qmf_series_release(s); }
};

int cmd_expand(const std::string& name, std::int64_t order, const std::string& format) {
    if (format != "json" && format != "csv" && format != "bfile") {
        std::cerr << "error: unknown format '" << format << "' (expected json, csv or bfile)\n";
        return 3;
    }
    if (order < 1) {
        std::cerr << "error: --order must be >= 1\n";
        return 2;
    }
    SeriesHandle handle;
    qmf_status status = qmf_series_catalog(name.c_str(), order, &handle.s);
    if (status != QMF_OK) return report_error(status, "expand " + name);
    if (format == "json") {
        CString text;
        char* raw = nullptr;
        status = qmf_series_to_json(handle.s, &raw);
        if (status != QMF_OK) return report_error(status, "expand " + name);
        text.reset(raw);
        std::cout << text.get() << "\n";
        return 0;
    }
    // bfile rows start at the sequence's natural offset (the valuation);
    // csv rows cover every exponent from min(valuation, 0).
    std::int64_t val = qmf_series_valuation(handle.s);
    std::int64_t lo = format == "bfile" ? val : std::min<std::int64_t>(val, 0);
    std::int64_t hi = qmf_series_precision(handle.s);
    const char* sep = format == "csv" ? "," : " ";
    for (std::int64_t e = lo; e < hi; ++e) {
        char* raw = nullptr;
        status = qmf_series_coeff(handle.s, e, &raw);
        if (status != QMF_OK) return report_error(status, "expand " + name);
        CString coeff(raw);
        std::cout << e << sep << coeff.get() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::int64_t order, bool quiet) {
    char* raw = nullptr;
    int32_t failed = 0;
    qmf_status status = qmf_verify_suite(suite.c_str(), order, quiet ? 1 : 0, &raw, &failed);
    if (status != QMF_OK) return report_error(status, "verify " + suite);
    CString report(raw);
    std::cout << report.get();
    return failed > 0 ? 1 : 0;
}

int cmd_tau(const std::string& which, std::int64_t n, const std::string& method) {
    char* raw = nullptr;
    qmf_status status;
    if (method == "crosscheck") {
        status = qmf_tau_crosscheck(which.c_str(), n, &raw);
        if (status == QMF_ERR_CROSSCHECK) {
            std::cerr << "error: methods disagree for " << which << "(" << n << ")\n";
            return 1;
        }
        if (status != QMF_OK) return report_error(status, "tau");
        CString value(raw);
        std::cout << value.get() << ", agreement\n";
        return 0;
    }
    status = qmf_tau_value(which.c_str(), n, method.c_str(), &raw);
    if (status != QMF_OK) return report_error(status, "tau");
    CString value(raw);
    std::cout << value.get() << "\n";
    return 0;
}

int cmd_scan(const std::string& rule, std::int64_t up_to) {
    int32_t violation = 0;
    int64_t at = 0;
    qmf_status status = qmf_scan_rule(rule.c_str(), up_to, &violation, &at);
    if (status == QMF_ERR_UNKNOWN_RULE) {
        std::cerr << "error: unknown rule '" << rule << "'; known rules:\n";
        char* raw = nullptr;
        if (qmf_scan_rules(&raw) == QMF_OK) {
            CString rules(raw);
            std::cerr << rules.get();
        }
        return 2;
    }
    if (status != QMF_OK) return report_error(status, "scan " + rule);
    if (violation) {
        std::cout << "violation at n = " << at << "\n";
        return 1;
    }
    std::cout << "no violation up to " << up_to << "\n";
    return 0;
}

int cmd_dims(std::int64_t p, std::int64_t k, bool have_k) {
    qmf_x0p_info info;
    qmf_status status = qmf_x0p_invariants(p, &info);
    if (status != QMF_OK) return report_error(status, "dims");
    std::cout << "X0(" << p << "): index " << info.index << ", eps2 " << info.eps2 << ", eps3 "
              << info.eps3 << ", genus " << info.genus << ", cusps " << info.cusps << ", widths ("
              << info.width_infinity << ", " << info.width_zero << ")\n";
    if (!have_k) return 0;
    int64_t dim_m = 0, dim_s = 0;
    status = qmf_dim_modular(p, k, &dim_m);
    if (status != QMF_OK) return report_error(status, "dims");
    status = qmf_dim_cusp(p, k, &dim_s);
    if (status != QMF_OK) return report_error(status, "dims");
    std::cout << "dim M_" << k << "(Gamma0(" << p << ")) = " << dim_m << "\n";
    std::cout << "dim S_" << k << "(Gamma0(" << p << ")) = " << dim_s << "\n";
    return 0;
}

int cmd_basis(const std::string& group, std::int64_t k) {
    char* raw = nullptr;
    qmf_status status = qmf_monomial_basis(group.c_str(), k, &raw);
    if (status != QMF_OK) return report_error(status, "basis");
    CString monomials(raw);
    std::cout << monomials.get();
    if (k >= 2) {
        int64_t rank = 0, dim = 0;
        status = qmf_verify_independence(group.c_str(), k, &rank, &dim);
        if (status != QMF_OK) return report_error(status, "basis");
        std::cout << "rank " << rank << ", dim " << dim
                  << (rank == dim ? " (independent)" : " (DEGENERATE)") << "\n";
        if (rank != dim) return 1;
    }
    return 0;
}

int cmd_sturm(const std::string& group, std::int64_t k) {
    int64_t bound = 0;
    qmf_status status = qmf_sturm_bound(group.c_str(), k, &bound);
    if (status != QMF_OK) return report_error(status, "sturm");
    std::cout << bound << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series toolkit for quasi-modular forms on SL2(Z), Gamma0(2) and Gamma0(3)"};
    app.set_version_flag("--version", std::string(qmf_version()));
    app.require_subcommand(1);
    app.fallthrough();

    std::int64_t order = 0;  // 0 = per-command default
    std::string format = "csv";
    bool quiet = false;
    app.add_option("--order", order, "series precision: results are computed modulo O(q^order)");
    app.add_option("--format", format, "output format: json, csv or bfile");
    app.add_flag("--quiet", quiet, "only print failures and summaries");

    auto* expand = app.add_subcommand("expand", "print the q-expansion of a catalog form");
    std::string expand_name;
    expand->add_option("name", expand_name, "catalog form name (see --list)")->required();
    bool expand_list = false;
    expand->add_flag("--list", expand_list, "list catalog names and exit");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "all, systems, sl2, identities, chazy, serre, pushforward or bases")
        ->required();

    auto* tau = app.add_subcommand("tau", "evaluate a Ramanujan-type tau function");
    std::string tau_which = "tau";
    std::int64_t tau_n = 1;
    std::string tau_method = "crosscheck";
    tau->add_option("--which", tau_which, "tau, tau2 or tau3")->required();
    tau->add_option("--n", tau_n, "index n >= 1")->required();
    tau->add_option("--method", tau_method, "eta, recursion, formula or crosscheck");

    auto* scan = app.add_subcommand("scan", "scan a congruence rule for counterexamples");
    std::string rule;
    std::int64_t up_to = 1000;
    scan->add_option("rule", rule, "rule id (run with an unknown id to list them)")->required();
    scan->add_option("--upto", up_to, "largest function argument to test");

    auto* dims = app.add_subcommand("dims", "X0(p) invariants and space dimensions");
    std::int64_t dims_p = 2;
    std::int64_t dims_k = 0;
    dims->add_option("--p", dims_p, "prime level")->required();
    auto* dims_k_opt = dims->add_option("--k", dims_k, "even weight >= 2");

    auto* basis = app.add_subcommand("basis", "monomial basis and independence check");
    std::string basis_group;
    std::int64_t basis_k = 0;
    basis->add_option("--group", basis_group, "sl2z, gamma0_2 or gamma0_3")->required();
    basis->add_option("--k", basis_k, "even weight")->required();

    auto* sturm = app.add_subcommand("sturm", "effectiveness bound floor(d k / 12)");
    std::string sturm_group;
    std::int64_t sturm_k = 0;
    sturm->add_option("--group", sturm_group, "sl2z, gamma0_2 or gamma0_3")->required();
    sturm->add_option("--k", sturm_k, "even weight")->required();

    CLI11_PARSE(app, argc, argv);

    if (expand->parsed()) {
        if (expand_list) {
            char* raw = nullptr;
            if (qmf_catalog_names(&raw) == QMF_OK) {
                CString names(raw);
                std::cout << names.get();
                return 0;
            }
            return 2;
        }
        return cmd_expand(expand_name, order > 0 ? order : 64, format);
    }
    if (verify->parsed()) {
        std::int64_t effective = order;
        if (effective <= 0) effective = (suite == "systems" || suite == "all") ? 200 : 64;
        return cmd_verify(suite, effective, quiet);
    }
    if (tau->parsed()) return cmd_tau(tau_which, tau_n, tau_method);
    if (scan->parsed()) return cmd_scan(rule, up_to);
    if (dims->parsed()) return cmd_dims(dims_p, dims_k, dims_k_opt->count() > 0);
    if (basis->parsed()) return cmd_basis(basis_group, basis_k);
    if (sturm->parsed()) return cmd_sturm(sturm_group, sturm_k);
    return 0;
}
