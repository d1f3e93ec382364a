#include "qmf/verify.hpp"

#include <sstream>

#include "qmf/arith.hpp"
#include "qmf/calculus.hpp"
#include "qmf/error.hpp"
#include "qmf/forms.hpp"
#include "qmf/modspace.hpp"
#include "qmf/mpoly.hpp"
#include "qmf/qseries.hpp"
#include "qmf/vectorfield.hpp"

namespace qmf::verify {

int Report::failures() const {
    int n = 0;
    for (const Check& c : checks)
        if (!c.pass) ++n;
    return n;
}

void Report::add(std::string name, bool pass, std::string detail) {
    checks.push_back(Check{std::move(name), pass, std::move(detail)});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::str(bool quiet) const {
    std::ostringstream out;
    for (const Check& c : checks) {
        if (c.pass && quiet) continue;
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    out << checks.size() - static_cast<std::size_t>(failures()) << "/" << checks.size()
        << " checks passed\n";
    return out.str();
}

namespace {

void add_residual_check(Report& report, const std::string& name,
                        const std::vector<QSeries>& residuals) {
    for (std::size_t j = 0; j < residuals.size(); ++j) {
        if (!residuals[j].is_zero()) {
            std::ostringstream detail;
            detail << "component " << (j + 1) << " has residual at q^" << residuals[j].valuation();
            report.add(name, false, detail.str());
            return;
        }
    }
    report.add(name, true);
}

void add_series_check(Report& report, const std::string& name, const QSeries& lhs,
                      const QSeries& rhs) {
    if (lhs == rhs) {
        report.add(name, true);
        return;
    }
    std::int64_t prec = std::min(lhs.precision(), rhs.precision());
    std::int64_t lo = std::min(lhs.is_zero() ? prec : lhs.valuation(),
                               rhs.is_zero() ? prec : rhs.valuation());
    for (std::int64_t e = lo; e < prec; ++e) {
        if (lhs.coeff(e) != rhs.coeff(e)) {
            std::ostringstream detail;
            detail << "first difference at q^" << e << ": " << rat_to_string(lhs.coeff(e)) << " vs "
                   << rat_to_string(rhs.coeff(e));
            report.add(name, false, detail.str());
            return;
        }
    }
    report.add(name, false, "difference beyond common precision");
}

void add_certified_check(Report& report, const std::string& name, const Form& lhs, const Form& rhs,
                         Group group, int k) {
    auto result = modspace::certify_equal(lhs, rhs, group, k);
    switch (result.outcome) {
        case modspace::CertifyOutcome::Equal: report.add(name, true); return;
        case modspace::CertifyOutcome::Unequal: {
            std::ostringstream detail;
            detail << "coefficients differ at q^" << result.first_difference;
            report.add(name, false, detail.str());
            return;
        }
        case modspace::CertifyOutcome::InsufficientPrecision:
            report.add(name, false, "series shorter than the Sturm bound");
            return;
    }
}

void add_poly_check(Report& report, const std::string& name, const MPoly& residual) {
    if (residual.is_zero())
        report.add(name, true);
    else
        report.add(name, false, "residual polynomial " + residual.str());
}

QSeries series_of(FormName name, std::int64_t precision) {
    return catalog(name, precision).series;
}

}  // namespace

Report systems(std::int64_t order) {
    Report report;
    std::int64_t p = order;
    {
        std::vector<QSeries> sol{series_of(FormName::E2, p), series_of(FormName::E4, p),
                                 series_of(FormName::E6, p)};
        add_residual_check(report, "Ramanujan system at (E2, E4, E6)",
                           ode_residual(systems::ramanujan(), sol));
    }
    {
        std::vector<QSeries> sol{series_of(FormName::P2, p), series_of(FormName::Q2, p),
                                 series_of(FormName::R2, p)};
        add_residual_check(report, "Gamma0(2) system at (P2, Q2, R2)",
                           ode_residual(systems::gamma02(), sol));
    }
    {
        std::vector<QSeries> sol{series_of(FormName::P3, p), series_of(FormName::Q3, p),
                                 series_of(FormName::R3, p), series_of(FormName::S3, p)};
        add_residual_check(report, "Gamma0(3) system at (P3, Q3, R3, S3), t4' = t1 t4 + t2 t4",
                           ode_residual(systems::gamma03(false), sol));
        add_residual_check(report, "Gamma0(3) system at (P3, Q3, R3, S3), t4' = t1 t4 + t3^2",
                           ode_residual(systems::gamma03(true), sol));
    }
    {
        // Original-coordinate n=1 system, logarithmic time 3 q d/dq. The
        // theta/eta solution components live in the plain nome q.
        std::int64_t pp = std::max<std::int64_t>(p, 102);
        QSeries t1 = series_of(FormName::P3orig, pp);
        QSeries t2 = (eisenstein(1, 1, pp).series - eisenstein(1, 3, pp).series * Rat(9)) / Rat(8);
        QSeries t3 = eta_quotient({{{3, 9}, {1, -3}}}, pp);
        std::vector<QSeries> sol{t1, t2, t3};
        add_residual_check(report,
                           "n=1 original system at (theta form, (E2(q) - 9 E2(q^3))/8, eta^9(q^3)/eta^3(q))",
                           ode_residual(systems::original_n1(), sol, Rat(3)));
    }
    return report;
}

Report sl2() {
    Report report;
    struct TripleSpec {
        const char* label;
        PolyVF e, h, f;
        const VarRewrite* ideal;
    };
    std::vector<TripleSpec> triples;
    triples.push_back({"SL2Z", systems::ramanujan(), systems::euler_field(Group::SL2Z),
                       systems::translation_field(Group::SL2Z), nullptr});
    triples.push_back({"Gamma0(2)", systems::gamma02(), systems::euler_field(Group::Gamma0_2),
                       systems::translation_field(Group::Gamma0_2), nullptr});
    triples.push_back({"Gamma0(3)", systems::gamma03(true), systems::euler_field(Group::Gamma0_3),
                       systems::translation_field(Group::Gamma0_3), &gamma03_ideal()});
    for (const auto& t : triples) {
        for (const auto& check : check_sl2_triple(t.e, t.h, t.f, t.ideal)) {
            std::string name = std::string(t.label) + ": " + check.relation;
            if (t.ideal) name += " (mod t3^2 - t2 t4)";
            report.add(name, check.pass,
                       check.pass ? "" : "residual polynomial " + check.residual.str());
        }
    }
    return report;
}

Report identities(std::int64_t order) {
    Report report;
    std::int64_t p = std::max<std::int64_t>(order, 8);

    QSeries e2 = series_of(FormName::E2, p), e4 = series_of(FormName::E4, p),
            e6 = series_of(FormName::E6, p), delta = series_of(FormName::Delta, p);
    QSeries p2 = series_of(FormName::P2, p), q2 = series_of(FormName::Q2, p),
            r2 = series_of(FormName::R2, p), delta2 = series_of(FormName::Delta2, p);
    QSeries p3 = series_of(FormName::P3, p), q3 = series_of(FormName::Q3, p),
            r3 = series_of(FormName::R3, p), s3 = series_of(FormName::S3, p),
            delta3 = series_of(FormName::Delta3, p);

    // ring identities, certified through the Sturm bound
    add_certified_check(report, "Delta = (E4^3 - E6^2)/1728 (Sturm bound)",
                        Form{delta, {12, Group::SL2Z, FormKind::Cusp}},
                        Form{(e4.pow(3) - e6 * e6) / Rat(1728), {12, Group::SL2Z, FormKind::Modular}},
                        Group::SL2Z, 12);
    add_certified_check(report, "Delta2 = (Q2^4 - R2^2)/256 (Sturm bound)",
                        Form{delta2, {8, Group::Gamma0_2, FormKind::Cusp}},
                        Form{(q2.pow(4) - r2 * r2) / Rat(256), {8, Group::Gamma0_2, FormKind::Modular}},
                        Group::Gamma0_2, 8);
    add_certified_check(report, "Delta3 = Q3 R3 - 27 S3 (Sturm bound)",
                        Form{delta3, {6, Group::Gamma0_3, FormKind::Cusp}},
                        Form{q3 * r3 - s3 * Rat(27), {6, Group::Gamma0_3, FormKind::Modular}},
                        Group::Gamma0_3, 6);
    add_certified_check(report, "R3^2 = Q3 S3 (Sturm bound)",
                        Form{r3 * r3, {8, Group::Gamma0_3, FormKind::Modular}},
                        Form{q3 * s3, {8, Group::Gamma0_3, FormKind::Modular}}, Group::Gamma0_3, 8);

    // logarithmic derivatives of the cusp forms
    add_series_check(report, "Delta' = E2 Delta", delta.derivative(), e2 * delta);
    add_series_check(report, "Delta2' = P2 Delta2", delta2.derivative(), p2 * delta2);
    add_series_check(report, "Delta3' = P3 Delta3", delta3.derivative(), p3 * delta3);

    // eta-quotient logarithmic derivative formulas
    {
        EtaQuotientSpec weight0_2{{{2, 24}, {1, -24}}};
        add_series_check(report, "log-derivative of eta^24(q^2)/eta^24(q) = Q2",
                         eta_quotient_log_derivative(weight0_2, p), q2);
        QSeries quotient = eta_quotient(weight0_2, p + 2);
        add_series_check(report, "derive(eta quotient) = Q2 * eta quotient",
                         quotient.derivative().truncated(p), (q2 * quotient).truncated(p));
        add_series_check(report, "log-derivative of eta^24(q^3)/eta^24(q) = 2 Q3",
                         eta_quotient_log_derivative({{{3, 24}, {1, -24}}}, p), q3 * Rat(2));
        add_series_check(report, "log-derivative of eta^24(q) = E2",
                         eta_quotient_log_derivative({{{1, 24}}}, p), e2);
    }

    // Rankin-Cohen quotient identities
    add_series_check(report, "P2' - P2^2/8 = -Q2^2/8", p2.derivative() - p2 * p2 / Rat(8),
                     -(q2 * q2) / Rat(8));
    add_series_check(report, "[Delta2,Delta2]_2 = -9 Q2^2 Delta2^2",
                     rankin_cohen(delta2, 8, delta2, 8, 2), -(q2 * q2 * delta2 * delta2) * Rat(9));
    add_series_check(report, "Q2' - P2 Q2/4 = -R2/4", q2.derivative() - p2 * q2 / Rat(4),
                     -r2 / Rat(4));
    add_series_check(report, "[Delta2,Q2]_1 = -2 R2 Delta2", rankin_cohen(delta2, 8, q2, 2, 1),
                     r2 * delta2 * Rat(-2));
    add_series_check(report, "R2' - P2 R2/2 = -Q2^3/2", r2.derivative() - p2 * r2 / Rat(2),
                     -q2.pow(3) / Rat(2));

    // higher-order differential identities
    add_residual_check(report, "4 E2^(5) - 10 E2 E2^(4) + 100 E2' E2''' - 100 (E2'')^2 = 144 Delta",
                       {higher_order_residual(HigherOrderIdentity::Sl2zOrder5, p)});
    add_residual_check(report, "-6 P2 P2'' + 9 (P2')^2 + 4 P2''' = 16 Delta2",
                       {higher_order_residual(HigherOrderIdentity::Gamma02Order3, p)});
    add_residual_check(report, "P3''' - 2 P3 P3'' + 3 (P3')^2 = 6 Q3 Delta3",
                       {higher_order_residual(HigherOrderIdentity::Gamma03Order3, p)});
    {
        QSeries g = p2 / Rat(8);
        add_series_check(report, "4 [P2/8, P2/8]_2 - 2 (P2/8)''' = -Delta2",
                         rankin_cohen(g, 2, g, 2, 2) * Rat(4) - g.derivative(3) * Rat(2), -delta2);
    }

    // weakly modular quotients
    add_series_check(report, "j Delta = E4^3", series_of(FormName::J, p) * delta,
                     e4.pow(3).truncated(std::max<std::int64_t>(1, p - 2)));
    add_series_check(report, "j2 Delta2 = Q2^4", series_of(FormName::J2, p) * delta2,
                     q2.pow(4).truncated(std::max<std::int64_t>(1, p - 2)));
    add_series_check(report, "j3 Delta3 = Q3^3", series_of(FormName::J3, p) * delta3,
                     q3.pow(3).truncated(std::max<std::int64_t>(1, p - 2)));

    // integrality of the catalog
    {
        bool all_integral = true;
        std::string offender;
        for (const std::string& name : catalog_names()) {
            if (!catalog(name, p).series.is_integral()) {
                all_integral = false;
                offender = name;
                break;
            }
        }
        report.add("catalog forms have integer coefficients", all_integral,
                   all_integral ? "" : offender + " has a non-integral coefficient");
    }
    return report;
}

Report chazy(std::int64_t order) {
    Report report;
    std::int64_t p = std::max<std::int64_t>(order, 8);
    add_residual_check(report, "Chazy equation 2y''' - 2y y'' + 3(y')^2 = 0 at y = E2",
                       {chazy_residual(ChazyVariant::Classical, series_of(FormName::E2, p))});
    add_residual_check(report, "Chazy-type equation at y = P2",
                       {chazy_residual(ChazyVariant::Gamma02, series_of(FormName::P2, p))});
    return report;
}

Report serre(std::int64_t order) {
    Report report;
    std::int64_t p = std::max<std::int64_t>(order, 8);

    add_series_check(report, "serre(E4) = -E6/3",
                     serre_derivative(series_of(FormName::E4, p), 4, Group::SL2Z, p),
                     -series_of(FormName::E6, p) / Rat(3));
    add_series_check(report, "serre_2(Q2) = -R2/4",
                     serre_derivative(series_of(FormName::Q2, p), 2, Group::Gamma0_2, p),
                     -series_of(FormName::R2, p) / Rat(4));
    add_series_check(report, "serre_3(Q3) = (-Q3^2 + 54 R3)/3",
                     serre_derivative(series_of(FormName::Q3, p), 2, Group::Gamma0_3, p),
                     (-series_of(FormName::Q3, p).pow(2) +
                      series_of(FormName::R3, p) * Rat(54)) / Rat(3));

    add_poly_check(report, "poly serre_2(t2) = -t3/4",
                   serre_derivative_poly(Group::Gamma0_2, MPoly::variable(3, 1)) -
                       MPoly::from_terms(3, {{ratio(-1, 4), {0, 0, 1, 0}}}));
    add_poly_check(report, "poly serre_2(t3) = -t2^3/2",
                   serre_derivative_poly(Group::Gamma0_2, MPoly::variable(3, 2)) -
                       MPoly::from_terms(3, {{ratio(-1, 2), {0, 3, 0, 0}}}));
    add_poly_check(report, "poly serre_3(t4) = t2 t4",
                   serre_derivative_poly(Group::Gamma0_3, MPoly::variable(4, 3)) -
                       MPoly::from_terms(4, {{ratio(1), {0, 1, 0, 1}}}));

    // series/polynomial agreement on all modular generator monomials of
    // weight <= 12
    for (Group g : {Group::SL2Z, Group::Gamma0_2, Group::Gamma0_3}) {
        int nvars = g == Group::Gamma0_3 ? 4 : 3;
        auto weights = systems::weight_vector(g);
        auto gens = generator_series(g, p + 2);
        bool all_ok = true;
        std::string offender;
        for (int k = 2; k <= 12 && all_ok; k += 2) {
            for (const auto& exponents : modspace::monomial_basis(g, k)) {
                MPoly monomial = MPoly::constant(nvars, Rat(1));
                QSeries value = QSeries::constant(1);
                for (std::size_t v = 0; v < exponents.size(); ++v) {
                    monomial = monomial * MPoly::variable(nvars, static_cast<int>(v) + 1)
                                              .pow(exponents[v]);
                    value = value * gens[v + 1].pow(exponents[v]);
                }
                QSeries via_poly = serre_derivative_poly(g, monomial).evaluated(gens);
                QSeries via_series = serre_derivative(value.truncated(p), k, g, p);
                if (via_poly.truncated(p) != via_series) {
                    all_ok = false;
                    offender = std::string(group_name(g)) + " weight " + std::to_string(k);
                    break;
                }
            }
        }
        report.add(std::string("poly/series Serre agreement on ") + group_name(g) +
                       " monomials of weight <= 12",
                   all_ok, offender);
    }

    // Leibniz on fixed catalog products
    {
        QSeries e4 = series_of(FormName::E4, p), e6 = series_of(FormName::E6, p);
        add_series_check(report, "Leibniz: serre(E4 E6) = serre(E4) E6 + E4 serre(E6)",
                         serre_derivative(e4 * e6, 10, Group::SL2Z, p),
                         serre_derivative(e4, 4, Group::SL2Z, p) * e6 +
                             e4 * serre_derivative(e6, 6, Group::SL2Z, p));
        QSeries q3 = series_of(FormName::Q3, p), s3 = series_of(FormName::S3, p);
        add_series_check(report, "Leibniz: serre_3(Q3 S3) = serre_3(Q3) S3 + Q3 serre_3(S3)",
                         serre_derivative(q3 * s3, 8, Group::Gamma0_3, p),
                         serre_derivative(q3, 2, Group::Gamma0_3, p) * s3 +
                             q3 * serre_derivative(s3, 6, Group::Gamma0_3, p));
    }
    return report;
}

Report pushforward() {
    Report report;
    {
        // n=2: (20 t2, 40 t1, 800 t3), timescale -5
        std::vector<MPoly> phi{MPoly::from_terms(4, {{ratio(20), {0, 1, 0, 0}}}),
                               MPoly::from_terms(4, {{ratio(40), {1, 0, 0, 0}}}),
                               MPoly::from_terms(4, {{ratio(800), {0, 0, 1, 0}}})};
        auto mismatch =
            pushforward_mismatch(systems::original_n2(), phi, ratio(-5), systems::gamma02());
        bool pass = true;
        for (const MPoly& m : mismatch)
            if (!m.is_zero()) pass = false;
        report.add("n=2 change of variables maps the original system onto the Gamma0(2) system",
                   pass);
    }
    {
        // n=1: (-2 t2 - 9 t1^2, 9 t1^2, 3 t1 t3, t3^2), timescale 1/3
        std::vector<MPoly> phi{
            MPoly::from_terms(3, {{ratio(-2), {0, 1, 0, 0}}, {ratio(-9), {2, 0, 0, 0}}}),
            MPoly::from_terms(3, {{ratio(9), {2, 0, 0, 0}}}),
            MPoly::from_terms(3, {{ratio(3), {1, 0, 1, 0}}}),
            MPoly::from_terms(3, {{ratio(1), {0, 0, 2, 0}}})};
        for (bool variant : {false, true}) {
            auto mismatch = pushforward_mismatch(systems::original_n1(), phi, ratio(1, 3),
                                                 systems::gamma03(variant));
            bool pass = true;
            for (const MPoly& m : mismatch)
                if (!m.is_zero()) pass = false;
            report.add(std::string("n=1 change of variables maps the original system onto the "
                                   "Gamma0(3) system (t4' = ") +
                           (variant ? "t1 t4 + t3^2)" : "t1 t4 + t2 t4)"),
                       pass);
        }
    }
    {
        // The algebraic relation t3^2 = 4 (t1^4 - t4) of the n=2 coordinates:
        // pulled back along the change of variables, t2~^4 - t3~^2 = 2560000 t4,
        // matching Delta2 = (Q2^4 - R2^2)/256 with Delta2 = 10^4 t4.
        VarRewrite relation{2, MPoly::from_terms(4, {{ratio(4), {4, 0, 0, 0}},
                                                     {ratio(-4), {0, 0, 0, 1}}})};
        MPoly t2_image = MPoly::from_terms(4, {{ratio(40), {1, 0, 0, 0}}});
        MPoly t3_image = MPoly::from_terms(4, {{ratio(800), {0, 0, 1, 0}}});
        MPoly composed = t2_image.pow(4) - t3_image.pow(2) -
                         MPoly::from_terms(4, {{ratio(2560000), {0, 0, 0, 1}}});
        add_poly_check(report, "t3^2 = 4(t1^4 - t4) turns t2~^4 - t3~^2 into 2560000 t4",
                       reduce(composed, relation));

        // and the relation is invariant along the flow: V(rel) = -4 t2 rel
        MPoly rel = MPoly::from_terms(4, {{ratio(1), {0, 0, 2, 0}},
                                          {ratio(-4), {4, 0, 0, 0}},
                                          {ratio(4), {0, 0, 0, 1}}});
        MPoly flow = lie_apply(systems::original_n2(), rel);
        MPoly expected = MPoly::from_terms(4, {{ratio(-4), {0, 1, 0, 0}}}) * rel;
        add_poly_check(report, "t3^2 - 4(t1^4 - t4) is invariant along the n=2 flow", flow - expected);
    }
    return report;
}

Report bases() {
    Report report;
    {
        bool ok = true;
        int bad_k = 0;
        for (int k = 2; k <= 100; k += 2) {
            if (modspace::dim_modular(2, k) != k / 4 + 1 ||
                modspace::dim_modular(3, k) != k / 3 + 1) {
                ok = false;
                bad_k = k;
                break;
            }
            if (k >= 4 && (modspace::dim_cusp(2, k) != k / 4 - 1 ||
                           modspace::dim_cusp(3, k) != k / 3 - 1)) {
                ok = false;
                bad_k = k;
                break;
            }
        }
        ok = ok && modspace::dim_cusp(2, 2) == 0 && modspace::dim_cusp(3, 2) == 0;
        report.add("dimension formulas match the closed forms for even k <= 100", ok,
                   ok ? "" : "mismatch at k = " + std::to_string(bad_k));
    }
    {
        auto inv2 = modspace::x0p_invariants(2);
        auto inv3 = modspace::x0p_invariants(3);
        bool ok = inv2.index == 3 && inv2.eps2 == 1 && inv2.eps3 == 0 && inv2.genus == 0 &&
                  inv3.index == 4 && inv3.eps2 == 0 && inv3.eps3 == 1 && inv3.genus == 0 &&
                  modspace::x0p_invariants(13).genus == 0;
        report.add("X0(p) invariants at p = 2, 3, 13", ok);
    }
    {
        bool ok = true;
        int bad_k = 0;
        for (int k = 0; k <= 60 && ok; k += 2) {
            if (static_cast<std::int64_t>(modspace::monomial_basis(Group::Gamma0_2, k).size()) !=
                    (k >= 2 ? modspace::dim_modular(2, k) : 1) ||
                static_cast<std::int64_t>(modspace::monomial_basis(Group::Gamma0_3, k).size()) !=
                    (k >= 2 ? modspace::dim_modular(3, k) : 1)) {
                ok = false;
                bad_k = k;
            }
        }
        report.add("monomial basis sizes equal the dimensions for even k <= 60", ok,
                   ok ? "" : "mismatch at k = " + std::to_string(bad_k));
    }
    {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= 24 && ok; k += 2) {
            for (Group g : {Group::Gamma0_2, Group::Gamma0_3}) {
                auto rep = modspace::verify_independence(g, k);
                if (!rep.pass) {
                    ok = false;
                    detail = std::string(group_name(g)) + " k = " + std::to_string(k) + ": rank " +
                             std::to_string(rep.rank) + " of " + std::to_string(rep.dim);
                    break;
                }
            }
        }
        report.add("q-expansion head vectors of basis monomials have full rank for k <= 24", ok,
                   detail);
    }
    {
        std::int64_t s1 = modspace::sturm_bound(Group::Gamma0_2, 4);
        std::int64_t s2 = modspace::sturm_bound(Group::Gamma0_2, 8);
        std::int64_t s3 = modspace::sturm_bound(Group::SL2Z, 12);
        report.add("Sturm bounds: Gamma0(2) weight 4 -> 1, weight 8 -> 2, SL2Z weight 12 -> 1",
                   s1 == 1 && s2 == 2 && s3 == 1);
    }
    {
        std::int64_t p = 8;
        QSeries q2 = series_of(FormName::Q2, p), r2 = series_of(FormName::R2, p);
        auto result = modspace::certify_equal(Form{q2 * q2, {4, Group::Gamma0_2, FormKind::Modular}},
                                              Form{r2, {4, Group::Gamma0_2, FormKind::Modular}},
                                              Group::Gamma0_2, 4);
        report.add("certify_equal separates Q2^2 from R2 at q^1",
                   result.outcome == modspace::CertifyOutcome::Unequal &&
                       result.first_difference == 1);
    }
    return report;
}

Report all(std::int64_t order) {
    Report report;
    report.merge(systems(order));
    report.merge(sl2());
    report.merge(identities(order));
    report.merge(chazy(order));
    report.merge(serre(order));
    report.merge(pushforward());
    report.merge(bases());
    return report;
}

Report run_suite(const std::string& suite, std::int64_t order) {
    if (suite == "all") return all(order);
    if (suite == "systems") return systems(order);
    if (suite == "sl2") return sl2();
    if (suite == "identities") return identities(order);
    if (suite == "chazy") return chazy(order);
    if (suite == "serre") return serre(order);
    if (suite == "pushforward") return pushforward();
    if (suite == "bases") return bases();
    throw Error(ErrorCode::UnknownName, "unknown verification suite: " + suite);
}

}  // namespace qmf::verify
