#include <doctest.h>

#include "qmf/error.hpp"
#include "qmf/forms.hpp"
#include "qmf/mpoly.hpp"
#include "qmf/vectorfield.hpp"
#include "test_util.hpp"

using namespace qmf;

namespace {

MPoly t(int nvars, int var) { return MPoly::variable(nvars, var); }

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    MPoly a = t(3, 0) * t(3, 0) - t(3, 1);
    CHECK(a.total_degree() == 2);
    CHECK(a.coeff({2, 0, 0, 0}) == 1);
    CHECK(a.coeff({0, 1, 0, 0}) == -1);
    CHECK((a - a).is_zero());
    CHECK(a.partial(0) == t(3, 0) * ratio(2));
    CHECK(a.str() == "t1^2 - t2");
}

TEST_CASE("composition substitutes variables") {
    // f(t1, t2) = t1^2 + t2 composed with (t2, t1 t2)
    MPoly f = t(2, 0).pow(2) + t(2, 1);
    std::vector<MPoly> phi{t(2, 1), t(2, 0) * t(2, 1)};
    CHECK(f.composed(phi) == t(2, 1).pow(2) + t(2, 0) * t(2, 1));
}

TEST_CASE("evaluation on series is exact") {
    MPoly f = t(2, 0) * t(2, 1) - t(2, 1);
    QSeries x = QSeries::from_coeffs(0, {ratio(1), ratio(2)}, 8);
    QSeries y = QSeries::from_coeffs(1, {ratio(3)}, 8);
    CHECK(f.evaluated(std::vector<QSeries>{x, y}) == (x * y - y));
}

TEST_CASE("lie bracket examples from the level-2 triple") {
    PolyVF e = systems::gamma02();
    PolyVF h = systems::euler_field(Group::Gamma0_2);
    PolyVF f = systems::translation_field(Group::Gamma0_2);
    CHECK(is_zero(lie_bracket(h, f) - f * ratio(-2)));
    CHECK(is_zero(lie_bracket(e, f) - h));
    CHECK(is_zero(lie_bracket(h, e) - e * ratio(2)));
    // antisymmetry special case
    CHECK(is_zero(lie_bracket(e, e)));
}

TEST_CASE("all three sl2 triples verify") {
    auto classical = check_sl2_triple(systems::ramanujan(), systems::euler_field(Group::SL2Z),
                                      systems::translation_field(Group::SL2Z));
    for (const auto& c : classical) CHECK(c.pass);

    auto level2 = check_sl2_triple(systems::gamma02(), systems::euler_field(Group::Gamma0_2),
                                   systems::translation_field(Group::Gamma0_2));
    for (const auto& c : level2) CHECK(c.pass);

    for (bool variant : {false, true}) {
        auto level3 =
            check_sl2_triple(systems::gamma03(variant), systems::euler_field(Group::Gamma0_3),
                             systems::translation_field(Group::Gamma0_3), &gamma03_ideal());
        for (const auto& c : level3) CHECK(c.pass);
    }
}

TEST_CASE("the Euler field detects weighted homogeneity") {
    // [H, Ra] = 2 Ra is the homogeneity statement
    for (Group g : {Group::SL2Z, Group::Gamma0_2, Group::Gamma0_3}) {
        PolyVF field = g == Group::SL2Z
                           ? systems::ramanujan()
                           : (g == Group::Gamma0_2 ? systems::gamma02() : systems::gamma03(true));
        auto weights = systems::weight_vector(g);
        for (int j = 0; j < field.nvars(); ++j) {
            int w = 0;
            CHECK(field.components[static_cast<std::size_t>(j)].weighted_homogeneous(weights, &w));
            CHECK(w == weights[static_cast<std::size_t>(j)] + 2);
        }
    }
}

TEST_CASE("ideal reduction") {
    const VarRewrite& ideal = gamma03_ideal();
    MPoly gen = t(4, 2).pow(2) - t(4, 1) * t(4, 3);
    CHECK(reduce(gen, ideal).is_zero());
    MPoly p = t(4, 0) * t(4, 3) + t(4, 2).pow(2);
    CHECK(reduce(p, ideal) == t(4, 0) * t(4, 3) + t(4, 1) * t(4, 3));
    CHECK(reduce(t(4, 2).pow(3), ideal) == t(4, 1) * t(4, 2) * t(4, 3));
}

TEST_CASE("ideal reduction is idempotent and multiplicative, and the two t4 dynamics agree") {
    testutil::Gen gen(48);
    const VarRewrite& ideal = gamma03_ideal();
    for (int i = 0; i < 100; ++i) {
        MPoly p = gen.poly(4);
        MPoly q = gen.poly(4);
        MPoly rp = reduce(p, ideal);
        CHECK(reduce(rp, ideal) == rp);
        CHECK(reduce(p * q, ideal) == reduce(reduce(p, ideal) * reduce(q, ideal), ideal));
    }
    PolyVF a = systems::gamma03(false);
    PolyVF b = systems::gamma03(true);
    for (int j = 0; j < 4; ++j)
        CHECK(reduce(a.components[static_cast<std::size_t>(j)] -
                         b.components[static_cast<std::size_t>(j)],
                     ideal)
                  .is_zero());
}

TEST_CASE("bracket antisymmetry and Jacobi identity on random fields") {
    testutil::Gen gen(49);
    for (int i = 0; i < 100; ++i) {
        PolyVF u = gen.field(4, 3);
        PolyVF v = gen.field(4, 3);
        PolyVF w = gen.field(4, 3);
        CHECK(is_zero(lie_bracket(u, v) - (lie_bracket(v, u) * ratio(-1))));
        // Jacobi in Leibniz form: [u,[v,w]] = [[u,v],w] + [v,[u,w]]
        PolyVF sum = lie_bracket(u, lie_bracket(v, w));
        sum = sum - lie_bracket(v, lie_bracket(u, w));
        sum = sum - lie_bracket(lie_bracket(u, v), w);
        CHECK(is_zero(sum));
    }
}

TEST_CASE("pushforward: identity map is the identity") {
    PolyVF v = systems::gamma02();
    std::vector<MPoly> id{t(3, 0), t(3, 1), t(3, 2)};
    auto mismatch = pushforward_mismatch(v, id, ratio(1), v);
    for (const MPoly& m : mismatch) CHECK(m.is_zero());
}

TEST_CASE("pushforward: the n=2 change of variables") {
    std::vector<MPoly> phi{MPoly::from_terms(4, {{ratio(20), {0, 1, 0, 0}}}),
                           MPoly::from_terms(4, {{ratio(40), {1, 0, 0, 0}}}),
                           MPoly::from_terms(4, {{ratio(800), {0, 0, 1, 0}}})};
    auto mismatch = pushforward_mismatch(systems::original_n2(), phi, ratio(-5), systems::gamma02());
    for (const MPoly& m : mismatch) CHECK(m.is_zero());
}

TEST_CASE("pushforward: the n=1 change of variables, both t4 variants") {
    std::vector<MPoly> phi{
        MPoly::from_terms(3, {{ratio(-2), {0, 1, 0, 0}}, {ratio(-9), {2, 0, 0, 0}}}),
        MPoly::from_terms(3, {{ratio(9), {2, 0, 0, 0}}}),
        MPoly::from_terms(3, {{ratio(3), {1, 0, 1, 0}}}),
        MPoly::from_terms(3, {{ratio(1), {0, 0, 2, 0}}})};
    for (bool variant : {false, true}) {
        auto mismatch = pushforward_mismatch(systems::original_n1(), phi, ratio(1, 3),
                                             systems::gamma03(variant));
        for (const MPoly& m : mismatch) CHECK(m.is_zero());
    }
}

TEST_CASE("ode residuals: primary systems on catalog solutions") {
    std::int64_t p = 48;
    {
        std::vector<QSeries> sol = generator_series(Group::SL2Z, p);
        for (const QSeries& r : ode_residual(systems::ramanujan(), sol)) CHECK(r.is_zero());
    }
    {
        std::vector<QSeries> sol = generator_series(Group::Gamma0_2, p);
        for (const QSeries& r : ode_residual(systems::gamma02(), sol)) CHECK(r.is_zero());
    }
    {
        std::vector<QSeries> sol = generator_series(Group::Gamma0_3, p);
        for (bool variant : {false, true})
            for (const QSeries& r : ode_residual(systems::gamma03(variant), sol)) CHECK(r.is_zero());
    }
}

TEST_CASE("ode residuals: n=1 original system on the theta/eta solution") {
    std::int64_t p = 102;
    QSeries t1 = catalog(FormName::P3orig, p).series;
    QSeries t2 = (eisenstein(1, 1, p).series - eisenstein(1, 3, p).series * Rat(9)) / Rat(8);
    QSeries t3 = eta_quotient({{{3, 9}, {1, -3}}}, p);
    auto residuals = ode_residual(systems::original_n1(), std::vector<QSeries>{t1, t2, t3}, Rat(3));
    for (const QSeries& r : residuals) {
        CHECK(r.is_zero());
        CHECK(r.precision() >= 102);
    }
}

TEST_CASE("a perturbed solution leaves a visible residual") {
    std::int64_t p = 24;
    std::vector<QSeries> sol = generator_series(Group::SL2Z, p);
    sol[1] = sol[1] + QSeries::monomial(ratio(1), 3);
    bool any_nonzero = false;
    for (const QSeries& r : ode_residual(systems::ramanujan(), sol))
        if (!r.is_zero()) any_nonzero = true;
    CHECK(any_nonzero);
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS((void)lie_bracket(systems::ramanujan(), systems::gamma03(true)), Error);
    std::vector<QSeries> too_short{QSeries::constant(1)};
    CHECK_THROWS_AS((void)ode_residual(systems::ramanujan(), too_short), Error);
}
