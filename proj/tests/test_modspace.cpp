#include <doctest.h>

#include "qmf/error.hpp"
#include "qmf/forms.hpp"
#include "qmf/modspace.hpp"

using namespace qmf;
using namespace qmf::modspace;

TEST_CASE("X0(p) invariants") {
    auto inv2 = x0p_invariants(2);
    CHECK(inv2.index == 3);
    CHECK(inv2.eps2 == 1);
    CHECK(inv2.eps3 == 0);
    CHECK(inv2.genus == 0);
    CHECK(inv2.cusps == 2);
    CHECK(inv2.widths[0] == 1);
    CHECK(inv2.widths[1] == 2);

    auto inv3 = x0p_invariants(3);
    CHECK(inv3.index == 4);
    CHECK(inv3.eps2 == 0);
    CHECK(inv3.eps3 == 1);
    CHECK(inv3.genus == 0);

    CHECK(x0p_invariants(13).genus == 0);
    CHECK(x0p_invariants(11).genus == 1);
    CHECK(x0p_invariants(5).eps2 == 2);
    CHECK(x0p_invariants(7).eps3 == 2);

    CHECK_THROWS_AS((void)x0p_invariants(4), Error);
    try {
        (void)x0p_invariants(6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
}

TEST_CASE("dimension formulas") {
    CHECK(dim_modular(2, 4) == 2);
    CHECK(dim_modular(3, 6) == 3);
    CHECK(dim_modular(2, 2) == 1);
    CHECK(dim_cusp(2, 8) == 1);
    CHECK(dim_cusp(3, 6) == 1);
    CHECK(dim_cusp(2, 2) == 0);
    for (int k = 2; k <= 100; k += 2) {
        CHECK(dim_modular(2, k) == k / 4 + 1);
        CHECK(dim_modular(3, k) == k / 3 + 1);
        if (k >= 4) {
            CHECK(dim_cusp(2, k) == k / 4 - 1);
            CHECK(dim_cusp(3, k) == k / 3 - 1);
        }
    }
    CHECK_THROWS_AS((void)dim_modular(2, 3), Error);
    CHECK_THROWS_AS((void)dim_modular(2, -2), Error);
}

TEST_CASE("Sturm bounds") {
    CHECK(sturm_bound(Group::Gamma0_2, 4) == 1);
    CHECK(sturm_bound(Group::Gamma0_2, 8) == 2);
    CHECK(sturm_bound(Group::SL2Z, 12) == 1);
    CHECK(sturm_bound(Group::Gamma0_3, 6) == 2);
    CHECK(sturm_bound(Group::SL2Z, 0) == 0);
}

TEST_CASE("certification of the discriminant identities") {
    std::int64_t p = 12;
    QSeries e4 = catalog(FormName::E4, p).series;
    QSeries e6 = catalog(FormName::E6, p).series;
    Form delta{catalog(FormName::Delta, p).series, {12, Group::SL2Z, FormKind::Cusp}};
    Form combo{(e4.pow(3) - e6 * e6) / Rat(1728), {12, Group::SL2Z, FormKind::Modular}};
    auto res = certify_equal(delta, combo, Group::SL2Z, 12);
    CHECK(res.outcome == CertifyOutcome::Equal);

    QSeries q2 = catalog(FormName::Q2, p).series;
    QSeries r2 = catalog(FormName::R2, p).series;
    Form delta2{catalog(FormName::Delta2, p).series, {8, Group::Gamma0_2, FormKind::Cusp}};
    Form combo2{(q2.pow(4) - r2 * r2) / Rat(256), {8, Group::Gamma0_2, FormKind::Modular}};
    CHECK(certify_equal(delta2, combo2, Group::Gamma0_2, 8).outcome == CertifyOutcome::Equal);

    QSeries q3 = catalog(FormName::Q3, p).series;
    QSeries r3 = catalog(FormName::R3, p).series;
    QSeries s3 = catalog(FormName::S3, p).series;
    Form delta3{catalog(FormName::Delta3, p).series, {6, Group::Gamma0_3, FormKind::Cusp}};
    Form combo3{q3 * r3 - s3 * Rat(27), {6, Group::Gamma0_3, FormKind::Modular}};
    CHECK(certify_equal(delta3, combo3, Group::Gamma0_3, 6).outcome == CertifyOutcome::Equal);
}

TEST_CASE("certification separates unequal forms and polices inputs") {
    std::int64_t p = 12;
    QSeries q2 = catalog(FormName::Q2, p).series;
    QSeries r2 = catalog(FormName::R2, p).series;
    Form a{q2 * q2, {4, Group::Gamma0_2, FormKind::Modular}};
    Form b{r2, {4, Group::Gamma0_2, FormKind::Modular}};
    auto res = certify_equal(a, b, Group::Gamma0_2, 4);
    CHECK(res.outcome == CertifyOutcome::Unequal);
    CHECK(res.first_difference == 1);

    // symmetry and reflexivity of the Equal relation
    CHECK(certify_equal(b, a, Group::Gamma0_2, 4).outcome == CertifyOutcome::Unequal);
    CHECK(certify_equal(a, a, Group::Gamma0_2, 4).outcome == CertifyOutcome::Equal);

    // precision shorter than the bound
    Form short_form{q2.truncated(1) * q2.truncated(1), {4, Group::Gamma0_2, FormKind::Modular}};
    CHECK(certify_equal(short_form, b, Group::Gamma0_2, 4).outcome ==
          CertifyOutcome::InsufficientPrecision);

    // descriptor mismatches are rejected
    Form wrong_weight{q2, {2, Group::Gamma0_2, FormKind::Modular}};
    CHECK_THROWS_AS((void)certify_equal(wrong_weight, b, Group::Gamma0_2, 4), Error);
    Form quasi{catalog(FormName::P2, p).series, {2, Group::Gamma0_2, FormKind::QuasiModular}};
    Form q2f{q2, {2, Group::Gamma0_2, FormKind::Modular}};
    CHECK_THROWS_AS((void)certify_equal(quasi, q2f, Group::Gamma0_2, 2), Error);
}

TEST_CASE("monomial bases") {
    auto b8 = monomial_basis(Group::Gamma0_2, 8);
    REQUIRE(b8.size() == 3);
    CHECK(b8[0] == std::vector<int>{4, 0});
    CHECK(b8[1] == std::vector<int>{2, 1});
    CHECK(b8[2] == std::vector<int>{0, 2});

    auto b6 = monomial_basis(Group::Gamma0_3, 6);
    REQUIRE(b6.size() == 3);
    CHECK(b6[0] == std::vector<int>{3, 0, 0});
    CHECK(b6[1] == std::vector<int>{1, 1, 0});
    CHECK(b6[2] == std::vector<int>{0, 0, 1});

    CHECK(monomial_basis(Group::SL2Z, 0) == std::vector<std::vector<int>>{{0, 0}});
    CHECK(monomial_basis(Group::Gamma0_2, 0).size() == 1);

    for (int k = 0; k <= 60; k += 2) {
        CHECK(static_cast<std::int64_t>(monomial_basis(Group::Gamma0_2, k).size()) ==
              (k >= 2 ? dim_modular(2, k) : 1));
        CHECK(static_cast<std::int64_t>(monomial_basis(Group::Gamma0_3, k).size()) ==
              (k >= 2 ? dim_modular(3, k) : 1));
    }
}

TEST_CASE("independence of basis monomials via exact rank") {
    for (int k = 2; k <= 24; k += 2) {
        auto rep2 = verify_independence(Group::Gamma0_2, k);
        CHECK(rep2.pass);
        CHECK(rep2.rank == dim_modular(2, k));
        auto rep3 = verify_independence(Group::Gamma0_3, k);
        CHECK(rep3.pass);
        CHECK(rep3.rank == dim_modular(3, k));
    }
    auto rep = verify_independence(Group::Gamma0_2, 2);
    CHECK(rep.rank == 1);
}

TEST_CASE("rank of exact rational matrices") {
    CHECK(rank_rational({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
    CHECK(rank_rational({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
    CHECK(rank_rational({{ratio(1, 2), ratio(1, 3)}, {ratio(1, 4), ratio(1, 6)}}) == 1);
    CHECK(rank_rational({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == 0);
    CHECK(rank_rational({{Rat(1), Rat(48)}, {Rat(1), Rat(-80)}}) == 2);
}
