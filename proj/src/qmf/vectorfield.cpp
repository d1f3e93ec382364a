#include "qmf/vectorfield.hpp"

#include "qmf/error.hpp"

namespace qmf {

MPoly lie_apply(const PolyVF& v, const MPoly& f) {
    if (v.nvars() != f.nvars())
        throw Error(ErrorCode::DimensionMismatch, "vector field and polynomial variable counts differ");
    MPoly result(f.nvars());
    for (int j = 0; j < v.nvars(); ++j)
        result += v.components[static_cast<std::size_t>(j)] * f.partial(j);
    return result;
}

PolyVF lie_bracket(const PolyVF& v, const PolyVF& w) {
    if (v.nvars() != w.nvars())
        throw Error(ErrorCode::DimensionMismatch, "vector field variable counts differ");
    PolyVF result;
    for (int j = 0; j < v.nvars(); ++j)
        result.components.push_back(lie_apply(v, w.components[static_cast<std::size_t>(j)]) -
                                    lie_apply(w, v.components[static_cast<std::size_t>(j)]));
    return result;
}

PolyVF operator-(const PolyVF& a, const PolyVF& b) {
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::DimensionMismatch, "vector field variable counts differ");
    PolyVF result;
    for (int j = 0; j < a.nvars(); ++j)
        result.components.push_back(a.components[static_cast<std::size_t>(j)] -
                                    b.components[static_cast<std::size_t>(j)]);
    return result;
}

PolyVF operator*(const PolyVF& a, const Rat& c) {
    PolyVF result;
    for (const MPoly& p : a.components) result.components.push_back(p * c);
    return result;
}

bool is_zero(const PolyVF& a) {
    for (const MPoly& p : a.components)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

MPoly reduced_or_same(const MPoly& p, const VarRewrite* ideal) {
    return ideal ? reduce(p, *ideal) : p;
}

Sl2Check make_check(std::string relation, const PolyVF& delta, const VarRewrite* ideal) {
    MPoly residual(delta.nvars());
    bool pass = true;
    for (const MPoly& p : delta.components) {
        MPoly r = reduced_or_same(p, ideal);
        if (!r.is_zero() && pass) {
            pass = false;
            residual = r;
        }
    }
    return Sl2Check{std::move(relation), pass, residual};
}

}  // namespace

std::vector<Sl2Check> check_sl2_triple(const PolyVF& e, const PolyVF& h, const PolyVF& f,
                                       const VarRewrite* ideal) {
    std::vector<Sl2Check> checks;
    checks.push_back(make_check("[E,F] = H", lie_bracket(e, f) - h, ideal));
    checks.push_back(make_check("[H,E] = 2E", lie_bracket(h, e) - e * Rat(2), ideal));
    checks.push_back(make_check("[H,F] = -2F", lie_bracket(h, f) - f * Rat(-2), ideal));
    return checks;
}

PolyVF pushforward(const PolyVF& v, std::span<const MPoly> phi, const Rat& timescale) {
    PolyVF result;
    for (const MPoly& component : phi)
        result.components.push_back(lie_apply(v, component) * timescale);
    return result;
}

std::vector<MPoly> pushforward_mismatch(const PolyVF& source, std::span<const MPoly> phi,
                                        const Rat& timescale, const PolyVF& target,
                                        const VarRewrite* source_relation) {
    if (static_cast<int>(phi.size()) != target.nvars())
        throw Error(ErrorCode::SubstitutionError,
                    "change of variables must provide one polynomial per target variable");
    PolyVF pushed = pushforward(source, phi, timescale);
    std::vector<MPoly> mismatch;
    std::vector<MPoly> images(phi.begin(), phi.end());
    for (int j = 0; j < target.nvars(); ++j) {
        MPoly composed = target.components[static_cast<std::size_t>(j)].composed(images);
        MPoly delta = composed - pushed.components[static_cast<std::size_t>(j)];
        mismatch.push_back(source_relation ? reduce(delta, *source_relation) : delta);
    }
    return mismatch;
}

std::vector<QSeries> ode_residual(const PolyVF& v, std::span<const QSeries> solution,
                                  const Rat& timescale) {
    if (static_cast<int>(solution.size()) != v.nvars())
        throw Error(ErrorCode::DimensionMismatch, "solution must provide one series per variable");
    std::vector<QSeries> residuals;
    for (int j = 0; j < v.nvars(); ++j) {
        QSeries lhs = solution[static_cast<std::size_t>(j)].derivative() * timescale;
        QSeries rhs = v.components[static_cast<std::size_t>(j)].evaluated(solution);
        residuals.push_back(lhs - rhs);
    }
    return residuals;
}

namespace systems {

namespace {

MPoly poly3(std::initializer_list<MPoly::Term> terms) { return MPoly::from_terms(3, terms); }
MPoly poly4(std::initializer_list<MPoly::Term> terms) { return MPoly::from_terms(4, terms); }

}  // namespace

PolyVF ramanujan() {
    PolyVF v;
    v.components.push_back(poly3({{ratio(1, 12), {2, 0, 0, 0}}, {ratio(-1, 12), {0, 1, 0, 0}}}));
    v.components.push_back(poly3({{ratio(1, 3), {1, 1, 0, 0}}, {ratio(-1, 3), {0, 0, 1, 0}}}));
    v.components.push_back(poly3({{ratio(1, 2), {1, 0, 1, 0}}, {ratio(-1, 2), {0, 2, 0, 0}}}));
    return v;
}

PolyVF gamma02() {
    PolyVF v;
    v.components.push_back(poly3({{ratio(1, 8), {2, 0, 0, 0}}, {ratio(-1, 8), {0, 2, 0, 0}}}));
    v.components.push_back(poly3({{ratio(1, 4), {1, 1, 0, 0}}, {ratio(-1, 4), {0, 0, 1, 0}}}));
    v.components.push_back(poly3({{ratio(1, 2), {1, 0, 1, 0}}, {ratio(-1, 2), {0, 3, 0, 0}}}));
    return v;
}

PolyVF gamma03(bool t3_squared_variant) {
    PolyVF v;
    v.components.push_back(poly4({{ratio(1, 6), {2, 0, 0, 0}}, {ratio(-1, 6), {0, 2, 0, 0}}}));
    v.components.push_back(poly4(
        {{ratio(1, 3), {1, 1, 0, 0}}, {ratio(-1, 3), {0, 2, 0, 0}}, {ratio(18), {0, 0, 1, 0}}}));
    v.components.push_back(poly4(
        {{ratio(2, 3), {1, 0, 1, 0}}, {ratio(1, 3), {0, 1, 1, 0}}, {ratio(9), {0, 0, 0, 1}}}));
    if (t3_squared_variant)
        v.components.push_back(poly4({{ratio(1), {1, 0, 0, 1}}, {ratio(1), {0, 0, 2, 0}}}));
    else
        v.components.push_back(poly4({{ratio(1), {1, 0, 0, 1}}, {ratio(1), {0, 1, 0, 1}}}));
    return v;
}

std::vector<int> weight_vector(Group g) {
    switch (g) {
        case Group::SL2Z: return {2, 4, 6};
        case Group::Gamma0_2: return {2, 2, 4};
        case Group::Gamma0_3: return {2, 2, 4, 6};
    }
    throw Error(ErrorCode::DomainError, "unknown group");
}

PolyVF euler_field(Group g) {
    std::vector<int> weights = weight_vector(g);
    int nvars = static_cast<int>(weights.size());
    PolyVF v;
    for (int j = 0; j < nvars; ++j)
        v.components.push_back(MPoly::variable(nvars, j) * ratio(weights[static_cast<std::size_t>(j)]));
    return v;
}

PolyVF translation_field(Group g) {
    long w = 0;
    switch (g) {
        case Group::SL2Z: w = 12; break;
        case Group::Gamma0_2: w = 8; break;
        case Group::Gamma0_3: w = 6; break;
    }
    int nvars = g == Group::Gamma0_3 ? 4 : 3;
    PolyVF v;
    v.components.push_back(MPoly::constant(nvars, ratio(-w)));
    for (int j = 1; j < nvars; ++j) v.components.push_back(MPoly::zero(nvars));
    return v;
}

PolyVF original_n1() {
    PolyVF v;
    v.components.push_back(poly3(
        {{ratio(-1), {1, 1, 0, 0}}, {ratio(-9), {3, 0, 0, 0}}, {ratio(9), {0, 0, 1, 0}}}));
    v.components.push_back(poly3(
        {{ratio(81), {4, 0, 0, 0}}, {ratio(-81), {1, 0, 1, 0}}, {ratio(-1), {0, 2, 0, 0}}}));
    v.components.push_back(poly3({{ratio(-3), {0, 1, 1, 0}}}));
    return v;
}

PolyVF original_n2() {
    PolyVF v;
    v.components.push_back(poly4({{ratio(1), {0, 0, 1, 0}}, {ratio(-1), {1, 1, 0, 0}}}));
    v.components.push_back(poly4({{ratio(2), {2, 0, 0, 0}}, {ratio(-1, 2), {0, 2, 0, 0}}}));
    v.components.push_back(poly4({{ratio(-2), {0, 1, 1, 0}}, {ratio(8), {3, 0, 0, 0}}}));
    v.components.push_back(poly4({{ratio(-4), {0, 1, 0, 1}}}));
    return v;
}

}  // namespace systems

}  // namespace qmf
