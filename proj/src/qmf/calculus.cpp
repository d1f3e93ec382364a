#include "qmf/calculus.hpp"

#include <vector>

#include "qmf/error.hpp"

namespace qmf {

QSeries rankin_cohen(const QSeries& f, int k, const QSeries& g, int l, int n) {
    if (n < 0) throw Error(ErrorCode::DomainError, "bracket order must be non-negative");
    std::vector<QSeries> fd{f};
    std::vector<QSeries> gd{g};
    for (int i = 1; i <= n; ++i) {
        fd.push_back(fd.back().derivative());
        gd.push_back(gd.back().derivative());
    }
    QSeries result = QSeries::zero(QSeries::kExactPrecision);
    for (int j = 0; j <= n; ++j) {
        int i = n - j;
        Rat c = Rat(binomial(n + k - 1, i)) * Rat(binomial(n + l - 1, j));
        if (j % 2 != 0) c = -c;
        result = result + fd[static_cast<std::size_t>(j)] * gd[static_cast<std::size_t>(i)] * c;
    }
    return result;
}

namespace {

QSeries weight_two_generator(Group group, std::int64_t precision) {
    switch (group) {
        case Group::SL2Z: return catalog(FormName::E2, precision).series;
        case Group::Gamma0_2: return catalog(FormName::P2, precision).series;
        case Group::Gamma0_3: return catalog(FormName::P3, precision).series;
    }
    throw Error(ErrorCode::DomainError, "unknown group");
}

long serre_weight_denominator(Group group) {
    switch (group) {
        case Group::SL2Z: return 12;
        case Group::Gamma0_2: return 8;
        case Group::Gamma0_3: return 6;
    }
    throw Error(ErrorCode::DomainError, "unknown group");
}

}  // namespace

QSeries serre_derivative(const QSeries& f, int k, Group group, std::int64_t precision) {
    QSeries p = weight_two_generator(group, precision);
    return f.derivative() - f * p * ratio(k, serre_weight_denominator(group));
}

MPoly serre_derivative_poly(Group group, const MPoly& f) {
    int nvars = group == Group::Gamma0_3 ? 4 : 3;
    if (f.nvars() != nvars)
        throw Error(ErrorCode::DimensionMismatch, "polynomial has the wrong number of variables");
    if (f.degree_in(0) != 0)
        throw Error(ErrorCode::DomainError,
                    "Serre derivation acts on polynomials in the modular generators only");
    auto term = [&](std::initializer_list<MPoly::Term> ts) { return MPoly::from_terms(nvars, ts); };
    switch (group) {
        case Group::SL2Z:
            // -1/3 E6 d/dE4 - 1/2 E4^2 d/dE6 on (t2, t3) = (E4, E6)
            return term({{ratio(-1, 3), {0, 0, 1, 0}}}) * f.partial(1) +
                   term({{ratio(-1, 2), {0, 2, 0, 0}}}) * f.partial(2);
        case Group::Gamma0_2:
            return term({{ratio(-1, 4), {0, 0, 1, 0}}}) * f.partial(1) +
                   term({{ratio(-1, 2), {0, 3, 0, 0}}}) * f.partial(2);
        case Group::Gamma0_3:
            return (term({{ratio(-1, 3), {0, 2, 0, 0}}, {ratio(18), {0, 0, 1, 0}}})) * f.partial(1) +
                   (term({{ratio(1, 3), {0, 1, 1, 0}}, {ratio(9), {0, 0, 0, 1}}})) * f.partial(2) +
                   (term({{ratio(1), {0, 1, 0, 1}}})) * f.partial(3);
    }
    throw Error(ErrorCode::DomainError, "unknown group");
}

QSeries chazy_residual(ChazyVariant variant, const QSeries& y) {
    QSeries y1 = y.derivative();
    QSeries y2 = y1.derivative();
    QSeries y3 = y2.derivative();
    switch (variant) {
        case ChazyVariant::Classical:
            return y3 * Rat(2) - y * y2 * Rat(2) + y1 * y1 * Rat(3);
        case ChazyVariant::Gamma02: {
            QSeries a = y3 * (y1 * Rat(16) - y * y * Rat(2));
            QSeries b = y2 * (y2 * Rat(8) + y * y1 * Rat(12) - y.pow(3) * Rat(2));
            QSeries c = y1 * y1 * (y1 * Rat(20) - y * y * Rat(3));
            return a - b + c;
        }
    }
    throw Error(ErrorCode::DomainError, "unknown Chazy variant");
}

QSeries higher_order_residual(HigherOrderIdentity which, std::int64_t precision) {
    switch (which) {
        case HigherOrderIdentity::Sl2zOrder5: {
            QSeries e2 = catalog(FormName::E2, precision).series;
            QSeries delta = catalog(FormName::Delta, precision).series;
            QSeries lhs = e2.derivative(5) * Rat(4) - e2 * e2.derivative(4) * Rat(10) +
                          e2.derivative(1) * e2.derivative(3) * Rat(100) -
                          e2.derivative(2) * e2.derivative(2) * Rat(100);
            return lhs - delta * Rat(144);
        }
        case HigherOrderIdentity::Gamma02Order3: {
            QSeries p2 = catalog(FormName::P2, precision).series;
            QSeries delta2 = catalog(FormName::Delta2, precision).series;
            QSeries lhs = p2 * p2.derivative(2) * Rat(-6) +
                          p2.derivative(1) * p2.derivative(1) * Rat(9) + p2.derivative(3) * Rat(4);
            return lhs - delta2 * Rat(16);
        }
        case HigherOrderIdentity::Gamma03Order3: {
            QSeries p3 = catalog(FormName::P3, precision).series;
            QSeries q3 = catalog(FormName::Q3, precision).series;
            QSeries delta3 = catalog(FormName::Delta3, precision).series;
            QSeries lhs = p3.derivative(3) - p3 * p3.derivative(2) * Rat(2) +
                          p3.derivative(1) * p3.derivative(1) * Rat(3);
            return lhs - q3 * delta3 * Rat(6);
        }
    }
    throw Error(ErrorCode::DomainError, "unknown identity");
}

}  // namespace qmf
