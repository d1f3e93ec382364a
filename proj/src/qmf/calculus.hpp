#pragma once

#include <cstdint>

#include "qmf/forms.hpp"
#include "qmf/mpoly.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

/// n-th Rankin-Cohen bracket of declared weights k and l:
///   [f,g]_n = sum_{i+j=n} (-1)^j C(n+k-1, i) C(n+l-1, j) f^(j) g^(i).
/// The result of weight-(k,l) modular inputs has weight k + l + 2n.
QSeries rankin_cohen(const QSeries& f, int k, const QSeries& g, int l, int n);

/// Weight-shifted derivative f' - (k/w) P f with (w, P) = (12, E2),
/// (8, P2), (6, P3) for the three groups; maps weight k to weight k + 2.
QSeries serre_derivative(const QSeries& f, int k, Group group, std::int64_t precision);

/// The same derivation as a first-order operator on generator polynomials.
/// Variables follow generator_series order with t1 the quasi-modular
/// generator; f must not involve t1.
MPoly serre_derivative_poly(Group group, const MPoly& f);

enum class ChazyVariant { Classical, Gamma02 };

/// Left-hand side of the (Chazy or Chazy-type) equation evaluated at y:
///   classical: 2y''' - 2y y'' + 3 (y')^2
///   gamma02:   y'''(16y' - 2y^2) - y''(8y'' + 12y y' - 2y^3)
///              + (y')^2 (20y' - 3y^2)
QSeries chazy_residual(ChazyVariant variant, const QSeries& y);

enum class HigherOrderIdentity { Sl2zOrder5, Gamma02Order3, Gamma03Order3 };

/// LHS - RHS of the named differential identity:
///   sl2z:    4 E2^(5) - 10 E2 E2^(4) + 100 E2' E2''' - 100 (E2'')^2 - 144 Delta
///   gamma02: -6 P2 P2'' + 9 (P2')^2 + 4 P2''' - 16 Delta2
///   gamma03: P3''' - 2 P3 P3'' + 3 (P3')^2 - 6 Q3 Delta3
QSeries higher_order_residual(HigherOrderIdentity which, std::int64_t precision);

}  // namespace qmf
