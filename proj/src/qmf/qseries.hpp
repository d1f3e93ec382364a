#pragma once

#include <cstdint>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// A value represents  sum_i coeffs[i] * q^(valuation+i)  +  O(q^precision).
/// Invariants: valuation + coeffs.size() <= precision; the first and last
/// stored coefficients are nonzero (the zero-to-precision series has empty
/// coeffs and valuation == precision). Values are immutable after
/// construction; all operations return new series.
class QSeries {
public:
    static constexpr std::int64_t kDefaultPrecision = 64;
    // Sentinel for exactly known series (constants, monomials). Kept well
    // below INT64_MAX so precision arithmetic cannot overflow.
    static constexpr std::int64_t kExactPrecision = INT64_C(1) << 56;

    QSeries() : valuation_(kDefaultPrecision), precision_(kDefaultPrecision) {}

    static QSeries zero(std::int64_t precision = kDefaultPrecision);
    static QSeries constant(Rat c);
    static QSeries constant(long c) { return constant(Rat(c)); }
    static QSeries monomial(Rat c, std::int64_t exponent);
    static QSeries from_coeffs(std::int64_t valuation, std::vector<Rat> coeffs,
                               std::int64_t precision);

    std::int64_t valuation() const { return valuation_; }
    std::int64_t precision() const { return precision_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;

    /// Coefficient of q^e; requires e < precision (PrecisionError otherwise).
    Rat coeff(std::int64_t e) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Restriction to a lower precision.
    QSeries truncated(std::int64_t precision) const;
    /// Multiplication by q^e.
    QSeries shifted(std::int64_t e) const;
    /// q d/dq, Laurent exponents included; precision preserved.
    QSeries derivative() const;
    QSeries derivative(int times) const;
    /// Multiplicative inverse; requires a nonzero leading coefficient.
    QSeries inverse() const;
    /// Integer power via repeated squaring; negative e goes through inverse().
    QSeries pow(std::int64_t e) const;
    /// q -> sign * q^m (m >= 1, sign in {+1,-1}); precision scales by m.
    QSeries substituted(std::int64_t m, int sign = +1) const;

    QSeries operator-() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const Rat& c);
    friend QSeries operator*(const Rat& c, const QSeries& a) { return a * c; }
    friend QSeries operator/(const QSeries& a, const Rat& c);
    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

    friend QSeries operator+(const QSeries& a, const Rat& c) { return a + constant(c); }
    friend QSeries operator-(const QSeries& a, const Rat& c) { return a - constant(c); }

private:
    std::int64_t valuation_;
    std::int64_t precision_;
    std::vector<Rat> coeffs_;

    void normalize();
};

/// Exact agreement of all coefficients up to min(a.precision, b.precision).
bool agree_to_common_precision(const QSeries& a, const QSeries& b);
inline bool operator==(const QSeries& a, const QSeries& b) {
    return agree_to_common_precision(a, b);
}
inline bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

}  // namespace qmf
