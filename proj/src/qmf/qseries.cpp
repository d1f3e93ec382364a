#include "qmf/qseries.hpp"

#include <algorithm>

#include "qmf/error.hpp"

namespace qmf {

namespace {

std::int64_t clamp_precision(std::int64_t p) {
    return std::min(p, QSeries::kExactPrecision);
}

}  // namespace

void QSeries::normalize() {
    if (precision_ > kExactPrecision) precision_ = kExactPrecision;
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<std::int64_t>(lead);
    }
    if (valuation_ + static_cast<std::int64_t>(coeffs_.size()) > precision_) {
        std::int64_t keep = precision_ - valuation_;
        coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) valuation_ = precision_;
}

QSeries QSeries::zero(std::int64_t precision) {
    QSeries s;
    s.precision_ = clamp_precision(precision);
    s.valuation_ = s.precision_;
    return s;
}

QSeries QSeries::constant(Rat c) {
    return monomial(std::move(c), 0);
}

QSeries QSeries::monomial(Rat c, std::int64_t exponent) {
    QSeries s;
    s.valuation_ = exponent;
    s.precision_ = kExactPrecision;
    if (c != 0) s.coeffs_.push_back(std::move(c));
    s.normalize();
    return s;
}

QSeries QSeries::from_coeffs(std::int64_t valuation, std::vector<Rat> coeffs,
                             std::int64_t precision) {
    QSeries s;
    s.valuation_ = valuation;
    s.precision_ = clamp_precision(precision);
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

bool QSeries::is_integral() const {
    for (const Rat& c : coeffs_)
        if (!rat_is_integer(c)) return false;
    return true;
}

Rat QSeries::coeff(std::int64_t e) const {
    if (e >= precision_)
        throw Error(ErrorCode::PrecisionError, "coefficient index beyond series precision");
    std::int64_t i = e - valuation_;
    if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

QSeries QSeries::truncated(std::int64_t precision) const {
    if (precision > precision_)
        throw Error(ErrorCode::PrecisionError, "cannot raise precision by truncation");
    QSeries s(*this);
    s.precision_ = precision;
    s.normalize();
    return s;
}

QSeries QSeries::shifted(std::int64_t e) const {
    QSeries s(*this);
    s.valuation_ += e;
    s.precision_ = clamp_precision(s.precision_ + e);
    s.normalize();
    return s;
}

QSeries QSeries::derivative() const {
    QSeries s(*this);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
        s.coeffs_[i] *= Rat(static_cast<long>(s.valuation_ + static_cast<std::int64_t>(i)));
    s.normalize();
    return s;
}

QSeries QSeries::derivative(int times) const {
    QSeries s(*this);
    for (int i = 0; i < times; ++i) s = s.derivative();
    return s;
}

QSeries QSeries::inverse() const {
    if (coeffs_.empty())
        throw Error(ErrorCode::ZeroLeadingCoefficient, "cannot invert a series that is zero to precision");
    if (coeffs_.size() == 1 && precision_ == kExactPrecision)
        return monomial(Rat(1) / coeffs_[0], -valuation_);
    // Write *this = q^v * u with u a unit known modulo O(q^n); then the
    // inverse is q^-v * u^-1, known modulo O(q^(n - 2v)). Inverting an exact
    // polynomial yields a series truncated at the default precision.
    std::int64_t out_prec =
        precision_ == kExactPrecision ? kDefaultPrecision : precision_ - 2 * valuation_;
    std::int64_t len =
        precision_ == kExactPrecision ? kDefaultPrecision : precision_ - valuation_;
    std::vector<Rat> inv(static_cast<std::size_t>(len));
    Rat lead_inv = Rat(1) / coeffs_[0];
    inv[0] = lead_inv;
    for (std::int64_t i = 1; i < len; ++i) {
        Rat acc(0);
        std::int64_t kmax = std::min<std::int64_t>(i, static_cast<std::int64_t>(coeffs_.size()) - 1);
        for (std::int64_t k = 1; k <= kmax; ++k)
            acc += coeffs_[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(i - k)];
        inv[static_cast<std::size_t>(i)] = -lead_inv * acc;
    }
    return from_coeffs(-valuation_, std::move(inv), out_prec);
}

QSeries QSeries::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries result = constant(Rat(1));
    QSeries base(*this);
    std::int64_t k = e;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

QSeries QSeries::substituted(std::int64_t m, int sign) const {
    if (m < 1) throw Error(ErrorCode::SubstitutionError, "substitution scale must be positive");
    if (sign != 1 && sign != -1)
        throw Error(ErrorCode::SubstitutionError, "substitution sign must be +1 or -1");
    QSeries s;
    s.precision_ = clamp_precision(precision_ == kExactPrecision ? kExactPrecision : m * precision_);
    s.valuation_ = m * valuation_;
    if (!coeffs_.empty()) {
        s.coeffs_.assign(static_cast<std::size_t>(m * (static_cast<std::int64_t>(coeffs_.size()) - 1) + 1),
                         Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
            Rat c = coeffs_[i];
            if (sign == -1 && ((e % 2) != 0)) c = -c;
            s.coeffs_[static_cast<std::size_t>(m * static_cast<std::int64_t>(i))] = std::move(c);
        }
    }
    s.normalize();
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s(*this);
    for (Rat& c : s.coeffs_) c = -c;
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    std::int64_t prec = std::min(a.precision_, b.precision_);
    if (a.is_zero() && b.is_zero()) return QSeries::zero(prec);
    std::int64_t lo = std::min(a.is_zero() ? b.valuation_ : a.valuation_,
                               b.is_zero() ? a.valuation_ : b.valuation_);
    std::int64_t end_a = a.is_zero() ? lo : a.valuation_ + static_cast<std::int64_t>(a.coeffs_.size());
    std::int64_t end_b = b.is_zero() ? lo : b.valuation_ + static_cast<std::int64_t>(b.coeffs_.size());
    std::int64_t hi = std::min(prec, std::max(end_a, end_b));
    if (hi <= lo) return QSeries::zero(prec);
    std::vector<Rat> coeffs(static_cast<std::size_t>(hi - lo), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        std::int64_t e = a.valuation_ + static_cast<std::int64_t>(i);
        if (e >= lo && e < hi) coeffs[static_cast<std::size_t>(e - lo)] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        std::int64_t e = b.valuation_ + static_cast<std::int64_t>(i);
        if (e >= lo && e < hi) coeffs[static_cast<std::size_t>(e - lo)] += b.coeffs_[i];
    }
    return QSeries::from_coeffs(lo, std::move(coeffs), prec);
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    return a + (-b);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    // Truncated product rule: each factor's O(q^prec) tail is shifted by the
    // other factor's valuation.
    std::int64_t prec = std::min(clamp_precision(a.precision_ + b.valuation_),
                                 clamp_precision(b.precision_ + a.valuation_));
    if (a.is_zero() || b.is_zero()) return QSeries::zero(prec);
    std::int64_t val = a.valuation_ + b.valuation_;
    std::int64_t len = std::min<std::int64_t>(
        prec - val, static_cast<std::int64_t>(a.coeffs_.size() + b.coeffs_.size()) - 1);
    if (len <= 0) return QSeries::zero(prec);
    std::vector<Rat> coeffs(static_cast<std::size_t>(len), Rat(0));
    mpq_t tmp;
    mpq_init(tmp);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (static_cast<std::int64_t>(i) >= len) break;
        std::size_t jmax = std::min(b.coeffs_.size(), static_cast<std::size_t>(len - static_cast<std::int64_t>(i)));
        for (std::size_t j = 0; j < jmax; ++j) {
            mpq_mul(tmp, a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            mpq_add(coeffs[i + j].get_mpq_t(), coeffs[i + j].get_mpq_t(), tmp);
        }
    }
    mpq_clear(tmp);
    return QSeries::from_coeffs(val, std::move(coeffs), prec);
}

QSeries operator*(const QSeries& a, const Rat& c) {
    if (c == 0) return QSeries::zero(a.precision_);
    QSeries s(a);
    for (Rat& x : s.coeffs_) x *= c;
    return s;
}

QSeries operator/(const QSeries& a, const Rat& c) {
    if (c == 0) throw Error(ErrorCode::DomainError, "division by zero scalar");
    QSeries s(a);
    for (Rat& x : s.coeffs_) x /= c;
    return s;
}

bool agree_to_common_precision(const QSeries& a, const QSeries& b) {
    std::int64_t prec = std::min(a.precision(), b.precision());
    if (a.is_zero() && b.is_zero()) return true;
    std::int64_t lo = std::min(a.is_zero() ? b.valuation() : a.valuation(),
                               b.is_zero() ? a.valuation() : b.valuation());
    // Beyond the stored supports every coefficient below `prec` is zero, so
    // only the union of supports needs comparing.
    std::int64_t end_a = a.is_zero() ? lo : a.valuation() + static_cast<std::int64_t>(a.coeffs().size());
    std::int64_t end_b = b.is_zero() ? lo : b.valuation() + static_cast<std::int64_t>(b.coeffs().size());
    std::int64_t hi = std::min(prec, std::max(end_a, end_b));
    for (std::int64_t e = lo; e < hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

}  // namespace qmf
