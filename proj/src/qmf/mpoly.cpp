#include "qmf/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qmf/error.hpp"

namespace qmf {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = a[0] + a[1] + a[2] + a[3];
    int db = b[0] + b[1] + b[2] + b[3];
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly::MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 4)
        throw Error(ErrorCode::DimensionMismatch, "MPoly supports 1 to 4 variables");
}

MPoly MPoly::zero(int nvars) { return MPoly(nvars); }

MPoly MPoly::constant(int nvars, Rat c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exponents{0, 0, 0, 0}, std::move(c));
    return p;
}

MPoly MPoly::variable(int nvars, int var) {
    MPoly p(nvars);
    if (var < 0 || var >= nvars)
        throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(var)] = 1;
    p.terms_.emplace(e, Rat(1));
    return p;
}

MPoly MPoly::from_terms(int nvars, std::initializer_list<Term> terms) {
    MPoly p(nvars);
    for (const auto& t : terms) {
        for (int v = nvars; v < 4; ++v)
            if (t.exponents[static_cast<std::size_t>(v)] != 0)
                throw Error(ErrorCode::DimensionMismatch, "exponent on an unused variable");
        p.add_term(t.exponents, t.coeff);
    }
    return p;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1] + e[2] + e[3]);
    return deg;
}

int MPoly::degree_in(int var) const {
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<std::size_t>(var)]);
    return deg;
}

bool MPoly::weighted_homogeneous(std::span<const int> weights, int* weight_out) const {
    if (static_cast<int>(weights.size()) != nvars_)
        throw Error(ErrorCode::DimensionMismatch, "weight vector size mismatch");
    bool first = true;
    int weight = 0;
    for (const auto& [e, c] : terms_) {
        int w = 0;
        for (int v = 0; v < nvars_; ++v) w += e[static_cast<std::size_t>(v)] * weights[static_cast<std::size_t>(v)];
        if (first) {
            weight = w;
            first = false;
        } else if (w != weight) {
            return false;
        }
    }
    if (weight_out) *weight_out = weight;
    return true;
}

MPoly MPoly::partial(int var) const {
    if (var < 0 || var >= nvars_)
        throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
    MPoly p(nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<std::size_t>(var)] = k - 1;
        p.add_term(d, c * Rat(k));
    }
    return p;
}

MPoly MPoly::pow(std::int64_t e) const {
    if (e < 0) throw Error(ErrorCode::DomainError, "negative polynomial power");
    MPoly result = constant(nvars_, Rat(1));
    MPoly base(*this);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

MPoly MPoly::composed(std::span<const MPoly> phi) const {
    if (static_cast<int>(phi.size()) != nvars_)
        throw Error(ErrorCode::SubstitutionError, "composition needs one polynomial per variable");
    int target_nvars = phi.empty() ? nvars_ : phi[0].nvars();
    for (const MPoly& q : phi)
        if (q.nvars() != target_nvars)
            throw Error(ErrorCode::SubstitutionError, "composition images disagree on variable count");
    // Per-variable power cache; degrees here are small.
    std::vector<std::vector<MPoly>> powers(static_cast<std::size_t>(nvars_));
    auto power_of = [&](int v, int k) -> const MPoly& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        if (cache.empty()) cache.push_back(MPoly::constant(target_nvars, Rat(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * phi[static_cast<std::size_t>(v)]);
        return cache[static_cast<std::size_t>(k)];
    };
    MPoly result(target_nvars);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(target_nvars, c);
        for (int v = 0; v < nvars_; ++v)
            if (e[static_cast<std::size_t>(v)] > 0) term = term * power_of(v, e[static_cast<std::size_t>(v)]);
        result += term;
    }
    return result;
}

QSeries MPoly::evaluated(std::span<const QSeries> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw Error(ErrorCode::DimensionMismatch, "evaluation needs one series per variable");
    std::vector<std::vector<QSeries>> powers(static_cast<std::size_t>(nvars_));
    auto power_of = [&](int v, int k) -> const QSeries& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        if (cache.empty()) cache.push_back(QSeries::constant(1));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * point[static_cast<std::size_t>(v)]);
        return cache[static_cast<std::size_t>(k)];
    };
    QSeries result = QSeries::zero(QSeries::kExactPrecision);
    for (const auto& [e, c] : terms_) {
        QSeries term = QSeries::constant(c);
        for (int v = 0; v < nvars_; ++v)
            if (e[static_cast<std::size_t>(v)] > 0) term = term * power_of(v, e[static_cast<std::size_t>(v)]);
        result = result + term;
    }
    return result;
}

MPoly MPoly::operator-() const {
    MPoly p(*this);
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MPoly& MPoly::operator+=(const MPoly& other) {
    if (other.nvars_ != nvars_)
        throw Error(ErrorCode::DimensionMismatch, "polynomial variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
    if (other.nvars_ != nvars_)
        throw Error(ErrorCode::DimensionMismatch, "polynomial variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw Error(ErrorCode::DimensionMismatch, "polynomial variable counts differ");
    MPoly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

MPoly operator*(const MPoly& a, const Rat& c) {
    MPoly p(a.nvars_);
    if (c == 0) return p;
    p.terms_ = a.terms_;
    for (auto& [e, x] : p.terms_) x *= c;
    return p;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string MPoly::str(std::span<const std::string> var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading (highest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = e[0] + e[1] + e[2] + e[3] > 0;
        if (a != 1 || !has_vars) {
            out << rat_to_string(a);
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (int v = 0; v < nvars_; ++v) {
            int k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            if (static_cast<std::size_t>(v) < var_names.size())
                out << var_names[static_cast<std::size_t>(v)];
            else
                out << "t" << (v + 1);
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

MPoly reduce(const MPoly& p, const VarRewrite& rewrite) {
    if (rewrite.replacement.degree_in(rewrite.var) != 0)
        throw Error(ErrorCode::DomainError, "rewrite replacement must not involve the rewritten variable");
    MPoly result(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        int k = e[static_cast<std::size_t>(rewrite.var)];
        if (k < 2) {
            result += MPoly::from_terms(p.nvars(), {{c, e}});
            continue;
        }
        Exponents rest = e;
        rest[static_cast<std::size_t>(rewrite.var)] = k % 2;
        MPoly term = MPoly::from_terms(p.nvars(), {{c, rest}}) * rewrite.replacement.pow(k / 2);
        result += term;
    }
    return result;
}

const VarRewrite& gamma03_ideal() {
    static const VarRewrite rewrite{
        2, MPoly::from_terms(4, {{Rat(1), Exponents{0, 1, 0, 1}}})};
    return rewrite;
}

}  // namespace qmf
