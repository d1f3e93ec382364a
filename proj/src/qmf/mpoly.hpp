#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qmf/qseries.hpp"
#include "qmf/rational.hpp"

namespace qmf {

/// Exponent tuple for up to four variables t1..t4; unused slots stay zero.
using Exponents = std::array<int, 4>;

/// Graded-lexicographic order with t1 > t2 > t3 > t4.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over exact rationals in t1..t_nvars.
/// No zero coefficients are stored; terms are kept in canonical graded-lex
/// order. Immutable in spirit: operations return new values.
class MPoly {
public:
    explicit MPoly(int nvars = 4);

    static MPoly zero(int nvars);
    static MPoly constant(int nvars, Rat c);
    static MPoly variable(int nvars, int var);

    struct Term {
        Rat coeff;
        Exponents exponents;
    };
    static MPoly from_terms(int nvars, std::initializer_list<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat, GrlexLess>& terms() const { return terms_; }

    Rat coeff(const Exponents& e) const;
    int total_degree() const;
    int degree_in(int var) const;

    /// True when every term has the same weighted degree under the given
    /// variable weights; reports that weight (0 for the zero polynomial).
    bool weighted_homogeneous(std::span<const int> weights, int* weight_out = nullptr) const;

    MPoly partial(int var) const;
    MPoly pow(std::int64_t e) const;
    /// Substitution t_i -> phi[i]; phi supplies one polynomial per variable.
    MPoly composed(std::span<const MPoly> phi) const;
    QSeries evaluated(std::span<const QSeries> point) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const Rat& c);
    friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }
    friend bool operator==(const MPoly& a, const MPoly& b);

    std::string str(std::span<const std::string> var_names = {}) const;

private:
    int nvars_;
    std::map<Exponents, Rat, GrlexLess> terms_;

    void add_term(const Exponents& e, const Rat& c);
};

/// Single binomial-style rewrite t_var^2 -> replacement, applied to every
/// monomial until the t_var exponent drops below 2. The replacement must not
/// involve t_var, which makes the rewrite terminating and confluent.
struct VarRewrite {
    int var;
    MPoly replacement;
};

MPoly reduce(const MPoly& p, const VarRewrite& rewrite);

/// t3^2 -> t2 t4 in four variables.
const VarRewrite& gamma03_ideal();

}  // namespace qmf
