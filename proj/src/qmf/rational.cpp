#include "qmf/rational.hpp"

#include "qmf/error.hpp"

namespace qmf {

Rat ratio(long num, long den) {
    if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error(ErrorCode::BadArgument, "cannot parse rational: " + s);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw Error(ErrorCode::BadArgument, "zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

bool rat_is_integer(const Rat& r) {
    return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0;
}

Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < 0) throw Error(ErrorCode::DomainError, "negative upper binomial argument");
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace qmf
