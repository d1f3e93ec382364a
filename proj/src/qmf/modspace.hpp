#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qmf/forms.hpp"
#include "qmf/rational.hpp"

namespace qmf::modspace {

struct X0pInvariants {
    std::int64_t p;
    std::int64_t index;  // p + 1
    std::int64_t eps2;
    std::int64_t eps3;
    std::int64_t genus;
    std::int64_t cusps;  // always 2
    std::array<std::int64_t, 2> widths;  // (1, p) at the cusps [inf], [0]
};

X0pInvariants x0p_invariants(std::int64_t p);

/// dim M_k(Gamma0(p)) = (k-1)(g-1) + floor(k/4) eps2 + floor(k/3) eps3 + k
/// for even k >= 2.
std::int64_t dim_modular(std::int64_t p, int k);

/// dim S_k(Gamma0(p)); genus for k = 2, the k >= 4 closed form otherwise.
std::int64_t dim_cusp(std::int64_t p, int k);

/// floor(d_Gamma k / 12): agreement of weight-k modular forms through this
/// coefficient index forces equality.
std::int64_t sturm_bound(Group group, int k);

enum class CertifyOutcome { Equal, Unequal, InsufficientPrecision };

struct CertifyResult {
    CertifyOutcome outcome;
    std::int64_t first_difference;  // meaningful for Unequal
};

/// Sturm-type equality certificate for two weight-k modular/cusp forms on the
/// same group. Descriptors must match the stated weight and group and must
/// not be quasi-modular or weakly modular.
CertifyResult certify_equal(const Form& f, const Form& g, Group group, int k);

/// Exponent tuples over the group's modular generators spanning M_k:
/// SL2Z: E4^a E6^b with 4a+6b = k; Gamma0(2): Q2^r R2^s with 2r+4s = k;
/// Gamma0(3): one representative Q3^a R3^b S3^c per j = b+2c, minimal c.
std::vector<std::vector<int>> monomial_basis(Group group, int k);

/// Display names of the modular generators backing monomial_basis.
std::vector<std::string> basis_variable_names(Group group);

struct IndependenceReport {
    std::int64_t rank;
    std::int64_t dim;
    bool pass;  // rank == dim
};

/// Evaluates the monomial basis on catalog generators, assembles coefficients
/// a(0..sturm_bound) and reports the exact rank of that matrix.
IndependenceReport verify_independence(Group group, int k);

/// Exact rank by fraction-free Gaussian elimination.
std::int64_t rank_rational(std::vector<std::vector<Rat>> matrix);

}  // namespace qmf::modspace
