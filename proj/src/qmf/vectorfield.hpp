#pragma once

#include <span>
#include <string>
#include <vector>

#include "qmf/forms.hpp"
#include "qmf/mpoly.hpp"

namespace qmf {

/// Polynomial vector field: component j is the coefficient of d/dt_(j+1).
struct PolyVF {
    std::vector<MPoly> components;

    int nvars() const { return static_cast<int>(components.size()); }
};

/// Directional derivative V(f) = sum_j V_j df/dt_j.
MPoly lie_apply(const PolyVF& v, const MPoly& f);

/// [V, W] = VW - WV, componentwise V(W_j) - W(V_j).
PolyVF lie_bracket(const PolyVF& v, const PolyVF& w);

PolyVF operator-(const PolyVF& a, const PolyVF& b);
PolyVF operator*(const PolyVF& a, const Rat& c);
bool is_zero(const PolyVF& a);

struct Sl2Check {
    std::string relation;
    bool pass;
    MPoly residual;
};

/// Verifies [E,F] = H, [H,E] = 2E, [H,F] = -2F; residuals are reduced by the
/// rewrite first when one is given.
std::vector<Sl2Check> check_sl2_triple(const PolyVF& e, const PolyVF& h, const PolyVF& f,
                                       const VarRewrite* ideal = nullptr);

/// Field induced by the change of variables phi along V: component j is
/// timescale * V(phi_j), expressed in source coordinates.
PolyVF pushforward(const PolyVF& v, std::span<const MPoly> phi, const Rat& timescale);

/// target_j(phi) - timescale * V(phi_j) for each component, reduced by the
/// optional source-coordinate rewrite; all-zero output certifies that phi
/// maps the source system onto the target system.
std::vector<MPoly> pushforward_mismatch(const PolyVF& source, std::span<const MPoly> phi,
                                        const Rat& timescale, const PolyVF& target,
                                        const VarRewrite* source_relation = nullptr);

/// residual_j = timescale * q d/dq solution_j - V_j(solution); all-zero
/// residuals to precision certify the solution.
std::vector<QSeries> ode_residual(const PolyVF& v, std::span<const QSeries> solution,
                                  const Rat& timescale = Rat(1));

namespace systems {

/// Classical Ramanujan field on (E2, E4, E6).
PolyVF ramanujan();
/// The level-2 field of the weight-(2,2,4) generator triple.
PolyVF gamma02();
/// The level-3 field; the last component is t1 t4 + t3^2 when
/// t3_squared_variant is true, t1 t4 + t2 t4 otherwise. The two variants
/// agree modulo t3^2 - t2 t4.
PolyVF gamma03(bool t3_squared_variant);
/// Euler (weight) field 2 t1 d1 + ... for the group's generator weights.
PolyVF euler_field(Group g);
/// Constant translation field -w d/dt1 with w = 12, 8, 6.
PolyVF translation_field(Group g);
std::vector<int> weight_vector(Group g);

/// Original-coordinate systems; their logarithmic time runs at 3 q d/dq
/// (n = 1) and -1/5 q d/dq (n = 2) relative to the primary systems.
PolyVF original_n1();
PolyVF original_n2();

}  // namespace systems

}  // namespace qmf
