#pragma once

#include <vector>

#include "mfq/liealg.hpp"
#include "mfq/poly.hpp"

namespace mfq {

/// The biderivation on S(g) extending the Lie bracket; operands must live in
/// depth 1.
Poly lie_poisson_bracket(const Poly& a, const Poly& b, const LiePtr& g);

bool is_poisson_invariant(const Poly& p, const LiePtr& g);

struct InvariantFamily {
    std::vector<Poly> members;
    std::vector<int> degrees;
};

/// P_k = sum of principal k x k minors of the generic matrix (e_ij),
/// k = 1..n. Homogeneous generators of S(gl_n)^{gl_n}, degrees 1..n.
InvariantFamily gl_char_invariants(const LiePtr& gl);

/// Coordinates on the Slodowy slice e + g^f, with g^f the transpose of the
/// centralizer basis and (g^e)* identified with g^f via the trace pairing.
struct SlodowyChart {
    Sl2Triple sl2;
    std::vector<QVector> gf_basis;
    QMatrix pairing;     // pairing(a, k) = tr(ge_a * gf_k)
    QMatrix dual_coeff;  // row k = g^e coordinates of the functional dual to gf_k
};

SlodowyChart slodowy_chart(const LiePtr& gl, const Subalgebra& ge);

/// Minimal-degree component of P restricted to e + g^f, expressed in S(g^e).
/// Input must be g-invariant; output invariance under g^e is re-checked.
Poly e_truncation(const Poly& P, const SlodowyChart& chart, const Subalgebra& ge);

/// All e-truncations of a family, with their degrees.
InvariantFamily e_truncation_family(const InvariantFamily& family, const SlodowyChart& chart,
                                    const Subalgebra& ge);

/// Sum of truncation degrees == (dim g^e + ell) / 2.
bool good_system_check(const InvariantFamily& truncated, const LiePtr& centralizer, int ell);

/// The 6-dimensional centralizer fixture with basis {E, H, F, u, v, e}:
/// sl_2-triple {E, H, F}, [E,v] = u, [F,u] = v, [u,v] = e, e central.
struct C2Fixture {
    LiePtr algebra;
    InvariantFamily invariants;  // eF_1 = e (deg 1), eF_2 (deg 3)
    std::vector<Poly> quadrics;  // five quadrics cutting the Jacobian locus
};

C2Fixture c2_fixture();

/// Point (p^2/2t, -q^2/2t, -pq/t, p, q, t) on the singular branch; t != 0.
std::map<VarId, Rational> c2_branch_point(const Rational& p, const Rational& q,
                                          const Rational& t);

}  // namespace mfq
