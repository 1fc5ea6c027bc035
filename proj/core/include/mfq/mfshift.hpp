#pragma once

#include <cstdint>
#include <vector>

#include "mfq/liealg.hpp"
#include "mfq/poisson.hpp"
#include "mfq/poly.hpp"

namespace mfq {

/// Exact linear functional on a Lie algebra, chi_i = chi(b_i).
struct Functional {
    LiePtr algebra;
    QVector values;

    Rational operator()(int basis_index) const { return values[basis_index]; }
    Rational eval(const QVector& x) const;
};

/// True iff the corank of chi([b_i, b_j]) equals ell.
bool chi_regular(const Functional& chi, const LiePtr& g, int ell);

/// Seeded random functional with small integer values, resampled until
/// regular; throws after `max_attempts` failures.
Functional random_regular_chi(const LiePtr& g, int ell, std::uint64_t seed,
                              int max_attempts = 64);

/// j-fold directional derivative D_chi^j F.
Poly shift_derivative(const Poly& F, const Functional& chi, int j);

struct MFAlgebra {
    std::vector<Poly> generators;
    std::vector<std::pair<int, int>> provenance;  // (invariant index i, shift order j)
};

/// Generators D_chi^j(eP_i), j = 0..deg eP_i - 1, with pairwise Poisson
/// commutativity verified exactly. Requires chi regular unless overridden.
MFAlgebra mf_generators(const InvariantFamily& truncated, const Functional& chi, int ell,
                        bool allow_singular = false);

/// Differential independence at a seeded rational point.
bool independence_check(const MFAlgebra& alg, int trials, std::uint64_t seed);

}  // namespace mfq
