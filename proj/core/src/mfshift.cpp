#include "mfq/mfshift.hpp"

#include <random>

#include "mfq/errors.hpp"

namespace mfq {

Rational Functional::eval(const QVector& x) const {
    Rational out = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i])) out += x[i] * values[i];
    return out;
}

bool chi_regular(const Functional& chi, const LiePtr& g, int ell) {
    const int d = g->dim();
    QMatrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rational v = 0;
            for (const auto& [k, c] : g->bracket_basis(i, j)) v += c * chi.values[k];
            m.at(i, j) = v;
        }
    return d - m.rank() == ell;
}

Functional random_regular_chi(const LiePtr& g, int ell, std::uint64_t seed, int max_attempts) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Functional chi{g, QVector(g->dim())};
        for (auto& v : chi.values) v = dist(rng);
        if (chi_regular(chi, g, ell)) return chi;
    }
    throw regularity_error("no regular functional found in the allotted attempts");
}

Poly shift_derivative(const Poly& F, const Functional& chi, int j) {
    if (j < 0) throw domain_error("shift order must be nonnegative");
    Poly out = F;
    for (int step = 0; step < j; ++step) {
        Poly next(out.context());
        for (VarId v : variables_of({out})) {
            if (v.depth != 1) throw wrong_ring("shift derivative lives in S(g)");
            Rational c = chi.values[v.gen];
            if (is_zero(c)) continue;
            next += out.partial_derivative(v).scaled(c);
        }
        out = next;
    }
    return out;
}

MFAlgebra mf_generators(const InvariantFamily& truncated, const Functional& chi, int ell,
                        bool allow_singular) {
    const LiePtr& g = chi.algebra;
    if (!allow_singular && !chi_regular(chi, g, ell))
        throw regularity_error("chi is not regular; pass allow_singular to override");

    MFAlgebra alg;
    for (size_t i = 0; i < truncated.members.size(); ++i) {
        int deg = truncated.degrees[i];
        for (int j = 0; j < deg; ++j) {
            Poly gen = shift_derivative(truncated.members[i], chi, j);
            if (gen.is_zero()) continue;
            alg.generators.push_back(gen);
            alg.provenance.emplace_back(static_cast<int>(i), j);
        }
    }
    for (size_t a = 0; a < alg.generators.size(); ++a)
        for (size_t b = a + 1; b < alg.generators.size(); ++b)
            if (!lie_poisson_bracket(alg.generators[a], alg.generators[b], g).is_zero())
                throw invariance_violation("shift generators fail to Poisson-commute");
    return alg;
}

bool independence_check(const MFAlgebra& alg, int trials, std::uint64_t seed) {
    if (alg.generators.empty()) return false;
    std::vector<VarId> vars = variables_of(alg.generators);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-20, 20);
    const int want = static_cast<int>(alg.generators.size());
    for (int t = 0; t < trials; ++t) {
        std::map<VarId, Rational> point;
        for (VarId v : vars) point[v] = dist(rng);
        if (jacobian_rank_at(alg.generators, point) == want) return true;
    }
    return false;
}

}  // namespace mfq
