#include <doctest.h>

#include <random>

#include "mfq/errors.hpp"
#include "mfq/mfshift.hpp"

using namespace mfq;

namespace {

struct Setup {
    LiePtr gl;
    Subalgebra ge;
    InvariantFamily trunc;
};

Setup setup(int n) {
    LiePtr gl = build_gl(n);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    SlodowyChart chart = slodowy_chart(gl, ge);
    return {gl, ge, e_truncation_family(gl_char_invariants(gl), chart, ge)};
}

}  // namespace

TEST_CASE("shift derivative satisfies the Taylor expansion") {
    // F(x + s chi) = sum_j s^j / j! (D_chi^j F)(x)
    Setup s = setup(3);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dist(-5, 5);
    Functional chi{s.ge.sub, QVector(s.ge.sub->dim())};
    for (auto& c : chi.values) c = dist(rng);

    for (const Poly& F : s.trunc.members) {
        for (int t = 0; t < 20; ++t) {
            std::map<VarId, Rational> x;
            for (int a = 0; a < s.ge.sub->dim(); ++a) x[VarId{a, 1}] = dist(rng);
            Rational shift = dist(rng);
            auto shifted = x;
            for (int a = 0; a < s.ge.sub->dim(); ++a)
                shifted[VarId{a, 1}] += shift * chi.values[a];
            Rational rhs = 0, spow = 1;
            for (int j = 0; j <= F.degree(); ++j) {
                rhs += shift_derivative(F, chi, j).evaluate(x) * spow / factorial(j);
                spow *= shift;
            }
            CHECK(F.evaluate(shifted) == rhs);
        }
    }
}

TEST_CASE("shift derivative drops degree by one per step") {
    Setup s = setup(4);
    Functional chi = random_regular_chi(s.ge.sub, 4, 5);
    for (size_t i = 0; i < s.trunc.members.size(); ++i) {
        const Poly& F = s.trunc.members[i];
        for (int j = 1; j < s.trunc.degrees[i]; ++j)
            CHECK(shift_derivative(F, chi, j).degree() == s.trunc.degrees[i] - j);
    }
}

TEST_CASE("regularity of functionals on the centralizer") {
    for (int n = 3; n <= 4; ++n) {
        Setup s = setup(n);
        // the zero functional has full corank, never regular
        Functional zero{s.ge.sub, QVector(s.ge.sub->dim(), 0)};
        CHECK_FALSE(chi_regular(zero, s.ge.sub, n));
        Functional chi = random_regular_chi(s.ge.sub, n, 17);
        CHECK(chi_regular(chi, s.ge.sub, n));
    }
}

TEST_CASE("random functional generation is deterministic in the seed") {
    Setup s = setup(3);
    Functional a = random_regular_chi(s.ge.sub, 3, 99);
    Functional b = random_regular_chi(s.ge.sub, 3, 99);
    Functional c = random_regular_chi(s.ge.sub, 3, 100);
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);
}

TEST_CASE("shift generators commute and are independent") {
    for (int n = 3; n <= 4; ++n) {
        Setup s = setup(n);
        Functional chi = random_regular_chi(s.ge.sub, n, 7);
        MFAlgebra alg = mf_generators(s.trunc, chi, n);

        // (dim g^e + ell) / 2 generators for a good system
        int expected = (s.ge.sub->dim() + n) / 2;
        CHECK(static_cast<int>(alg.generators.size()) == expected);
        for (size_t a = 0; a < alg.generators.size(); ++a)
            for (size_t b = a + 1; b < alg.generators.size(); ++b)
                CHECK(lie_poisson_bracket(alg.generators[a], alg.generators[b], s.ge.sub)
                          .is_zero());
        CHECK(independence_check(alg, 8, 13));
    }
}

TEST_CASE("mf_generators rejects a singular functional unless overridden") {
    Setup s = setup(3);
    Functional zero{s.ge.sub, QVector(s.ge.sub->dim(), 0)};
    CHECK_THROWS_AS(mf_generators(s.trunc, zero, 3), regularity_error);
    MFAlgebra alg = mf_generators(s.trunc, zero, 3, true);
    CHECK_FALSE(alg.generators.empty());
}
