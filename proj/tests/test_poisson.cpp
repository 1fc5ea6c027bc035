#include <doctest.h>

#include <random>

#include "mfq/errors.hpp"
#include "mfq/poisson.hpp"

using namespace mfq;

namespace {

Poly random_depth1_poly(std::mt19937_64& rng, const LiePtr& g, int terms) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> var(0, g->dim() - 1);
    std::uniform_int_distribution<int> expo(0, 2);
    Poly p(g);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < 2; ++v) {
            int e = expo(rng);
            if (e > 0) m[VarId{var(rng), 1}] += e;
        }
        p.add_term(m, coeff(rng));
    }
    return p;
}

/// Test-side determinant by Laplace expansion, rows/cols <= 5.
Rational laplace_det(const QMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rational det = 0;
    for (int r = 0; r < n; ++r) {
        if (is_zero(m.at(r, 0))) continue;
        QMatrix sub(n - 1, n - 1);
        int rr = 0;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            for (int j = 1; j < n; ++j) sub.at(rr, j - 1) = m.at(i, j);
            ++rr;
        }
        Rational term = m.at(r, 0) * laplace_det(sub);
        det += (r % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

TEST_CASE("poisson bracket: antisymmetry, Leibniz, Jacobi") {
    LiePtr gl = build_gl(3);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        Poly a = random_depth1_poly(rng, gl, 2);
        Poly b = random_depth1_poly(rng, gl, 2);
        Poly c = random_depth1_poly(rng, gl, 2);
        CHECK(lie_poisson_bracket(a, b, gl) == -lie_poisson_bracket(b, a, gl));
        CHECK(lie_poisson_bracket(a, b * c, gl) ==
              lie_poisson_bracket(a, b, gl) * c + b * lie_poisson_bracket(a, c, gl));
        Poly jac = lie_poisson_bracket(a, lie_poisson_bracket(b, c, gl), gl) +
                   lie_poisson_bracket(b, lie_poisson_bracket(c, a, gl), gl) +
                   lie_poisson_bracket(c, lie_poisson_bracket(a, b, gl), gl);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("poisson bracket of linear polynomials is the Lie bracket") {
    LiePtr gl = build_gl(3);
    for (int a = 0; a < gl->dim(); ++a)
        for (int b = 0; b < gl->dim(); ++b) {
            Poly pa = Poly::variable(VarId{a, 1}, gl);
            Poly pb = Poly::variable(VarId{b, 1}, gl);
            Poly expected(gl);
            for (const auto& [k, c] : gl->bracket_basis(a, b))
                expected.add_term({{VarId{k, 1}, 1}}, c);
            CHECK(lie_poisson_bracket(pa, pb, gl) == expected);
        }
}

TEST_CASE("poisson bracket rejects loop variables") {
    LiePtr gl = build_gl(2);
    Poly deep = Poly::variable(VarId{0, 2}, gl);
    Poly flat = Poly::variable(VarId{0, 1}, gl);
    CHECK_THROWS_AS(lie_poisson_bracket(deep, flat, gl), wrong_ring);
}

TEST_CASE("characteristic invariants against the determinant oracle") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int n = 2; n <= 4; ++n) {
        LiePtr gl = build_gl(n);
        InvariantFamily fam = gl_char_invariants(gl);
        REQUIRE(fam.degrees == [&] {
            std::vector<int> d(n);
            for (int k = 1; k <= n; ++k) d[k - 1] = k;
            return d;
        }());
        for (const Poly& p : fam.members) CHECK(is_poisson_invariant(p, gl));

        for (int t = 0; t < 10; ++t) {
            QMatrix x(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) x.at(i, j) = dist(rng);
            // coordinate function e_ij takes the (j,i) entry
            std::map<VarId, Rational> point;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    point[VarId{gl->gl_index(i, j), 1}] = x.at(j - 1, i - 1);
            // det(lambda I + X) = lambda^n + sum_k P_k(X) lambda^{n-k}
            for (long lambda : {2L, 3L, 5L}) {
                QMatrix shifted = x;
                for (int i = 0; i < n; ++i) shifted.at(i, i) += lambda;
                Rational lhs = laplace_det(shifted);
                Rational rhs = 1;
                for (int i = 0; i < n; ++i) rhs *= lambda;
                Rational lpow = rhs;
                for (int k = 1; k <= n; ++k) {
                    lpow /= lambda;
                    rhs += fam.members[k - 1].evaluate(point) * lpow;
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("truncation against the slice-evaluation oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int n = 3; n <= 4; ++n) {
        LiePtr gl = build_gl(n);
        Subalgebra ge = minimal_nilpotent_centralizer(gl);
        SlodowyChart chart = slodowy_chart(gl, ge);
        InvariantFamily fam = gl_char_invariants(gl);
        InvariantFamily trunc = e_truncation_family(fam, chart, ge);
        const int k = ge.sub->dim();

        for (size_t fi = 0; fi < fam.members.size(); ++fi) {
            const int d = trunc.degrees[fi];
            for (int t = 0; t < 5; ++t) {
                QVector y(k);
                for (auto& c : y) c = dist(rng);
                // slice point e + F with F = sum_l y_l f_l
                QVector f(gl->dim(), 0);
                for (int l = 0; l < k; ++l)
                    for (int p = 0; p < gl->dim(); ++p) f[p] += y[l] * chart.gf_basis[l][p];

                // restrict the invariant along e + t F; the coordinate
                // function e_ij takes the (j,i) entry of the matrix point
                VarId tv{0, 1};
                Poly restricted = fam.members[fi].substitute([&](VarId v) {
                    int i = v.gen / n + 1, j = v.gen % n + 1;
                    int pos = gl->gl_index(j, i);
                    Poly img = Poly::constant(chart.sl2.e.coeffs[pos]);
                    if (!is_zero(f[pos]))
                        img += Poly::variable(tv).scaled(f[pos]);
                    return img;
                });
                Rational oracle = 0;
                for (const auto& [mono, c] : restricted.terms())
                    if (monomial_degree(mono) == d) oracle += c;

                // the truncation reads the same point through the pairing
                std::map<VarId, Rational> point;
                for (int a = 0; a < k; ++a) {
                    Rational val = 0;
                    for (int p = 0; p < gl->dim(); ++p)
                        if (!is_zero(ge.inclusion[a][p])) {
                            int i = p / n + 1, j = p % n + 1;
                            val += ge.inclusion[a][p] * f[gl->gl_index(j, i)];
                        }
                    point[VarId{a, 1}] = val;
                }
                CHECK(trunc.members[fi].evaluate(point) == oracle);
            }
        }
    }
}

TEST_CASE("truncation degrees form a good system") {
    for (int n = 2; n <= 5; ++n) {
        LiePtr gl = build_gl(n);
        Subalgebra ge = minimal_nilpotent_centralizer(gl);
        SlodowyChart chart = slodowy_chart(gl, ge);
        InvariantFamily trunc = e_truncation_family(gl_char_invariants(gl), chart, ge);
        CHECK(good_system_check(trunc, ge.sub, n));
        for (const Poly& p : trunc.members) CHECK(is_poisson_invariant(p, ge.sub));
    }
}

TEST_CASE("e_truncation rejects non-invariant input") {
    LiePtr gl = build_gl(3);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    SlodowyChart chart = slodowy_chart(gl, ge);
    Poly notinv = Poly::variable(VarId{gl->gl_index(1, 2), 1}, gl);
    CHECK_THROWS_AS(e_truncation(notinv, chart, ge), invariance_violation);
}

TEST_CASE("rank-two fixture: invariants and printed formula") {
    C2Fixture fx = c2_fixture();
    auto var = [&](int i) { return Poly::variable(VarId{i, 1}, fx.algebra); };
    // (4EF + H^2)e + 2Ev^2 + 2uvH - 2Fu^2 with basis order E,H,F,u,v,e
    Poly expected = (var(0) * var(2) * Poly::constant(4) + var(1) * var(1)) * var(5) +
                    var(0) * var(4) * var(4) * Poly::constant(2) +
                    var(3) * var(4) * var(1) * Poly::constant(2) -
                    var(2) * var(3) * var(3) * Poly::constant(2);
    CHECK(fx.invariants.members[1] == expected);
    CHECK(fx.invariants.members[0] == var(5));
    for (const Poly& f : fx.invariants.members) CHECK(is_poisson_invariant(f, fx.algebra));
}

TEST_CASE("rank-two fixture: singular branch and generic rank") {
    C2Fixture fx = c2_fixture();
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<int> dist(-8, 8);
    std::uniform_int_distribution<int> tdist(1, 8);
    for (int t = 0; t < 50; ++t) {
        auto point = c2_branch_point(dist(rng), dist(rng), tdist(rng));
        for (const Poly& quad : fx.quadrics) CHECK(is_zero(quad.evaluate(point)));
        CHECK(jacobian_rank_at(fx.invariants.members, point) <= 1);
    }
    // the other component: p = q = t = 0
    std::map<VarId, Rational> axis{{VarId{0, 1}, 3}, {VarId{1, 1}, -2}, {VarId{2, 1}, 7},
                                   {VarId{3, 1}, 0}, {VarId{4, 1}, 0},  {VarId{5, 1}, 0}};
    for (const Poly& quad : fx.quadrics) CHECK(is_zero(quad.evaluate(axis)));
    CHECK(jacobian_rank_at(fx.invariants.members, axis) <= 1);

    std::vector<VarId> vars = variables_of(fx.invariants.members);
    int generic = 0;
    for (int t = 0; t < 60; ++t) {
        std::map<VarId, Rational> point;
        for (VarId v : vars) point[v] = dist(rng);
        if (jacobian_rank_at(fx.invariants.members, point) == 2) ++generic;
    }
    CHECK(generic >= 50);
}
