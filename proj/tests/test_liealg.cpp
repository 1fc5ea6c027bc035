#include <doctest.h>

#include <random>

#include "mfq/errors.hpp"
#include "mfq/liealg.hpp"

using namespace mfq;

namespace {

/// Dense n x n matrix of the gl_n basis element with index (i-1)n + (j-1).
QMatrix unit_matrix(int n, int idx) {
    QMatrix m(n, n);
    m.at(idx / n, idx % n) = 1;
    return m;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
    QMatrix ab = a * b, ba = b * a;
    QMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = ab.at(i, j) - ba.at(i, j);
    return out;
}

}  // namespace

TEST_CASE("gl_n bracket agrees with the matrix commutator") {
    for (int n = 2; n <= 4; ++n) {
        LiePtr gl = build_gl(n);
        for (int a = 0; a < gl->dim(); ++a)
            for (int b = 0; b < gl->dim(); ++b) {
                QMatrix expected = commutator(unit_matrix(n, a), unit_matrix(n, b));
                QMatrix got(n, n);
                for (const auto& [k, c] : gl->bracket_basis(a, b))
                    got.at(k / n, k % n) = got.at(k / n, k % n) + c;
                CHECK(got == expected);
            }
    }
}

TEST_CASE("structure table construction rejects a Jacobi violation") {
    // [a,b] = a, [a,c] = c, [b,c] = b: the Jacobi sum on (a,b,c) is a - b - c
    std::vector<std::vector<SparseVec>> table(3, std::vector<SparseVec>(3));
    table[0][1] = {{0, 1}};
    table[1][0] = {{0, -1}};
    table[0][2] = {{2, 1}};
    table[2][0] = {{2, -1}};
    table[1][2] = {{1, 1}};
    table[2][1] = {{1, -1}};
    CHECK_THROWS_AS(LieAlgebra::create({"a", "b", "c"}, table), invariance_violation);
}

TEST_CASE("minimal sl2 triple relations") {
    for (int n = 2; n <= 4; ++n) {
        LiePtr gl = build_gl(n);
        Sl2Triple t = minimal_sl2_triple(gl);
        CHECK(gl->bracket(t.h, t.e) == t.e.scaled(2));
        CHECK(gl->bracket(t.h, t.f) == t.f.scaled(-2));
        CHECK(gl->bracket(t.e, t.f) == t.h);
    }
}

TEST_CASE("good grading is compatible with the bracket") {
    for (int n = 3; n <= 4; ++n) {
        LiePtr gl = build_gl(n);
        Grading g = good_grading_minimal(gl);
        for (int a = 0; a < gl->dim(); ++a)
            for (int b = 0; b < gl->dim(); ++b)
                for (const auto& [k, c] : gl->bracket_basis(a, b))
                    CHECK(g.degree[k] == g.degree[a] + g.degree[b]);
        // e itself sits in degree 2
        CHECK(g.degree[gl->gl_index(n, n - 1)] == 2);
    }
}

TEST_CASE("trace form is symmetric and invariant") {
    LiePtr gl = build_gl(3);
    BilinearForm tr = trace_form(gl);
    CHECK(tr.is_symmetric());
    CHECK(tr.is_invariant());
    // tr(e12 e21) = 1, tr(e12 e12) = 0
    CHECK(tr.gram.at(gl->gl_index(1, 2), gl->gl_index(2, 1)) == 1);
    CHECK(tr.gram.at(gl->gl_index(1, 2), gl->gl_index(1, 2)) == 0);
}

TEST_CASE("killing form of gl_n against the closed formula") {
    // K(x,y) = 2n tr(xy) - 2 tr(x)tr(y)
    for (int n = 2; n <= 3; ++n) {
        LiePtr gl = build_gl(n);
        BilinearForm k = killing_form(gl);
        BilinearForm tr = trace_form(gl);
        for (int a = 0; a < gl->dim(); ++a)
            for (int b = 0; b < gl->dim(); ++b) {
                Rational tra = (a / n == a % n) ? 1 : 0;
                Rational trb = (b / n == b % n) ? 1 : 0;
                CHECK(k.gram.at(a, b) == 2 * n * tr.gram.at(a, b) - 2 * tra * trb);
            }
    }
}

TEST_CASE("centralizer basis and dimension") {
    for (int n = 2; n <= 5; ++n) {
        LiePtr gl = build_gl(n);
        Subalgebra ge = minimal_nilpotent_centralizer(gl);
        CHECK(ge.sub->dim() == (n - 1) * (n - 1) + 1);
        // every basis element commutes with e
        LieElement e = gl->basis_element(gl->gl_index(n, n - 1));
        for (int k = 0; k < ge.sub->dim(); ++k) {
            LieElement x = ge.embed_basis(k);
            CHECK(gl->bracket(x, e).is_zero());
        }
        // generic centralizer computation finds the same dimension
        Subalgebra generic = centralizer(gl, e);
        CHECK(generic.sub->dim() == ge.sub->dim());
    }
}

TEST_CASE("centralizer brackets embed correctly") {
    LiePtr gl = build_gl(4);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    for (int a = 0; a < ge.sub->dim(); ++a)
        for (int b = 0; b < ge.sub->dim(); ++b) {
            // bracket inside the subalgebra, then embed
            LieElement sub = ge.sub->bracket(ge.sub->basis_element(a), ge.sub->basis_element(b));
            LieElement embedded = ge.embed(sub.coeffs);
            // embed first, bracket in the ambient algebra
            LieElement ambient = gl->bracket(ge.embed_basis(a), ge.embed_basis(b));
            CHECK(embedded == ambient);
        }
}

TEST_CASE("critical form on the centralizer, n=3") {
    LiePtr gl = build_gl(3);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    Grading grading = good_grading_minimal(gl);
    BilinearForm k = kappa_ec_form(ge, grading);
    CHECK(k.is_symmetric());

    // independent oracle: -1/2 of the ad-trace over an explicit basis of
    // g_0 = {e11, e12, e21, e22, e33}
    std::vector<int> g0{gl->gl_index(1, 1), gl->gl_index(1, 2), gl->gl_index(2, 1),
                        gl->gl_index(2, 2), gl->gl_index(3, 3)};
    auto restricted_ad = [&](int ambient_idx) {
        QMatrix full = gl->ad_matrix(gl->basis_element(ambient_idx).coeffs);
        QMatrix r(5, 5);
        for (int p = 0; p < 5; ++p)
            for (int q = 0; q < 5; ++q) r.at(p, q) = full.at(g0[p], g0[q]);
        return r;
    };
    QMatrix ad11 = restricted_ad(gl->gl_index(1, 1));
    CHECK(k.gram.at(0, 0) == -(ad11 * ad11).trace() / 2);
    CHECK(k.gram.at(0, 0) == rat(-1));

    // degree-2 directions and the identity pair to zero
    for (int i = 0; i < ge.sub->dim(); ++i) {
        CHECK(is_zero(k.gram.at(2, i)));  // e31
        CHECK(is_zero(k.gram.at(3, i)));  // e32
        CHECK(is_zero(k.gram.at(4, i)));  // I
    }

    // invariance as a form on the centralizer
    for (int a = 0; a < ge.sub->dim(); ++a)
        for (int b = 0; b < ge.sub->dim(); ++b)
            for (int c = 0; c < ge.sub->dim(); ++c) {
                QVector xb(ge.sub->dim(), 0), xc(ge.sub->dim(), 0);
                xb[b] = 1;
                xc[c] = 1;
                Rational lhs = k.eval(ge.sub->bracket(
                                          ge.sub->basis_element(a), ge.sub->basis_element(b))
                                          .coeffs,
                                      xc);
                Rational rhs = k.eval(xb, ge.sub->bracket(ge.sub->basis_element(a),
                                                          ge.sub->basis_element(c))
                                              .coeffs);
                CHECK(is_zero(lhs + rhs));
            }
}

TEST_CASE("index estimates") {
    // abelian algebra: every functional has full corank
    std::vector<std::vector<SparseVec>> table(3, std::vector<SparseVec>(3));
    LiePtr abelian = LieAlgebra::create({"x", "y", "z"}, table);
    CHECK(index_estimate(abelian, 4, 1) == 3);
    // reductive gl_2 has index 2
    CHECK(index_estimate(build_gl(2), 8, 1) == 2);
}

TEST_CASE("build_gl rejects n below 2") { CHECK_THROWS_AS(build_gl(1), domain_error); }
