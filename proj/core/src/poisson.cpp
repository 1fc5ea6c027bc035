#include "mfq/poisson.hpp"

#include <numeric>

#include "mfq/errors.hpp"

namespace mfq {

namespace {

Poly linear_poly(const QVector& coeffs, const LiePtr& g) {
    Poly out(g);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!is_zero(coeffs[i])) out.add_term({{VarId{static_cast<int>(i), 1}, 1}}, coeffs[i]);
    return out;
}

void require_depth_one(const Poly& p) {
    if (p.max_depth() > 1) throw wrong_ring("expected an element of S(g) (depth-1 variables)");
}

}  // namespace

Poly lie_poisson_bracket(const Poly& a, const Poly& b, const LiePtr& g) {
    require_depth_one(a);
    require_depth_one(b);
    Poly out(g);
    std::vector<VarId> va = variables_of({a});
    std::vector<VarId> vb = variables_of({b});
    for (VarId x : va) {
        Poly da = a.partial_derivative(x);
        if (da.is_zero()) continue;
        for (VarId y : vb) {
            const SparseVec& br = g->bracket_basis(x.gen, y.gen);
            if (br.empty()) continue;
            Poly db = b.partial_derivative(y);
            if (db.is_zero()) continue;
            QVector v(g->dim(), 0);
            for (const auto& [k, c] : br) v[k] += c;
            out += da * db * linear_poly(v, g);
        }
    }
    return out;
}

bool is_poisson_invariant(const Poly& p, const LiePtr& g) {
    for (int i = 0; i < g->dim(); ++i) {
        Poly bi = Poly::variable(VarId{i, 1}, g);
        if (!lie_poisson_bracket(bi, p, g).is_zero()) return false;
    }
    return true;
}

InvariantFamily gl_char_invariants(const LiePtr& gl) {
    if (!gl->gl_rank()) throw domain_error("gl_char_invariants expects a gl_n algebra");
    const int n = *gl->gl_rank();

    auto entry = [&](int i, int j) {
        return Poly::variable(VarId{gl->gl_index(i, j), 1}, gl);
    };
    // Determinant of the principal submatrix on rows/cols `s` (1-based).
    auto minor_det = [&](const std::vector<int>& s) {
        const int k = static_cast<int>(s.size());
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        Poly det(gl);
        do {
            int inv = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inv;
            Poly t = Poly::constant(inv % 2 ? -1 : 1, gl);
            for (int i = 0; i < k; ++i) t *= entry(s[perm[i]], s[i]);
            det += t;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };

    InvariantFamily fam;
    for (int k = 1; k <= n; ++k) {
        Poly pk(gl);
        std::vector<int> subset(k);
        // iterate over k-subsets of {1..n}
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 1);
        while (true) {
            pk += minor_det(idx);
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
        }
        fam.members.push_back(pk);
        fam.degrees.push_back(k);
    }
    return fam;
}

SlodowyChart slodowy_chart(const LiePtr& gl, const Subalgebra& ge) {
    Sl2Triple sl2 = minimal_sl2_triple(gl);
    const int n = *gl->gl_rank();
    const int k = ge.sub->dim();

    auto transpose_vec = [&](const QVector& v) {
        QVector out(gl->dim(), 0);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) out[gl->gl_index(j, i)] = v[gl->gl_index(i, j)];
        return out;
    };

    SlodowyChart chart;
    chart.sl2 = sl2;
    for (int a = 0; a < k; ++a) chart.gf_basis.push_back(transpose_vec(ge.inclusion[a]));

    // g^f must be closed under bracket; this also derives its structure.
    std::vector<std::string> labels(k);
    for (int a = 0; a < k; ++a) labels[a] = "f_" + std::to_string(a);
    subalgebra_from_basis(gl, chart.gf_basis, labels);

    BilinearForm tr = trace_form(gl);
    chart.pairing = QMatrix(k, k);
    for (int a = 0; a < k; ++a)
        for (int l = 0; l < k; ++l)
            chart.pairing.at(a, l) = tr.eval(ge.inclusion[a], chart.gf_basis[l]);
    if (chart.pairing.rank() != k) throw invariance_violation("trace pairing is degenerate");

    // Row l solves sum_a C_{l,a} pairing(a, l') = delta_{l,l'}.
    QMatrix pt = chart.pairing.transposed();
    chart.dual_coeff = QMatrix(k, k);
    for (int l = 0; l < k; ++l) {
        QVector rhs(k, 0);
        rhs[l] = 1;
        auto sol = pt.solve(rhs);
        for (int a = 0; a < k; ++a) chart.dual_coeff.at(l, a) = (*sol)[a];
    }
    return chart;
}

Poly e_truncation(const Poly& P, const SlodowyChart& chart, const Subalgebra& ge) {
    const LiePtr& gl = ge.ambient;
    if (!is_poisson_invariant(P, gl))
        throw invariance_violation("e_truncation input is not g-invariant");
    const int n = *gl->gl_rank();
    const int k = ge.sub->dim();

    // Dual functionals as linear polynomials on (g^e)*.
    std::vector<Poly> dual(k);
    for (int l = 0; l < k; ++l) {
        Poly d(ge.sub);
        for (int a = 0; a < k; ++a)
            if (!is_zero(chart.dual_coeff.at(l, a)))
                d.add_term({{VarId{a, 1}, 1}}, chart.dual_coeff.at(l, a));
        dual[l] = d;
    }

    // The coordinate function e_ij evaluated at e + sum_l y_l f_l is the
    // (j,i) matrix entry of that point.
    Poly restricted = P.substitute([&](VarId v) {
        int i = v.gen / n + 1, j = v.gen % n + 1;
        int pos = gl->gl_index(j, i);
        Poly img = Poly::constant(chart.sl2.e.coeffs[pos], ge.sub);
        for (int l = 0; l < k; ++l)
            if (!is_zero(chart.gf_basis[l][pos])) img += dual[l].scaled(chart.gf_basis[l][pos]);
        return img;
    });

    Poly trunc = restricted.min_degree_component();
    if (!is_poisson_invariant(trunc, ge.sub))
        throw invariance_violation("truncation is not g^e-invariant");
    return trunc;
}

InvariantFamily e_truncation_family(const InvariantFamily& family, const SlodowyChart& chart,
                                    const Subalgebra& ge) {
    InvariantFamily out;
    for (const auto& P : family.members) {
        Poly t = e_truncation(P, chart, ge);
        out.members.push_back(t);
        out.degrees.push_back(t.degree());
    }
    return out;
}

bool good_system_check(const InvariantFamily& truncated, const LiePtr& centralizer, int ell) {
    int sum = 0;
    for (int d : truncated.degrees) sum += d;
    return 2 * sum == centralizer->dim() + ell;
}

C2Fixture c2_fixture() {
    // basis order E, H, F, u, v, e
    enum { E = 0, H = 1, F = 2, U = 3, V = 4, Z = 5 };
    std::vector<std::vector<SparseVec>> table(6, std::vector<SparseVec>(6));
    auto set = [&](int i, int j, SparseVec v) {
        table[i][j] = v;
        for (auto& [k, c] : v) c = -c;
        table[j][i] = v;
    };
    set(H, E, {{E, 2}});
    set(H, F, {{F, -2}});
    set(E, F, {{H, 1}});
    set(E, V, {{U, 1}});
    set(F, U, {{V, 1}});
    set(H, U, {{U, 1}});
    set(H, V, {{V, -1}});
    set(U, V, {{Z, 1}});

    C2Fixture fix;
    fix.algebra = LieAlgebra::create({"E", "H", "F", "u", "v", "e"}, std::move(table));

    auto var = [&](int i) { return Poly::variable(VarId{i, 1}, fix.algebra); };
    Poly f1 = var(Z);
    Poly f2 = var(E) * var(F) * var(Z) * Poly::constant(4) +
              var(H) * var(H) * var(Z) + var(E) * var(V) * var(V) * Poly::constant(2) +
              var(U) * var(V) * var(H) * Poly::constant(2) -
              var(F) * var(U) * var(U) * Poly::constant(2);
    fix.invariants.members = {f1, f2};
    fix.invariants.degrees = {1, 3};

    // coordinates (x, y, z, p, q, t) = (E, F, H, u, v, e)
    fix.quadrics = {
        var(F) * var(Z) * Poly::constant(2) + var(V) * var(V),
        var(E) * var(Z) * Poly::constant(2) - var(U) * var(U),
        var(V) * var(H) - var(F) * var(U) * Poly::constant(2),
        var(E) * var(V) * Poly::constant(2) + var(U) * var(H),
        var(H) * var(Z) + var(U) * var(V),
    };
    return fix;
}

std::map<VarId, Rational> c2_branch_point(const Rational& p, const Rational& q,
                                          const Rational& t) {
    if (is_zero(t)) throw domain_error("branch point requires t != 0");
    std::map<VarId, Rational> pt;
    pt[VarId{0, 1}] = p * p / (2 * t);   // E
    pt[VarId{1, 1}] = -p * q / t;        // H
    pt[VarId{2, 1}] = -q * q / (2 * t);  // F
    pt[VarId{3, 1}] = p;                 // u
    pt[VarId{4, 1}] = q;                 // v
    pt[VarId{5, 1}] = t;                 // e
    return pt;
}

}  // namespace mfq
