#include "mfq/liealg.hpp"

#include <cassert>
#include <random>

#include "mfq/errors.hpp"

namespace mfq {

LieElement LieElement::operator+(const LieElement& rhs) const {
    LieElement out{algebra, coeffs};
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += rhs.coeffs[i];
    return out;
}

LieElement LieElement::operator-(const LieElement& rhs) const {
    LieElement out{algebra, coeffs};
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= rhs.coeffs[i];
    return out;
}

LieElement LieElement::scaled(const Rational& c) const {
    LieElement out{algebra, coeffs};
    for (auto& v : out.coeffs) v *= c;
    return out;
}

bool LieElement::is_zero() const {
    for (const auto& v : coeffs)
        if (!mfq::is_zero(v)) return false;
    return true;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
    QVector out(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        if (mfq::is_zero(x[i])) continue;
        for (int j = 0; j < dim(); ++j) {
            if (mfq::is_zero(y[j])) continue;
            for (const auto& [k, c] : table_[i][j]) out[k] += x[i] * y[j] * c;
        }
    }
    return out;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    return LieElement{x.algebra, bracket(x.coeffs, y.coeffs)};
}

LieElement LieAlgebra::basis_element(int i) const {
    QVector v(dim(), 0);
    v[i] = 1;
    return LieElement{shared_from_this_(), v};
}

LieElement LieAlgebra::zero() const {
    return LieElement{shared_from_this_(), QVector(dim(), 0)};
}

QMatrix LieAlgebra::ad_matrix(const QVector& x) const {
    QMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        QVector ej(dim(), 0);
        ej[j] = 1;
        QVector col = bracket(x, ej);
        for (int i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

int LieAlgebra::gl_index(int i, int j) const {
    assert(gl_rank_);
    return (i - 1) * *gl_rank_ + (j - 1);
}

bool LieAlgebra::same_as(const LieAlgebra& other) const {
    return this == &other || (labels_ == other.labels_ && table_ == other.table_);
}

namespace {

QVector sparse_to_dense(const SparseVec& s, int dim) {
    QVector v(dim, 0);
    for (const auto& [k, c] : s) v[k] += c;
    return v;
}

SparseVec dense_to_sparse(const QVector& v) {
    SparseVec s;
    for (size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) s.emplace_back(static_cast<int>(k), v[k]);
    return s;
}

bool dense_is_zero(const QVector& v) {
    for (const auto& c : v)
        if (!is_zero(c)) return false;
    return true;
}

}  // namespace

LiePtr LieAlgebra::create(std::vector<std::string> labels,
                          std::vector<std::vector<SparseVec>> table) {
    const int dim = static_cast<int>(labels.size());
    if (static_cast<int>(table.size()) != dim)
        throw domain_error("structure table size does not match basis size");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != dim)
            throw domain_error("structure table is not square");

    auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
    alg->labels_ = std::move(labels);
    alg->table_ = std::move(table);
    alg->self_ = alg;

    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            QVector lhs = sparse_to_dense(alg->table_[i][j], dim);
            QVector rhs = sparse_to_dense(alg->table_[j][i], dim);
            for (int k = 0; k < dim; ++k)
                if (lhs[k] + rhs[k] != 0)
                    throw invariance_violation("antisymmetry fails on basis pair");
        }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                QVector bi(dim, 0), bj(dim, 0), bk(dim, 0);
                bi[i] = bj[j] = bk[k] = 1;
                QVector s = alg->bracket(alg->bracket(bi, bj), bk);
                QVector t = alg->bracket(alg->bracket(bj, bk), bi);
                QVector u = alg->bracket(alg->bracket(bk, bi), bj);
                for (int m = 0; m < dim; ++m)
                    if (s[m] + t[m] + u[m] != 0)
                        throw invariance_violation("Jacobi identity fails on basis triple");
            }
    return alg;
}

LiePtr build_gl(int n) {
    if (n < 2) throw domain_error("unsupported rank: build_gl requires n >= 2");
    const int dim = n * n;
    std::vector<std::string> labels(dim);
    auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            labels[idx(i, j)] = "e_{" + std::to_string(i) + "," + std::to_string(j) + "}";

    std::vector<std::vector<SparseVec>> table(dim, std::vector<SparseVec>(dim));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    QVector v(dim, 0);
                    if (j == k) v[idx(i, l)] += 1;
                    if (l == i) v[idx(k, j)] -= 1;
                    table[idx(i, j)][idx(k, l)] = dense_to_sparse(v);
                }

    auto alg = LieAlgebra::create(std::move(labels), std::move(table));
    const_cast<LieAlgebra&>(*alg).gl_rank_ = n;
    return alg;
}

Sl2Triple minimal_sl2_triple(const LiePtr& gl) {
    if (!gl->gl_rank()) throw domain_error("minimal_sl2_triple expects a gl_n algebra");
    const int n = *gl->gl_rank();
    if (n < 2) throw domain_error("unsupported rank");
    LieElement e = gl->basis_element(gl->gl_index(n, n - 1));
    LieElement f = gl->basis_element(gl->gl_index(n - 1, n));
    LieElement h = gl->basis_element(gl->gl_index(n, n)) -
                   gl->basis_element(gl->gl_index(n - 1, n - 1));
    if (!(gl->bracket(e, f) == h) || !(gl->bracket(h, e) == e.scaled(2)) ||
        !(gl->bracket(h, f) == f.scaled(-2)))
        throw invariance_violation("sl2 relations fail");
    return Sl2Triple{e, h, f};
}

std::optional<int> Grading::degree_of(const QVector& x) const {
    std::optional<int> deg;
    for (size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) continue;
        if (deg && *deg != degree[i]) throw domain_error("element is not grading-homogeneous");
        deg = degree[i];
    }
    return deg;
}

namespace {

void check_grading(const Grading& g) {
    const auto& alg = *g.algebra;
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            for (const auto& [k, c] : alg.bracket_basis(i, j))
                if (!is_zero(c) && g.degree[k] != g.degree[i] + g.degree[j])
                    throw invariance_violation("grading is not bracket-compatible");
}

}  // namespace

Grading good_grading_minimal(const LiePtr& gl) {
    if (!gl->gl_rank()) throw domain_error("good_grading_minimal expects a gl_n algebra");
    const int n = *gl->gl_rank();
    Grading g{gl, std::vector<int>(gl->dim(), 0)};
    for (int j = 1; j <= n - 1; ++j) {
        g.degree[gl->gl_index(n, j)] = 2;
        g.degree[gl->gl_index(j, n)] = -2;
    }
    check_grading(g);
    return g;
}

Rational BilinearForm::eval(const QVector& x, const QVector& y) const {
    Rational out = 0;
    for (int i = 0; i < gram.rows(); ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < gram.cols(); ++j)
            if (!is_zero(y[j])) out += x[i] * gram.at(i, j) * y[j];
    }
    return out;
}

bool BilinearForm::is_symmetric() const { return gram == gram.transposed(); }

bool BilinearForm::is_invariant() const {
    const auto& alg = *algebra;
    const int d = alg.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                QVector bi(d, 0), bj(d, 0), bk(d, 0);
                bi[i] = bj[j] = bk[k] = 1;
                Rational lhs = eval(alg.bracket(bi, bj), bk);
                Rational rhs = eval(bj, alg.bracket(bi, bk));
                if (lhs + rhs != 0) return false;
            }
    return true;
}

BilinearForm trace_form(const LiePtr& gl) {
    if (!gl->gl_rank()) throw domain_error("trace_form expects a gl_n algebra");
    const int n = *gl->gl_rank();
    QMatrix gram(gl->dim(), gl->dim());
    // tr(e_ij e_kl) = d_jk d_li
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            gram.at(gl->gl_index(i, j), gl->gl_index(j, i)) = 1;
    return BilinearForm{gl, gram};
}

namespace {

BilinearForm ad_trace_form(const LiePtr& g, const Rational& scale) {
    const int d = g->dim();
    std::vector<QMatrix> ads;
    ads.reserve(d);
    for (int i = 0; i < d; ++i) {
        QVector bi(d, 0);
        bi[i] = 1;
        ads.push_back(g->ad_matrix(bi));
    }
    QMatrix gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Rational t = (ads[i] * ads[j]).trace() * scale;
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    return BilinearForm{g, gram};
}

}  // namespace

BilinearForm killing_form(const LiePtr& g) { return ad_trace_form(g, 1); }

BilinearForm kappa_c_form(const LiePtr& g) { return ad_trace_form(g, Rational(-1, 2)); }

LieElement Subalgebra::embed(const QVector& sub_coords) const {
    QVector out(ambient->dim(), 0);
    for (size_t k = 0; k < sub_coords.size(); ++k) {
        if (is_zero(sub_coords[k])) continue;
        for (int i = 0; i < ambient->dim(); ++i) out[i] += sub_coords[k] * inclusion[k][i];
    }
    return LieElement{ambient, out};
}

LieElement Subalgebra::embed_basis(int k) const {
    QVector v(sub->dim(), 0);
    v[k] = 1;
    return embed(v);
}

std::optional<QVector> Subalgebra::restrict(const QVector& ambient_coords) const {
    QMatrix cols = QMatrix::from_rows(inclusion).transposed();
    return cols.solve(ambient_coords);
}

Subalgebra subalgebra_from_basis(const LiePtr& g, const std::vector<QVector>& basis,
                                 std::vector<std::string> labels) {
    const int k = static_cast<int>(basis.size());
    QMatrix cols = QMatrix::from_rows(basis).transposed();
    if (cols.rank() != k) throw domain_error("subalgebra basis is linearly dependent");

    std::vector<std::vector<SparseVec>> table(k, std::vector<SparseVec>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            QVector w = g->bracket(basis[a], basis[b]);
            auto sol = cols.solve(w);
            if (!sol) throw invariance_violation("basis is not closed under bracket");
            table[a][b] = dense_to_sparse(*sol);
        }
    auto sub = LieAlgebra::create(std::move(labels), std::move(table));
    return Subalgebra{g, sub, basis};
}

Subalgebra centralizer(const LiePtr& g, const LieElement& x) {
    auto kernel = g->ad_matrix(x.coeffs).kernel_basis();
    std::vector<std::string> labels;
    for (size_t a = 0; a < kernel.size(); ++a) {
        // Reuse the ambient label when a kernel vector is a plain basis vector.
        int unit = -1;
        int nonzero = 0;
        for (int i = 0; i < g->dim(); ++i)
            if (!is_zero(kernel[a][i])) {
                ++nonzero;
                unit = (kernel[a][i] == 1) ? i : -1;
            }
        if (nonzero == 1 && unit >= 0)
            labels.push_back(g->labels()[unit]);
        else
            labels.push_back("z_" + std::to_string(a));
    }
    return subalgebra_from_basis(g, kernel, std::move(labels));
}

Subalgebra minimal_nilpotent_centralizer(const LiePtr& gl) {
    if (!gl->gl_rank()) throw domain_error("expected a gl_n algebra");
    const int n = *gl->gl_rank();
    const int dim = gl->dim();

    std::vector<QVector> basis;
    std::vector<std::string> labels;
    auto push_unit = [&](int i, int j) {
        QVector v(dim, 0);
        v[gl->gl_index(i, j)] = 1;
        basis.push_back(std::move(v));
        labels.push_back(gl->labels()[gl->gl_index(i, j)]);
    };
    for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; j <= n - 1; ++j) push_unit(i, j);
    for (int j = 1; j <= n - 1; ++j) push_unit(n, j);
    QVector identity(dim, 0);
    for (int i = 1; i <= n; ++i) identity[gl->gl_index(i, i)] = 1;
    basis.push_back(identity);
    labels.push_back("I");

    LieElement e = gl->basis_element(gl->gl_index(n, n - 1));
    for (const auto& b : basis)
        if (!dense_is_zero(gl->bracket(b, e.coeffs)))
            throw invariance_violation("declared centralizer basis does not commute with e");
    auto kernel_dim = static_cast<int>(gl->ad_matrix(e.coeffs).kernel_basis().size());
    if (kernel_dim != static_cast<int>(basis.size()))
        throw invariance_violation("centralizer dimension mismatch");

    return subalgebra_from_basis(gl, basis, std::move(labels));
}

BilinearForm kappa_ec_form(const Subalgebra& ge, const Grading& grading) {
    if (ge.ambient.get() != grading.algebra.get() && !ge.ambient->same_as(*grading.algebra))
        throw context_mismatch("grading is over a different ambient algebra");

    std::vector<int> g0;  // ambient basis indices of degree 0
    for (int i = 0; i < ge.ambient->dim(); ++i)
        if (grading.degree[i] == 0) g0.push_back(i);
    const int m = static_cast<int>(g0.size());

    const int k = ge.sub->dim();
    std::vector<int> deg(k);
    std::vector<QMatrix> restricted(k);
    for (int a = 0; a < k; ++a) {
        auto d = grading.degree_of(ge.inclusion[a]);
        deg[a] = d.value_or(0);
        if (deg[a] != 0) continue;
        QMatrix full = ge.ambient->ad_matrix(ge.inclusion[a]);
        QMatrix r(m, m);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) r.at(p, q) = full.at(g0[p], g0[q]);
        restricted[a] = r;
    }

    QMatrix gram(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            if (deg[a] != 0 || deg[b] != 0) continue;
            // -1/2 tr_{g_0}(ad x ad y); the g_1 trace of the general
            // definition vanishes for an even grading. The 1/2 is forced by
            // centrality of the Q_i at this level.
            Rational t = -(restricted[a] * restricted[b]).trace() / 2;
            gram.at(a, b) = t;
            gram.at(b, a) = t;
        }
    return BilinearForm{ge.sub, gram};
}

int index_estimate(const LiePtr& g, int trials, std::uint64_t seed) {
    if (trials < 1) throw domain_error("index_estimate requires trials >= 1");
    const int d = g->dim();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-20, 20);
    int best = d;
    for (int t = 0; t < trials; ++t) {
        QVector chi(d);
        for (auto& c : chi) c = dist(rng);
        QMatrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rational v = 0;
                for (const auto& [k, c] : g->bracket_basis(i, j)) v += c * chi[k];
                m.at(i, j) = v;
            }
        best = std::min(best, d - m.rank());
    }
    return best;
}

}  // namespace mfq
