#include "mfq/quantize.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace mfq {

namespace {

UEAElement iterate_T(UEAElement a, int times) {
    for (int i = 0; i < times; ++i) a = translation_T(a);
    return a;
}

}  // namespace

TauPoly TauPoly::constant(UEAElement c) {
    TauPoly out(c.context());
    out.set(0, std::move(c));
    return out;
}

TauPoly TauPoly::tau(LiePtr ctx) {
    TauPoly out(ctx);
    out.set(1, UEAElement::identity(ctx));
    return out;
}

UEAElement TauPoly::coefficient(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? UEAElement(ctx_) : it->second;
}

void TauPoly::set(int k, UEAElement c) {
    if (c.is_zero()) {
        coeffs_.erase(k);
    } else {
        coeffs_.insert_or_assign(k, std::move(c));
    }
}

TauPoly TauPoly::operator+(const TauPoly& rhs) const {
    TauPoly out = *this;
    if (!out.ctx_) out.ctx_ = rhs.ctx_;
    for (const auto& [k, c] : rhs.coeffs_) out.set(k, out.coefficient(k) + c);
    return out;
}

TauPoly TauPoly::operator-(const TauPoly& rhs) const { return *this + rhs.scaled(-1); }

TauPoly TauPoly::operator*(const TauPoly& rhs) const {
    // (a tau^k)(b tau^l) = sum_i C(k,i) a T^i(b) tau^{k-i+l}
    TauPoly out(ctx_ ? ctx_ : rhs.ctx_);
    for (const auto& [k, a] : coeffs_)
        for (const auto& [l, b] : rhs.coeffs_)
            for (int i = 0; i <= k; ++i) {
                UEAElement piece = (a * iterate_T(b, i)).scaled(binomial(k, i));
                if (!piece.is_zero()) out.set(k - i + l, out.coefficient(k - i + l) + piece);
            }
    return out;
}

TauPoly TauPoly::scaled(const Rational& c) const {
    TauPoly out(ctx_);
    if (mfq::is_zero(c)) return out;
    for (const auto& [k, a] : coeffs_) out.coeffs_.emplace(k, a.scaled(c));
    return out;
}

ULaurent ULaurent::constant(UEAElement c) { return monomial(std::move(c), 0); }

ULaurent ULaurent::monomial(UEAElement c, int m) {
    if (m < 0) throw domain_error("only nonpositive powers of u are allowed");
    ULaurent out(c.context());
    out.set(m, std::move(c));
    return out;
}

UEAElement ULaurent::coefficient(int m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? UEAElement(ctx_, true) : it->second;
}

void ULaurent::set(int m, UEAElement c) {
    if (c.is_zero()) {
        coeffs_.erase(m);
    } else {
        coeffs_.insert_or_assign(m, std::move(c));
    }
}

ULaurent ULaurent::operator+(const ULaurent& rhs) const {
    ULaurent out = *this;
    if (!out.ctx_) out.ctx_ = rhs.ctx_;
    for (const auto& [m, c] : rhs.coeffs_) out.set(m, out.coefficient(m) + c);
    return out;
}

ULaurent ULaurent::operator-(const ULaurent& rhs) const { return *this + rhs.scaled(-1); }

ULaurent ULaurent::operator*(const ULaurent& rhs) const {
    ULaurent out(ctx_ ? ctx_ : rhs.ctx_);
    for (const auto& [m, a] : coeffs_)
        for (const auto& [l, b] : rhs.coeffs_) {
            UEAElement piece = a * b;
            if (!piece.is_zero()) out.set(m + l, out.coefficient(m + l) + piece);
        }
    return out;
}

ULaurent ULaurent::scaled(const Rational& c) const {
    ULaurent out(ctx_);
    if (mfq::is_zero(c)) return out;
    for (const auto& [m, a] : coeffs_) out.coeffs_.emplace(m, a.scaled(c));
    return out;
}

ULaurent ULaurent::du() const {
    ULaurent out(ctx_);
    for (const auto& [m, a] : coeffs_)
        if (m > 0) out.set(m + 1, a.scaled(-m));
    return out;
}

std::string ULaurent::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, a] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.to_string() << ")";
        if (m > 0) os << "u^{-" << m << "}";
    }
    return os.str();
}

DuPoly DuPoly::constant(ULaurent c) {
    DuPoly out(c.context());
    out.set(0, std::move(c));
    return out;
}

DuPoly DuPoly::du(LiePtr ctx) {
    DuPoly out(ctx);
    out.set(1, ULaurent::constant(UEAElement::identity(ctx, true)));
    return out;
}

ULaurent DuPoly::coefficient(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? ULaurent(ctx_) : it->second;
}

void DuPoly::set(int k, ULaurent c) {
    if (c.is_zero()) {
        coeffs_.erase(k);
    } else {
        coeffs_.insert_or_assign(k, std::move(c));
    }
}

DuPoly DuPoly::operator+(const DuPoly& rhs) const {
    DuPoly out = *this;
    if (!out.ctx_) out.ctx_ = rhs.ctx_;
    for (const auto& [k, c] : rhs.coeffs_) out.set(k, out.coefficient(k) + c);
    return out;
}

DuPoly DuPoly::operator-(const DuPoly& rhs) const { return *this + rhs.scaled(-1); }

DuPoly DuPoly::operator*(const DuPoly& rhs) const {
    // (a d^k)(b d^l) = sum_i C(k,i) a b^{(i)} d^{k-i+l}
    DuPoly out(ctx_ ? ctx_ : rhs.ctx_);
    for (const auto& [k, a] : coeffs_)
        for (const auto& [l, b] : rhs.coeffs_) {
            ULaurent deriv = b;
            for (int i = 0; i <= k; ++i) {
                ULaurent piece = (a * deriv).scaled(binomial(k, i));
                if (!piece.is_zero()) out.set(k - i + l, out.coefficient(k - i + l) + piece);
                deriv = deriv.du();
            }
        }
    return out;
}

DuPoly DuPoly::scaled(const Rational& c) const {
    DuPoly out(ctx_);
    if (mfq::is_zero(c)) return out;
    for (const auto& [k, a] : coeffs_) out.coeffs_.emplace(k, a.scaled(c));
    return out;
}

int QContext::ge_index(int i, int j) const {
    if (j < 1 || j > n - 1) throw domain_error("column index outside the centralizer grid");
    if (i >= 1 && i <= n - 2) return (i - 1) * (n - 1) + (j - 1);
    if (i == n) return (n - 2) * (n - 1) + (j - 1);
    throw domain_error("row index outside the centralizer grid");
}

QContext make_qcontext(int n) {
    QContext ctx;
    ctx.n = n;
    ctx.gl = build_gl(n);
    ctx.ge = minimal_nilpotent_centralizer(ctx.gl);
    ctx.grading = good_grading_minimal(ctx.gl);
    ctx.level = kappa_ec_form(ctx.ge, ctx.grading);
    return ctx;
}

NCMatrix<TauPoly> build_Z(const QContext& ctx) {
    const int n = ctx.n;
    std::vector<int> rows;
    for (int i = 1; i <= n - 2; ++i) rows.push_back(i);
    rows.push_back(n);

    NCMatrix<TauPoly> z;
    z.entry.resize(n - 1);
    for (int r = 0; r < n - 1; ++r) {
        z.entry[r].reserve(n - 1);
        for (int c = 0; c < n - 1; ++c) {
            const int i = rows[r], j = c + 1;
            TauPoly e = TauPoly::constant(
                UEAElement::generator(LoopGen{ctx.ge_index(i, j), 1}, ctx.ge.sub));
            if (i == j) e += TauPoly::tau(ctx.ge.sub);
            z.entry[r].push_back(std::move(e));
        }
    }
    return z;
}

std::vector<UEAElement> extract_Q(const QContext& ctx) {
    TauPoly d = cdet(build_Z(ctx));
    std::vector<UEAElement> q;
    for (int i = 1; i <= ctx.n - 1; ++i) {
        UEAElement qi = d.coefficient(ctx.n - 1 - i);
        if (!(qi.is_weight_homogeneous() && (qi.is_zero() || qi.weight() == i)))
            throw invariance_violation("Q_i fails weight homogeneity");
        q.push_back(std::move(qi));
    }
    return q;
}

namespace {

ULaurent phi_chi_letter(const LoopGen& g, const Functional& chi) {
    const LiePtr& q = chi.algebra;
    ULaurent out = ULaurent::monomial(UEAElement::generator(LoopGen{g.gen, 1}, q, true), g.depth);
    if (g.depth == 1 && !is_zero(chi.values[g.gen]))
        out += ULaurent::constant(UEAElement::scalar(chi.values[g.gen], q, true));
    return out;
}

}  // namespace

ULaurent phi_chi(const UEAElement& a, const Functional& chi) {
    const LiePtr& q = chi.algebra;
    ULaurent out(q);
    for (const auto& [w, c] : a.terms()) {
        ULaurent prod = ULaurent::constant(UEAElement::scalar(c, q, true));
        for (const auto& g : w) prod = prod * phi_chi_letter(g, chi);
        out += prod;
    }
    return out;
}

UEAElement phi_chi_coeff(const UEAElement& a, const Functional& chi, int n) {
    return phi_chi(a, chi).coefficient(n);
}

std::map<int, Poly> phibar_chi(const Poly& p, const Functional& chi) {
    const LiePtr& q = chi.algebra;
    std::map<int, Poly> out;
    for (const auto& [mono, c] : p.terms()) {
        std::map<int, Poly> prod{{0, Poly::constant(c, q)}};
        for (const auto& [v, e] : mono)
            for (int rep = 0; rep < e; ++rep) {
                std::map<int, Poly> next;
                for (const auto& [m, f] : prod) {
                    Poly& xpart = next[m + v.depth];
                    xpart += f * Poly::variable(VarId{v.gen, 1}, q);
                    if (v.depth == 1 && !is_zero(chi.values[v.gen]))
                        next[m] += f.scaled(chi.values[v.gen]);
                }
                prod = std::move(next);
            }
        for (const auto& [m, f] : prod) out[m] += f;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Poly phibar_chi_coeff(const Poly& p, const Functional& chi, int n) {
    auto all = phibar_chi(p, chi);
    auto it = all.find(n);
    return it == all.end() ? Poly(chi.algebra) : it->second;
}

NCMatrix<DuPoly> build_A(const QContext& ctx, const Functional& chi) {
    NCMatrix<TauPoly> z = build_Z(ctx);
    NCMatrix<DuPoly> a;
    a.entry.resize(z.size());
    for (int r = 0; r < z.size(); ++r)
        for (int c = 0; c < z.size(); ++c) {
            DuPoly image(ctx.ge.sub);
            for (const auto& [k, coeff] : z.entry[r][c].coefficients()) {
                DuPoly piece = DuPoly::constant(phi_chi(coeff, chi));
                for (int rep = 0; rep < k; ++rep)
                    piece = piece * DuPoly::du(ctx.ge.sub).scaled(-1);
                image += piece;
            }
            a.entry[r].push_back(std::move(image));
        }
    return a;
}

AFamily extract_A(const QContext& ctx, const Functional& chi) {
    DuPoly d = cdet(build_A(ctx, chi));
    AFamily fam;
    for (int i = 1; i <= ctx.n - 1; ++i) {
        const int k = ctx.n - 1 - i;
        // cdet(A) = sum_i A_i (-d_u)^k, so A_i is (-1)^k times the d_u^k part.
        ULaurent ai = d.coefficient(k);
        if (k % 2 == 1) ai = ai.scaled(-1);
        std::vector<UEAElement> row;
        for (int j = 0; j <= i; ++j) row.push_back(ai.coefficient(i - j));
        fam.a.push_back(std::move(ai));
        fam.table.push_back(std::move(row));
    }
    return fam;
}

QuantizedAlgebra quantized_algebra(const QContext& ctx, const Functional& chi,
                                   bool allow_singular) {
    if (!allow_singular && !chi_regular(chi, ctx.ge.sub, ctx.n))
        throw regularity_error("chi is not regular; pass allow_singular to override");

    QuantizedAlgebra alg;
    alg.generators.push_back(
        UEAElement::generator(LoopGen{ctx.identity_index(), 1}, ctx.ge.sub, true));
    alg.provenance.emplace_back(0, -1);
    AFamily fam = extract_A(ctx, chi);
    for (int i = 1; i <= ctx.n - 1; ++i)
        for (int j = 0; j <= i - 1; ++j) {
            alg.generators.push_back(fam.table[i - 1][j]);
            alg.provenance.emplace_back(i, j);
        }
    for (size_t a = 0; a < alg.generators.size(); ++a)
        for (size_t b = a + 1; b < alg.generators.size(); ++b)
            if (!uea_commutator(alg.generators[a], alg.generators[b]).is_zero())
                throw invariance_violation("quantized generators fail to commute");
    return alg;
}

namespace {

/// Commutative image of the words of length exactly `len`.
Poly length_symbol(const UEAElement& a, int len) {
    Poly out(a.context());
    for (const auto& [w, c] : a.terms())
        if (static_cast<int>(w.size()) == len) {
            Monomial m;
            for (const auto& g : w) m[g] += 1;
            out.add_term(m, c);
        }
    return out;
}

/// All products of homogeneous family members with total degree d, via
/// depth-first search over nondecreasing member indices.
std::vector<Poly> degree_products(const std::vector<Poly>& family, int d) {
    std::vector<Poly> out;
    std::function<void(size_t, const Poly&, int)> rec = [&](size_t from, const Poly& acc,
                                                           int deg) {
        if (deg == d) {
            out.push_back(acc);
            return;
        }
        for (size_t i = from; i < family.size(); ++i) {
            int fd = family[i].degree();
            if (fd <= 0 || deg + fd > d) continue;
            rec(i, acc * family[i], deg + fd);
        }
    };
    LiePtr ctx = family.empty() ? LiePtr{} : family[0].context();
    rec(0, Poly::constant(1, ctx), 0);
    return out;
}

}  // namespace

bool gr_consistency(const QContext& ctx, const Functional& chi, const MFAlgebra& mf) {
    std::vector<UEAElement> q = extract_Q(ctx);
    AFamily fam = extract_A(ctx, chi);

    std::vector<Poly> qsymbols;
    for (int i = 1; i <= ctx.n - 1; ++i) {
        Poly sigma = q[i - 1].canonical_symbol();
        for (int j = 0; j <= i; ++j) {
            const UEAElement& aij = fam.table[i - 1][j];
            if (aij.max_word_length() > i - j) return false;
            if (length_symbol(aij, i - j) != phibar_chi_coeff(sigma, chi, i - j)) return false;
        }
        qsymbols.push_back(std::move(sigma));
    }

    std::vector<Poly> quant;
    quant.push_back(Poly::variable(VarId{ctx.identity_index(), 1}, ctx.ge.sub));
    for (int i = 1; i <= ctx.n - 1; ++i)
        for (int j = 0; j <= i - 1; ++j) {
            Poly s = length_symbol(fam.table[i - 1][j], i - j);
            if (!s.is_zero()) quant.push_back(std::move(s));
        }
    std::vector<Poly> classical;
    for (const Poly& g : mf.generators)
        if (!g.is_zero()) classical.push_back(g);

    for (int d = 1; d <= ctx.n - 1; ++d) {
        std::vector<Poly> lp = degree_products(quant, d);
        std::vector<Poly> rp = degree_products(classical, d);
        std::set<Monomial> monos;
        for (const Poly& f : lp)
            for (const auto& m : f.monomials()) monos.insert(m);
        for (const Poly& f : rp)
            for (const auto& m : f.monomials()) monos.insert(m);
        std::vector<Monomial> basis(monos.begin(), monos.end());

        std::vector<QVector> lhs, rhs, both;
        for (const Poly& f : lp) lhs.push_back(f.coefficients_on(basis));
        for (const Poly& f : rp) rhs.push_back(f.coefficients_on(basis));
        both = lhs;
        both.insert(both.end(), rhs.begin(), rhs.end());
        int r = span_rank(both);
        if (span_rank(lhs) != r || span_rank(rhs) != r) return false;
    }
    return true;
}

}  // namespace mfq
