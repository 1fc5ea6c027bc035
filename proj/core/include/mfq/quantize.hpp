#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/liealg.hpp"
#include "mfq/loopv.hpp"
#include "mfq/mfshift.hpp"
#include "mfq/poly.hpp"

namespace mfq {

/// Polynomial in tau with loop-algebra coefficients collected on the left:
/// sum of c_k tau^k. Multiplication pushes tau to the right through the
/// coefficients with [tau, x_{(-m)}] = m x_{(-m-1)}, that is tau b = b tau
/// + T(b).
class TauPoly {
public:
    TauPoly() = default;
    explicit TauPoly(LiePtr ctx) : ctx_(std::move(ctx)) {}

    static TauPoly constant(UEAElement c);
    static TauPoly tau(LiePtr ctx);

    const LiePtr& context() const { return ctx_; }
    const std::map<int, UEAElement>& coefficients() const { return coeffs_; }
    UEAElement coefficient(int k) const;
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    TauPoly operator+(const TauPoly& rhs) const;
    TauPoly operator-(const TauPoly& rhs) const;
    TauPoly operator*(const TauPoly& rhs) const;
    TauPoly scaled(const Rational& c) const;
    TauPoly& operator+=(const TauPoly& rhs) { return *this = *this + rhs; }

private:
    void set(int k, UEAElement c);

    LiePtr ctx_;
    std::map<int, UEAElement> coeffs_;
};

/// Element of U(g^e) tensored with nonpositive Laurent powers of u:
/// sum over m >= 0 of c_m u^{-m}, each c_m flat (depth-1 letters).
class ULaurent {
public:
    ULaurent() = default;
    explicit ULaurent(LiePtr ctx) : ctx_(std::move(ctx)) {}

    static ULaurent constant(UEAElement c);
    /// c * u^{-m}, m >= 0.
    static ULaurent monomial(UEAElement c, int m);

    const LiePtr& context() const { return ctx_; }
    const std::map<int, UEAElement>& coefficients() const { return coeffs_; }
    UEAElement coefficient(int m) const;
    bool is_zero() const { return coeffs_.empty(); }

    ULaurent operator+(const ULaurent& rhs) const;
    ULaurent operator-(const ULaurent& rhs) const;
    ULaurent operator*(const ULaurent& rhs) const;
    ULaurent scaled(const Rational& c) const;
    ULaurent& operator+=(const ULaurent& rhs) { return *this = *this + rhs; }
    bool operator==(const ULaurent& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// d/du applied to the u-powers: u^{-m} goes to -m u^{-m-1}.
    ULaurent du() const;

    std::string to_string() const;

private:
    void set(int m, UEAElement c);

    LiePtr ctx_;
    std::map<int, UEAElement> coeffs_;
};

/// Polynomial in d_u with ULaurent coefficients collected on the left:
/// sum of c_k d_u^k. Multiplication uses [d_u, u^{-m}] = -m u^{-m-1} and
/// d_u commutes with U(g^e).
class DuPoly {
public:
    DuPoly() = default;
    explicit DuPoly(LiePtr ctx) : ctx_(std::move(ctx)) {}

    static DuPoly constant(ULaurent c);
    static DuPoly du(LiePtr ctx);

    const LiePtr& context() const { return ctx_; }
    const std::map<int, ULaurent>& coefficients() const { return coeffs_; }
    ULaurent coefficient(int k) const;
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    DuPoly operator+(const DuPoly& rhs) const;
    DuPoly operator-(const DuPoly& rhs) const;
    DuPoly operator*(const DuPoly& rhs) const;
    DuPoly scaled(const Rational& c) const;
    DuPoly& operator+=(const DuPoly& rhs) { return *this = *this + rhs; }

private:
    void set(int k, ULaurent c);

    LiePtr ctx_;
    std::map<int, ULaurent> coeffs_;
};

/// Square matrix over a noncommutative entry ring.
template <class Ring>
struct NCMatrix {
    std::vector<std::vector<Ring>> entry;

    int size() const { return static_cast<int>(entry.size()); }
};

/// Column determinant: sum over permutations of sgn(s) a_{s(1)1} ... a_{s(n)n}
/// with the product taken left to right in column order. Guarded at n <= 6.
template <class Ring>
Ring cdet(const NCMatrix<Ring>& m) {
    const int n = m.size();
    if (n == 0) throw domain_error("cdet of an empty matrix");
    if (n > 6) throw size_limit_error("cdet guard: matrices larger than 6 x 6");
    for (const auto& row : m.entry)
        if (static_cast<int>(row.size()) != n) throw domain_error("cdet needs a square matrix");

    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    Ring out{};
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rows[i] > rows[j]) ++inversions;
        Ring prod = m.entry[rows[0]][0];
        for (int col = 1; col < n; ++col) prod = prod * m.entry[rows[col]][col];
        out += (inversions % 2 == 0) ? prod : prod.scaled(-1);
    } while (std::next_permutation(rows.begin(), rows.end()));
    return out;
}

/// Shared scaffolding for the constructions at a fixed n: gl_n, the
/// centralizer of e = e_{n,n-1}, the good grading and the level form.
struct QContext {
    int n = 0;
    LiePtr gl;
    Subalgebra ge;
    Grading grading;
    BilinearForm level;

    /// g^e basis index of e_{ij} (rows i <= n-2 or i = n, columns j <= n-1).
    int ge_index(int i, int j) const;
    int identity_index() const { return ge.sub->dim() - 1; }
};

QContext make_qcontext(int n);

/// The (n-1) x (n-1) matrix obtained from tau + E_{(-1)} by removing row
/// n-1 and column n; entries live in the loop algebra of g^e plus C tau.
NCMatrix<TauPoly> build_Z(const QContext& ctx);

/// Coefficients of cdet(build_Z): cdet(Z) = Q_1 tau^{n-2} + ... + Q_{n-1};
/// Q_i is weight-homogeneous of weight i. Returned as Q_1 .. Q_{n-1}.
std::vector<UEAElement> extract_Q(const QContext& ctx);

/// The shift homomorphism on U(q-hat_-): x_{(-m)} goes to u^{-m}x +
/// delta_{m,1} chi(x), extended word by word over the PBW normal form.
ULaurent phi_chi(const UEAElement& a, const Functional& chi);

/// Coefficient of u^{-n} in phi_chi(a); an element of U(g^e).
UEAElement phi_chi_coeff(const UEAElement& a, const Functional& chi, int n);

/// Commutative analogue on S(q-hat_-): x_{(-m)} goes to u^{-m}x +
/// delta_{m,1} chi(x) with commuting images. Keys are the u^{-m} powers.
std::map<int, Poly> phibar_chi(const Poly& p, const Functional& chi);
Poly phibar_chi_coeff(const Poly& p, const Functional& chi, int n);

/// Entrywise image of build_Z under x_{(-1)} -> u^{-1}x + chi(x), tau -> -d_u.
NCMatrix<DuPoly> build_A(const QContext& ctx, const Functional& chi);

struct AFamily {
    /// A_i = a[i-1]; cdet(A) = A_1 (-d_u)^{n-2} + ... + A_{n-1}.
    std::vector<ULaurent> a;
    /// table[i-1][j] = A_i^{(j)}, the coefficient of u^{-(i-j)} in A_i,
    /// j = 0 .. i.
    std::vector<std::vector<UEAElement>> table;
};

AFamily extract_A(const QContext& ctx, const Functional& chi);

struct QuantizedAlgebra {
    /// I followed by A_i^{(j)} for 1 <= i <= n-1, 0 <= j <= i-1.
    std::vector<UEAElement> generators;
    /// (0, -1) for I, else (i, j).
    std::vector<std::pair<int, int>> provenance;
};

/// Generators of A_{e,chi} in U(g^e) with every pairwise commutator
/// verified zero in PBW normal form. Requires chi regular unless overridden.
QuantizedAlgebra quantized_algebra(const QContext& ctx, const Functional& chi,
                                   bool allow_singular = false);

/// (a) the top symbol of each A_i^{(j)} equals the commutative shift image
/// of the symbol of Q_i, and (b) the quantized-generator symbols and the
/// classical shift generators span the same degreewise subspaces up to
/// degree n-1.
bool gr_consistency(const QContext& ctx, const Functional& chi, const MFAlgebra& mf);

}  // namespace mfq
