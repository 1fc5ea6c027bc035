#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfq/qmatrix.hpp"
#include "mfq/rational.hpp"

namespace mfq {

class LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;
using SparseVec = std::vector<std::pair<int, Rational>>;

struct LieElement {
    LiePtr algebra;
    QVector coeffs;

    LieElement operator+(const LieElement& rhs) const;
    LieElement operator-(const LieElement& rhs) const;
    LieElement scaled(const Rational& c) const;
    bool is_zero() const;
    bool operator==(const LieElement& rhs) const { return coeffs == rhs.coeffs; }
};

/// Finite-dimensional Lie algebra over Q given by labeled basis and sparse
/// structure constants. Antisymmetry and the Jacobi identity are checked
/// exhaustively on basis pairs/triples at construction.
class LieAlgebra {
public:
    static LiePtr create(std::vector<std::string> labels,
                         std::vector<std::vector<SparseVec>> table);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVec& bracket_basis(int i, int j) const { return table_[i][j]; }
    QVector bracket(const QVector& x, const QVector& y) const;
    LieElement bracket(const LieElement& x, const LieElement& y) const;
    LieElement basis_element(int i) const;
    LieElement zero() const;
    QMatrix ad_matrix(const QVector& x) const;

    /// Set for algebras built by build_gl: the matrix size n with basis
    /// e_{ij} at index (i-1)*n + (j-1).
    std::optional<int> gl_rank() const { return gl_rank_; }
    int gl_index(int i, int j) const;  // 1-based matrix positions

    bool same_as(const LieAlgebra& other) const;

private:
    LieAlgebra() = default;
    friend LiePtr build_gl(int n);
    LiePtr shared_from_this_() const { return self_.lock(); }

    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVec>> table_;
    std::optional<int> gl_rank_;
    std::weak_ptr<const LieAlgebra> self_;
};

/// gl_n with basis e_{ij}, [e_ij, e_kl] = d_jk e_il - d_li e_kj.
LiePtr build_gl(int n);

struct Sl2Triple {
    LieElement e, h, f;
};

/// e = e_{n,n-1}, h = e_nn - e_{n-1,n-1}, f = e_{n-1,n}; relations verified.
Sl2Triple minimal_sl2_triple(const LiePtr& gl);

/// Integer grading on basis elements with bracket compatibility checked.
struct Grading {
    LiePtr algebra;
    std::vector<int> degree;

    /// Degree of an element; throws if not homogeneous (zero counts as any).
    std::optional<int> degree_of(const QVector& x) const;
};

/// deg e_{n,j} = 2, deg e_{i,n} = -2 (i,j < n), 0 elsewhere; e has degree 2.
Grading good_grading_minimal(const LiePtr& gl);

struct BilinearForm {
    LiePtr algebra;
    QMatrix gram;

    Rational eval(const QVector& x, const QVector& y) const;
    bool is_symmetric() const;
    /// kappa([x,y],z) + kappa(y,[x,z]) = 0 on all basis triples.
    bool is_invariant() const;
};

BilinearForm trace_form(const LiePtr& gl);
BilinearForm killing_form(const LiePtr& g);
/// kappa_c(x,y) = -1/2 tr_g(ad x ad y).
BilinearForm kappa_c_form(const LiePtr& g);

/// A subalgebra with its own structure constants plus the inclusion into the
/// ambient algebra (row k = coordinates of the k-th basis vector).
struct Subalgebra {
    LiePtr ambient;
    LiePtr sub;
    std::vector<QVector> inclusion;

    LieElement embed(const QVector& sub_coords) const;
    LieElement embed_basis(int k) const;
    /// Ambient element written in the subalgebra basis; empty if outside.
    std::optional<QVector> restrict(const QVector& ambient_coords) const;
};

/// Kernel of ad x with induced brackets; generic basis from exact elimination.
Subalgebra centralizer(const LiePtr& g, const LieElement& x);

/// Subalgebra spanned by the given ambient elements, in the given order.
Subalgebra subalgebra_from_basis(const LiePtr& g, const std::vector<QVector>& basis,
                                 std::vector<std::string> labels);

/// g^e for e = e_{n,n-1} with the basis listed as
/// e_{i,j} (i <= n-2, j <= n-1) row-major, then e_{n,j} (j <= n-1), then I.
Subalgebra minimal_nilpotent_centralizer(const LiePtr& gl);

/// kappa_{e,c} on the centralizer: -1/2 tr_{g_0}(ad x ad y) for x, y of
/// ambient degree 0, and 0 whenever either argument has degree 2.
BilinearForm kappa_ec_form(const Subalgebra& ge, const Grading& grading);

/// Minimum corank of chi([b_i, b_j]) over `trials` seeded rational samples;
/// an upper bound for the index, sharp for generic samples.
int index_estimate(const LiePtr& g, int trials, std::uint64_t seed);

}  // namespace mfq
