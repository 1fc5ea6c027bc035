#pragma once

#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "mfq/errors.hpp"
#include "mfq/qmatrix.hpp"
#include "mfq/rational.hpp"

namespace mfq {

class LieAlgebra;
using LiePtr = std::shared_ptr<const LieAlgebra>;

/// The commutative variable x t^{-depth} attached to basis element `gen`.
/// Ordered depth-major, then by generator index.
struct VarId {
    int gen = 0;
    int depth = 1;

    friend constexpr bool operator==(const VarId&, const VarId&) = default;
    friend constexpr auto operator<=>(const VarId& a, const VarId& b) {
        if (auto c = a.depth <=> b.depth; c != 0) return c;
        return a.gen <=> b.gen;
    }
};

/// Exponent multiset of a monomial, canonically sorted by VarId.
using Monomial = std::map<VarId, int>;

int monomial_degree(const Monomial& m);
int monomial_weight(const Monomial& m);

/// Sparse multivariate polynomial over exact rationals.
///
/// Houses S(g) and S(g^e) at depth 1 and S of the negative loop algebra at
/// depth >= 1. The optional context pins the Lie algebra whose basis the
/// variables index; binary operations refuse mixed contexts.
class Poly {
public:
    Poly() = default;
    explicit Poly(LiePtr ctx) : ctx_(std::move(ctx)) {}

    static Poly constant(const Rational& c, LiePtr ctx = {});
    static Poly variable(VarId v, LiePtr ctx = {});
    static Poly term(const Rational& c, const Monomial& m, LiePtr ctx = {});

    const LiePtr& context() const { return ctx_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator-() const;
    Poly operator*(const Poly& rhs) const;
    Poly scaled(const Rational& c) const;
    Poly pow(int k) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }

    /// Adds c * m, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    Poly partial_derivative(VarId v) const;
    Rational evaluate(const std::map<VarId, Rational>& point) const;
    Poly substitute(const std::function<Poly(VarId)>& image) const;

    /// Total exponent degree; -1 for the zero polynomial.
    int degree() const;
    int min_degree() const;
    /// Sum of depth-weighted degrees; -1 for zero.
    int weight() const;
    bool is_homogeneous() const;
    bool is_weight_homogeneous() const;
    Poly degree_component(int d) const;
    Poly weight_component(int w) const;
    Poly min_degree_component() const;

    int max_depth() const;
    /// Coefficient vector of the degree-1 part in basis order (context required).
    QVector linear_coefficients() const;
    /// Dense coefficient vector over the listed monomial basis.
    QVector coefficients_on(const std::vector<Monomial>& basis) const;
    std::vector<Monomial> monomials() const;

    std::string to_string(const std::vector<std::string>& labels = {}) const;

private:
    void check_context(const Poly& rhs) const;

    LiePtr ctx_;
    std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Rank of the Jacobian matrix of `fs` evaluated at `point`.
int jacobian_rank_at(const std::vector<Poly>& fs, const std::map<VarId, Rational>& point);

/// Shared collection of all variables appearing in a family.
std::vector<VarId> variables_of(const std::vector<Poly>& fs);

}  // namespace mfq
