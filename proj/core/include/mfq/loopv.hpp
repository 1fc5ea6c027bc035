#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mfq/liealg.hpp"
#include "mfq/poly.hpp"

namespace mfq {

/// The loop generator x_{(-depth)} = x t^{-depth}; shares the depth-major
/// ordering with commutative variables.
using LoopGen = VarId;

/// PBW-ordered word; letters are nondecreasing.
using Word = std::vector<LoopGen>;

int word_weight(const Word& w);

/// Element of U(q-hat_-) = the vacuum module V^kappa(q); sparse rational
/// combination of PBW-ordered words. The empty word is the vacuum vector.
class UEAElement {
public:
    UEAElement() = default;
    explicit UEAElement(LiePtr ctx, bool flat = false) : ctx_(std::move(ctx)), flat_(flat) {}

    static UEAElement identity(LiePtr ctx, bool flat = false);
    static UEAElement generator(LoopGen g, LiePtr ctx, bool flat = false);
    static UEAElement scalar(const Rational& c, LiePtr ctx, bool flat = false);

    const LiePtr& context() const { return ctx_; }
    /// Flat elements live in U(q) itself: every letter has depth 1 and the
    /// PBW rewriting keeps brackets at depth 1. Non-flat elements live in
    /// U(q-hat_-), where the bracket adds depths.
    bool is_flat() const { return flat_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UEAElement operator+(const UEAElement& rhs) const;
    UEAElement operator-(const UEAElement& rhs) const;
    UEAElement operator*(const UEAElement& rhs) const;
    UEAElement scaled(const Rational& c) const;
    UEAElement& operator+=(const UEAElement& rhs) { return *this = *this + rhs; }
    UEAElement& operator-=(const UEAElement& rhs) { return *this = *this - rhs; }
    bool operator==(const UEAElement& rhs) const { return terms_ == rhs.terms_; }

    /// Adds coeff * (PBW normal form of the possibly unordered word).
    void add_word(const Word& w, const Rational& coeff);

    /// Max over terms of the depth sum; -1 for zero.
    int weight() const;
    bool is_weight_homogeneous() const;
    UEAElement weight_component(int w) const;
    int max_word_length() const;

    /// Commutative image of the maximal-length words of each weight
    /// component (the Li-filtration symbol in S(q-hat_-)).
    Poly li_symbol() const;
    /// Commutative image of the maximal-length words of the whole element
    /// (the symbol for the canonical filtration of U(q)).
    Poly canonical_symbol() const;

    std::string to_string() const;

private:
    friend UEAElement pbw_normal_form(const Word& w, const Rational& coeff, const LiePtr& ctx,
                                      bool flat);
    void check_context(const UEAElement& rhs) const;

    LiePtr ctx_;
    bool flat_ = false;
    std::map<Word, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const UEAElement& a);

/// PBW normal form of a single (possibly unordered) word.
UEAElement pbw_normal_form(const Word& w, const Rational& coeff, const LiePtr& ctx,
                           bool flat = false);

/// Commutator ab - ba in PBW normal form.
UEAElement uea_commutator(const UEAElement& a, const UEAElement& b);

/// A vacuum module context: the Lie algebra with the level form kappa.
struct Vacuum {
    LiePtr q;
    BilinearForm level;
};

/// Action of x t^n (n >= 0) on a vector of V^kappa(q); strictly lowers
/// weight by n.
UEAElement vacuum_action(const Vacuum& vac, int x, int n, const UEAElement& v);

/// True iff every x t^n with n >= 0 annihilates v. Only n <= weight(v) can
/// act nonzero, so the scan is finite and complete.
bool is_center_vacuum(const Vacuum& vac, const UEAElement& v);

/// Translation operator: derivation with T x_{(-m)} = m x_{(-m-1)}.
UEAElement translation_T(const UEAElement& a);
Poly translation_T(const Poly& p);

/// Action of x t^n on S(q-hat_-) through the identification with functions
/// on the jet space: derivation with x t^n . y_{(-m)} = [x,y]_{(n-m)} when
/// n - m <= -1 and 0 otherwise.
Poly classical_action(const LiePtr& q, int x, int n, const Poly& p);

/// True iff classical_action annihilates p for every basis x and n >= 0.
bool is_classical_invariant(const LiePtr& q, const Poly& p);

}  // namespace mfq
