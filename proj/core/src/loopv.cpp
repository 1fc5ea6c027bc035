#include "mfq/loopv.hpp"

#include <algorithm>
#include <sstream>

#include "mfq/errors.hpp"

namespace mfq {

int word_weight(const Word& w) {
    int s = 0;
    for (const auto& g : w) s += g.depth;
    return s;
}

UEAElement UEAElement::identity(LiePtr ctx, bool flat) {
    UEAElement a(std::move(ctx), flat);
    a.terms_.emplace(Word{}, 1);
    return a;
}

UEAElement UEAElement::generator(LoopGen g, LiePtr ctx, bool flat) {
    if (flat && g.depth != 1) throw wrong_ring("flat elements carry depth-1 letters only");
    UEAElement a(std::move(ctx), flat);
    a.terms_.emplace(Word{g}, 1);
    return a;
}

UEAElement UEAElement::scalar(const Rational& c, LiePtr ctx, bool flat) {
    UEAElement a(std::move(ctx), flat);
    if (!mfq::is_zero(c)) a.terms_.emplace(Word{}, c);
    return a;
}

void UEAElement::check_context(const UEAElement& rhs) const {
    if (flat_ != rhs.flat_ && !is_zero() && !rhs.is_zero())
        throw wrong_ring("cannot mix flat and loop enveloping-algebra elements");
    if (!ctx_ || !rhs.ctx_) return;
    if (ctx_.get() == rhs.ctx_.get() || ctx_->same_as(*rhs.ctx_)) return;
    throw context_mismatch("enveloping-algebra elements over different algebras");
}

void UEAElement::add_word(const Word& w, const Rational& coeff) {
    if (mfq::is_zero(coeff)) return;
    if (std::is_sorted(w.begin(), w.end())) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, coeff);
        } else {
            it->second += coeff;
            if (mfq::is_zero(it->second)) terms_.erase(it);
        }
        return;
    }
    *this += pbw_normal_form(w, coeff, ctx_, flat_);
}

UEAElement UEAElement::operator+(const UEAElement& rhs) const {
    check_context(rhs);
    UEAElement out = *this;
    if (!out.ctx_) out.ctx_ = rhs.ctx_;
    if (out.is_zero()) out.flat_ = rhs.flat_;
    for (const auto& [w, c] : rhs.terms_) {
        auto it = out.terms_.find(w);
        if (it == out.terms_.end()) {
            out.terms_.emplace(w, c);
        } else {
            it->second += c;
            if (mfq::is_zero(it->second)) out.terms_.erase(it);
        }
    }
    return out;
}

UEAElement UEAElement::operator-(const UEAElement& rhs) const { return *this + rhs.scaled(-1); }

UEAElement UEAElement::operator*(const UEAElement& rhs) const {
    check_context(rhs);
    UEAElement out(ctx_ ? ctx_ : rhs.ctx_, is_zero() ? rhs.flat_ : flat_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : rhs.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_word(w, ca * cb);
        }
    return out;
}

UEAElement UEAElement::scaled(const Rational& c) const {
    UEAElement out(ctx_, flat_);
    if (mfq::is_zero(c)) return out;
    for (const auto& [w, cc] : terms_) out.terms_.emplace(w, cc * c);
    return out;
}

int UEAElement::weight() const {
    int best = -1;
    for (const auto& [w, c] : terms_) best = std::max(best, word_weight(w));
    return best;
}

bool UEAElement::is_weight_homogeneous() const {
    int w0 = -2;
    for (const auto& [w, c] : terms_) {
        int ww = word_weight(w);
        if (w0 == -2) w0 = ww;
        if (ww != w0) return false;
    }
    return true;
}

UEAElement UEAElement::weight_component(int w) const {
    UEAElement out(ctx_, flat_);
    for (const auto& [word, c] : terms_)
        if (word_weight(word) == w) out.terms_.emplace(word, c);
    return out;
}

int UEAElement::max_word_length() const {
    int best = 0;
    for (const auto& [w, c] : terms_) best = std::max(best, static_cast<int>(w.size()));
    return best;
}

namespace {

Poly word_to_monomial(const Word& w, const Rational& c, const LiePtr& ctx) {
    Monomial m;
    for (const auto& g : w) m[g] += 1;
    return Poly::term(c, m, ctx);
}

}  // namespace

Poly UEAElement::li_symbol() const {
    Poly out(ctx_);
    std::map<int, size_t> maxlen;
    for (const auto& [w, c] : terms_) {
        auto& best = maxlen[word_weight(w)];
        best = std::max(best, w.size());
    }
    for (const auto& [w, c] : terms_)
        if (w.size() == maxlen[word_weight(w)]) out += word_to_monomial(w, c, ctx_);
    return out;
}

Poly UEAElement::canonical_symbol() const {
    Poly out(ctx_);
    size_t top = 0;
    for (const auto& [w, c] : terms_) top = std::max(top, w.size());
    for (const auto& [w, c] : terms_)
        if (w.size() == top) out += word_to_monomial(w, c, ctx_);
    return out;
}

std::string UEAElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || w.empty()) os << a.get_str();
        if (w.empty() && a == 1) os << "1";
        for (const auto& g : w) {
            std::string label =
                ctx_ && g.gen < ctx_->dim() ? ctx_->labels()[g.gen] : "x" + std::to_string(g.gen);
            os << "(" << label << ")_{(-" << g.depth << ")}";
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UEAElement& a) { return os << a.to_string(); }

UEAElement pbw_normal_form(const Word& w, const Rational& coeff, const LiePtr& ctx, bool flat) {
    UEAElement out(ctx, flat);
    if (mfq::is_zero(coeff)) return out;
    // Worklist of (word, coeff); each swap either sorts further or shortens,
    // so the rewriting terminates.
    std::vector<std::pair<Word, Rational>> work{{w, coeff}};
    while (!work.empty()) {
        auto [word, c] = std::move(work.back());
        work.pop_back();
        auto it = std::adjacent_find(word.begin(), word.end(),
                                     [](const LoopGen& a, const LoopGen& b) { return b < a; });
        if (it == word.end()) {
            auto found = out.terms_.find(word);
            if (found == out.terms_.end()) {
                out.terms_.emplace(std::move(word), c);
            } else {
                found->second += c;
                if (mfq::is_zero(found->second)) out.terms_.erase(found);
            }
            continue;
        }
        size_t i = static_cast<size_t>(it - word.begin());
        LoopGen a = word[i], b = word[i + 1];
        Word swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), c);
        // [a_{(-m)}, b_{(-l)}] = [a,b]_{(-m-l)}; the central term of the
        // affine bracket vanishes on two negative modes. In the flat ring
        // U(q) the bracket stays at depth 1.
        for (const auto& [k, sc] : ctx->bracket_basis(a.gen, b.gen)) {
            Word shorter;
            shorter.reserve(word.size() - 1);
            shorter.insert(shorter.end(), word.begin(), word.begin() + i);
            shorter.push_back(LoopGen{k, flat ? 1 : a.depth + b.depth});
            shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
            work.emplace_back(std::move(shorter), c * sc);
        }
    }
    return out;
}

UEAElement uea_commutator(const UEAElement& a, const UEAElement& b) {
    return a * b - b * a;
}

namespace {

UEAElement vacuum_action_word(const Vacuum& vac, int x, int n, const Word& w) {
    const LiePtr& q = vac.q;
    UEAElement out(q);
    if (w.empty()) return out;  // annihilates the vacuum
    const LoopGen head = w.front();
    const Word rest(w.begin() + 1, w.end());
    UEAElement rest_elem(q);
    rest_elem.add_word(rest, 1);

    // central term: n kappa(x, head) delta_{n, depth}
    if (n == head.depth) {
        Rational kappa = vac.level.gram.at(x, head.gen);
        if (!is_zero(kappa)) out += rest_elem.scaled(Rational(n) * kappa);
    }
    // bracket term: [x, head] t^{n - depth}
    for (const auto& [k, c] : q->bracket_basis(x, head.gen)) {
        int mode = n - head.depth;
        if (mode >= 0) {
            out += vacuum_action_word(vac, k, mode, rest).scaled(c);
        } else {
            out += (UEAElement::generator(LoopGen{k, -mode}, q) * rest_elem).scaled(c);
        }
    }
    // commute past the head letter
    UEAElement tail = vacuum_action_word(vac, x, n, rest);
    if (!tail.is_zero()) out += UEAElement::generator(head, q) * tail;
    return out;
}

}  // namespace

UEAElement vacuum_action(const Vacuum& vac, int x, int n, const UEAElement& v) {
    if (n < 0) throw domain_error("vacuum_action is defined for n >= 0");
    UEAElement out(vac.q);
    for (const auto& [w, c] : v.terms()) out += vacuum_action_word(vac, x, n, w).scaled(c);
    return out;
}

bool is_center_vacuum(const Vacuum& vac, const UEAElement& v) {
    int wmax = v.weight();
    for (int x = 0; x < vac.q->dim(); ++x)
        for (int n = 0; n <= wmax; ++n)
            if (!vacuum_action(vac, x, n, v).is_zero()) return false;
    return true;
}

UEAElement translation_T(const UEAElement& a) {
    UEAElement out(a.context());
    for (const auto& [w, c] : a.terms())
        for (size_t i = 0; i < w.size(); ++i) {
            Word t = w;
            int m = t[i].depth;
            t[i].depth = m + 1;
            out.add_word(t, c * m);
        }
    return out;
}

Poly translation_T(const Poly& p) {
    Poly out(p.context());
    for (VarId v : variables_of({p}))
        out += p.partial_derivative(v) *
               Poly::variable(VarId{v.gen, v.depth + 1}, p.context()).scaled(v.depth);
    return out;
}

Poly classical_action(const LiePtr& q, int x, int n, const Poly& p) {
    Poly out(p.context());
    for (VarId v : variables_of({p})) {
        int mode = n - v.depth;
        if (mode > -1) continue;
        Poly image(p.context());
        for (const auto& [k, c] : q->bracket_basis(x, v.gen))
            image.add_term({{VarId{k, -mode}, 1}}, c);
        if (image.is_zero()) continue;
        out += p.partial_derivative(v) * image;
    }
    return out;
}

bool is_classical_invariant(const LiePtr& q, const Poly& p) {
    int wmax = 0;
    for (const auto& [m, c] : p.terms()) wmax = std::max(wmax, monomial_weight(m));
    for (int x = 0; x < q->dim(); ++x)
        for (int n = 0; n <= wmax; ++n)
            if (!classical_action(q, x, n, p).is_zero()) return false;
    return true;
}

}  // namespace mfq
