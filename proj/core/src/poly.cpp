#include "mfq/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mfq/liealg.hpp"

namespace mfq {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

int monomial_weight(const Monomial& m) {
    int w = 0;
    for (const auto& [v, e] : m) w += v.depth * e;
    return w;
}

Poly Poly::constant(const Rational& c, LiePtr ctx) {
    Poly p(std::move(ctx));
    p.add_term({}, c);
    return p;
}

Poly Poly::variable(VarId v, LiePtr ctx) {
    Poly p(std::move(ctx));
    p.add_term({{v, 1}}, 1);
    return p;
}

Poly Poly::term(const Rational& c, const Monomial& m, LiePtr ctx) {
    Poly p(std::move(ctx));
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (mfq::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (mfq::is_zero(it->second)) terms_.erase(it);
    }
}

void Poly::check_context(const Poly& rhs) const {
    if (!ctx_ || !rhs.ctx_) return;
    if (ctx_.get() == rhs.ctx_.get()) return;
    if (!ctx_->same_as(*rhs.ctx_)) throw context_mismatch("polynomials over different algebras");
}

Poly Poly::operator+(const Poly& rhs) const {
    check_context(rhs);
    Poly out = *this;
    if (!out.ctx_) out.ctx_ = rhs.ctx_;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    check_context(rhs);
    Poly out = *this;
    if (!out.ctx_) out.ctx_ = rhs.ctx_;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::operator*(const Poly& rhs) const {
    check_context(rhs);
    Poly out(ctx_ ? ctx_ : rhs.ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            out.add_term(m, ca * cb);
        }
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    Poly out(ctx_);
    if (mfq::is_zero(c)) return out;
    for (const auto& [m, cc] : terms_) out.terms_.emplace(m, cc * c);
    return out;
}

Poly Poly::pow(int k) const {
    Poly out = Poly::constant(1, ctx_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

Poly Poly::partial_derivative(VarId v) const {
    Poly out(ctx_);
    for (const auto& [m, c] : terms_) {
        auto it = m.find(v);
        if (it == m.end()) continue;
        Monomial d = m;
        if (it->second == 1)
            d.erase(v);
        else
            d[v] = it->second - 1;
        out.add_term(d, c * it->second);
    }
    return out;
}

Rational Poly::evaluate(const std::map<VarId, Rational>& point) const {
    Rational out = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end())
                throw missing_assignment("no value assigned to a variable of the polynomial");
            for (int i = 0; i < e; ++i) t *= it->second;
        }
        out += t;
    }
    return out;
}

Poly Poly::substitute(const std::function<Poly(VarId)>& image) const {
    Poly out;
    bool any = false;
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(c);
        for (const auto& [v, e] : m) t = t * image(v).pow(e);
        out = any ? out + t : t;
        any = true;
    }
    return out;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

int Poly::min_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int md = monomial_degree(m);
        if (d < 0 || md < d) d = md;
    }
    return d;
}

int Poly::weight() const {
    int w = -1;
    for (const auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
    return w;
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || degree() == min_degree();
}

bool Poly::is_weight_homogeneous() const {
    int w = -2;
    for (const auto& [m, c] : terms_) {
        int mw = monomial_weight(m);
        if (w == -2) w = mw;
        if (mw != w) return false;
    }
    return true;
}

Poly Poly::degree_component(int d) const {
    Poly out(ctx_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) == d) out.terms_.emplace(m, c);
    return out;
}

Poly Poly::weight_component(int w) const {
    Poly out(ctx_);
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) == w) out.terms_.emplace(m, c);
    return out;
}

Poly Poly::min_degree_component() const {
    if (terms_.empty()) throw domain_error("min_degree_component of the zero polynomial");
    return degree_component(min_degree());
}

int Poly::max_depth() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) d = std::max(d, v.depth);
    return d;
}

QVector Poly::linear_coefficients() const {
    if (!ctx_) throw domain_error("linear_coefficients requires a context");
    QVector out(ctx_->dim(), 0);
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m) != 1) continue;
        const auto& [v, e] = *m.begin();
        if (v.depth != 1) throw wrong_ring("linear part has depth > 1 variables");
        out[v.gen] += c;
    }
    return out;
}

QVector Poly::coefficients_on(const std::vector<Monomial>& basis) const {
    QVector out(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = terms_.find(basis[i]);
        if (it != terms_.end()) out[i] = it->second;
    }
    return out;
}

std::vector<Monomial> Poly::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

std::string Poly::to_string(const std::vector<std::string>& labels_in) const {
    const std::vector<std::string>* labels = &labels_in;
    if (labels->empty() && ctx_) labels = &ctx_->labels();
    std::ostringstream os;
    if (terms_.empty()) return "0";
    bool first = true;
    for (const auto& [m, c] : terms_) {
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
        bool coeff_shown = false;
        if (a != 1 || m.empty()) {
            os << a.get_str();
            coeff_shown = true;
        }
        bool first_var = true;
        for (const auto& [v, e] : m) {
            if (!first_var || coeff_shown) os << "*";
            first_var = false;
            if (!labels->empty() && v.gen < static_cast<int>(labels->size()))
                os << (*labels)[v.gen];
            else
                os << "x" << v.gen;
            if (v.depth != 1) os << "@" << v.depth;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::vector<VarId> variables_of(const std::vector<Poly>& fs) {
    std::map<VarId, bool> seen;
    for (const auto& f : fs)
        for (const auto& [m, c] : f.terms())
            for (const auto& [v, e] : m) seen[v] = true;
    std::vector<VarId> out;
    for (const auto& [v, b] : seen) out.push_back(v);
    return out;
}

int jacobian_rank_at(const std::vector<Poly>& fs, const std::map<VarId, Rational>& point) {
    std::vector<VarId> vars = variables_of(fs);
    QMatrix jac(static_cast<int>(fs.size()), static_cast<int>(vars.size()));
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = 0; j < vars.size(); ++j)
            jac.at(static_cast<int>(i), static_cast<int>(j)) =
                fs[i].partial_derivative(vars[j]).evaluate(point);
    return jac.rank();
}

}  // namespace mfq
