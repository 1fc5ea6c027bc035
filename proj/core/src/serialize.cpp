#include "mfq/serialize.hpp"

#include <algorithm>

#include "mfq/errors.hpp"

namespace mfq {

int label_index(const LiePtr& ctx, const std::string& label) {
    const auto& labels = ctx->labels();
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw domain_error("unknown generator label: " + label);
    return static_cast<int>(it - labels.begin());
}

namespace {

std::string gen_label(const LiePtr& ctx, int gen) {
    if (ctx && gen >= 0 && gen < ctx->dim()) return ctx->labels()[gen];
    return "x" + std::to_string(gen);
}

}  // namespace

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) {
        json m = json::array();
        for (const auto& [v, e] : mono)
            m.push_back(json::array({gen_label(p.context(), v.gen), v.depth, e}));
        terms.push_back({{"coeff", to_string(c)}, {"monomial", m}});
    }
    return json{{"terms", terms}};
}

Poly poly_from_json(const json& j, const LiePtr& ctx) {
    Poly out(ctx);
    for (const auto& term : j.at("terms")) {
        Monomial m;
        for (const auto& factor : term.at("monomial")) {
            VarId v{label_index(ctx, factor.at(0).get<std::string>()), factor.at(1).get<int>()};
            m[v] += factor.at(2).get<int>();
        }
        out.add_term(m, rat_from_string(term.at("coeff").get<std::string>()));
    }
    return out;
}

json uea_to_json(const UEAElement& a) {
    json terms = json::array();
    for (const auto& [w, c] : a.terms()) {
        json word = json::array();
        for (const auto& g : w) word.push_back(json::array({gen_label(a.context(), g.gen), g.depth}));
        terms.push_back({{"coeff", to_string(c)}, {"word", word}});
    }
    return json{{"terms", terms}};
}

UEAElement uea_from_json(const json& j, const LiePtr& ctx, bool flat) {
    UEAElement out(ctx, flat);
    for (const auto& term : j.at("terms")) {
        Word w;
        for (const auto& letter : term.at("word"))
            w.push_back(LoopGen{label_index(ctx, letter.at(0).get<std::string>()),
                                letter.at(1).get<int>()});
        out.add_word(w, rat_from_string(term.at("coeff").get<std::string>()));
    }
    return out;
}

json functional_to_json(const Functional& chi) {
    json values = json::array();
    for (const auto& v : chi.values) values.push_back(to_string(v));
    return json{{"values", values}};
}

Functional functional_from_json(const json& j, const LiePtr& ctx) {
    Functional chi{ctx, {}};
    for (const auto& v : j.at("values")) chi.values.push_back(rat_from_string(v.get<std::string>()));
    if (static_cast<int>(chi.values.size()) != ctx->dim())
        throw domain_error("functional length does not match the algebra dimension");
    return chi;
}

}  // namespace mfq
