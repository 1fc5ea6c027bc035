#include <doctest.h>

#include <random>

#include "mfq/errors.hpp"
#include "mfq/quantize.hpp"
#include "mfq/serialize.hpp"

using namespace mfq;

TEST_CASE("polynomial json round trip") {
    std::mt19937_64 rng(61);
    LiePtr gl = build_gl(3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> gen(0, gl->dim() - 1);
    std::uniform_int_distribution<int> depth(1, 3);
    for (int t = 0; t < 50; ++t) {
        Poly p(gl);
        for (int k = 0; k < 4; ++k) {
            Monomial m;
            m[VarId{gen(rng), depth(rng)}] += 1;
            m[VarId{gen(rng), depth(rng)}] += 2;
            p.add_term(m, rat(coeff(rng), 1 + t % 3));
        }
        json j = poly_to_json(p);
        CHECK(poly_from_json(j, gl) == p);
        // serialized form is stable under a text round trip
        CHECK(json::parse(j.dump()) == j);
    }
}

TEST_CASE("enveloping algebra json round trip") {
    std::mt19937_64 rng(62);
    LiePtr gl = build_gl(3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> gen(0, gl->dim() - 1);
    std::uniform_int_distribution<int> depth(1, 2);
    for (int t = 0; t < 50; ++t) {
        UEAElement a(gl);
        for (int k = 0; k < 3; ++k)
            a.add_word({{gen(rng), depth(rng)}, {gen(rng), depth(rng)}}, coeff(rng));
        json j = uea_to_json(a);
        CHECK(uea_from_json(j, gl) == a);
    }
    // flat elements round trip with the flag supplied by the caller
    UEAElement flat = UEAElement::generator({2, 1}, gl, true) *
                      UEAElement::generator({1, 1}, gl, true);
    UEAElement back = uea_from_json(uea_to_json(flat), gl, true);
    CHECK(back == flat);
    CHECK(back.is_flat());
}

TEST_CASE("computed generators survive serialization") {
    QContext ctx = make_qcontext(3);
    std::vector<UEAElement> q = extract_Q(ctx);
    for (const UEAElement& qi : q)
        CHECK(uea_from_json(uea_to_json(qi), ctx.ge.sub) == qi);
}

TEST_CASE("functional json round trip") {
    LiePtr gl = build_gl(3);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    Functional chi = random_regular_chi(ge.sub, 3, 7);
    json j = functional_to_json(chi);
    Functional back = functional_from_json(j, ge.sub);
    CHECK(back.values == chi.values);
    // wrong length is rejected
    json bad = json{{"values", {"1", "2"}}};
    CHECK_THROWS_AS(functional_from_json(bad, ge.sub), domain_error);
}

TEST_CASE("label lookup") {
    LiePtr gl = build_gl(3);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    CHECK(label_index(ge.sub, "I") == ge.sub->dim() - 1);
    CHECK(label_index(ge.sub, "e_{3,2}") == 3);
    CHECK_THROWS_AS(label_index(ge.sub, "nope"), domain_error);
}
