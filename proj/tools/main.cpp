#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mfq/errors.hpp"
#include "mfq/liealg.hpp"
#include "mfq/mfshift.hpp"
#include "mfq/poisson.hpp"
#include "mfq/quantize.hpp"
#include "mfq/serialize.hpp"
#include "mfq/verify.hpp"

namespace {

using namespace mfq;

struct RunConfig {
    int n = 3;
    std::uint64_t seed = 7;
    std::string format = "text";
    std::string chi_source = "random-regular";
    std::string chi_file;
    bool allow_singular = false;
    bool slow = false;
    int n_max = 4;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MFQ_SEED")) return std::strtoull(env, nullptr, 10);
    return 7;
}

Functional resolve_chi(const RunConfig& cfg, const LiePtr& ge, int ell) {
    if (cfg.chi_source == "zero") return Functional{ge, QVector(ge->dim(), 0)};
    if (cfg.chi_source == "random-regular") return random_regular_chi(ge, ell, cfg.seed);
    if (cfg.chi_source == "file") {
        std::ifstream in(cfg.chi_file);
        if (!in) throw domain_error("cannot open chi file: " + cfg.chi_file);
        json j;
        in >> j;
        return functional_from_json(j, ge);
    }
    throw domain_error("unknown chi source: " + cfg.chi_source);
}

void print_poly(const Poly& p, const std::vector<std::string>& labels, const RunConfig& cfg) {
    if (cfg.format == "json") {
        std::cout << poly_to_json(p).dump() << "\n";
    } else {
        std::cout << p.to_string(labels) << "\n";
    }
}

int cmd_centralizer(const RunConfig& cfg) {
    LiePtr gl = build_gl(cfg.n);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    const LiePtr& sub = ge.sub;
    if (cfg.format == "json") {
        json brackets = json::array();
        for (int i = 0; i < sub->dim(); ++i)
            for (int j = i + 1; j < sub->dim(); ++j) {
                const auto& b = sub->bracket_basis(i, j);
                if (b.empty()) continue;
                json terms = json::array();
                for (const auto& [k, c] : b)
                    terms.push_back({{"coeff", to_string(c)}, {"basis", sub->labels()[k]}});
                brackets.push_back(
                    {{"left", sub->labels()[i]}, {"right", sub->labels()[j]}, {"value", terms}});
            }
        json out{{"n", cfg.n}, {"dim", sub->dim()}, {"basis", sub->labels()},
                 {"brackets", brackets}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "centralizer of e_{" << cfg.n << "," << cfg.n - 1 << "} in gl_" << cfg.n
              << ", dim " << sub->dim() << "\n";
    std::cout << "basis:";
    for (const auto& l : sub->labels()) std::cout << " " << l;
    std::cout << "\nnonzero brackets:\n";
    for (int i = 0; i < sub->dim(); ++i)
        for (int j = i + 1; j < sub->dim(); ++j) {
            const auto& b = sub->bracket_basis(i, j);
            if (b.empty()) continue;
            std::cout << "  [" << sub->labels()[i] << ", " << sub->labels()[j] << "] =";
            bool first = true;
            for (const auto& [k, c] : b) {
                std::cout << (first ? " " : " + ");
                if (c != 1) std::cout << to_string(c) << "*";
                std::cout << sub->labels()[k];
                first = false;
            }
            std::cout << "\n";
        }
    return 0;
}

int cmd_invariants(const RunConfig& cfg) {
    LiePtr gl = build_gl(cfg.n);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    SlodowyChart chart = slodowy_chart(gl, ge);
    InvariantFamily trunc = e_truncation_family(gl_char_invariants(gl), chart, ge);
    for (size_t i = 0; i < trunc.members.size(); ++i) {
        if (cfg.format != "json")
            std::cout << "eP_" << i + 1 << " (deg " << trunc.degrees[i] << ") = ";
        print_poly(trunc.members[i], ge.sub->labels(), cfg);
    }
    bool good = good_system_check(trunc, ge.sub, cfg.n);
    if (cfg.format == "json") {
        std::cout << json{{"good_system", good}}.dump() << "\n";
    } else {
        std::cout << "good generating system: " << (good ? "yes" : "no") << "\n";
    }
    return good ? 0 : 1;
}

int cmd_mf(const RunConfig& cfg) {
    LiePtr gl = build_gl(cfg.n);
    Subalgebra ge = minimal_nilpotent_centralizer(gl);
    SlodowyChart chart = slodowy_chart(gl, ge);
    InvariantFamily trunc = e_truncation_family(gl_char_invariants(gl), chart, ge);
    Functional chi = resolve_chi(cfg, ge.sub, cfg.n);
    MFAlgebra mf = mf_generators(trunc, chi, cfg.n, cfg.allow_singular);
    for (size_t i = 0; i < mf.generators.size(); ++i) {
        if (cfg.format != "json")
            std::cout << "D^" << mf.provenance[i].second << " eP_" << mf.provenance[i].first + 1
                      << " = ";
        print_poly(mf.generators[i], ge.sub->labels(), cfg);
    }
    if (cfg.format != "json")
        std::cout << "pairwise Poisson brackets vanish: yes\n"
                  << "generators: " << mf.generators.size() << "\n";
    return 0;
}

int cmd_q(const RunConfig& cfg) {
    QContext ctx = make_qcontext(cfg.n);
    std::vector<UEAElement> q = extract_Q(ctx);
    for (size_t i = 0; i < q.size(); ++i) {
        if (cfg.format == "json") {
            std::cout << uea_to_json(q[i]).dump() << "\n";
        } else {
            std::cout << "Q_" << i + 1 << " = " << q[i].to_string() << "\n";
        }
    }
    return 0;
}

int cmd_quantize(const RunConfig& cfg) {
    QContext ctx = make_qcontext(cfg.n);
    Functional chi = resolve_chi(cfg, ctx.ge.sub, cfg.n);
    QuantizedAlgebra alg = quantized_algebra(ctx, chi, cfg.allow_singular);
    for (size_t i = 0; i < alg.generators.size(); ++i) {
        const auto& [pi, pj] = alg.provenance[i];
        if (cfg.format == "json") {
            std::cout << uea_to_json(alg.generators[i]).dump() << "\n";
            continue;
        }
        if (pj < 0) {
            std::cout << "I = ";
        } else {
            std::cout << "A_" << pi << "^(" << pj << ") = ";
        }
        std::cout << alg.generators[i].to_string() << "\n";
    }
    if (cfg.format != "json")
        std::cout << "pairwise commutators vanish: yes\n"
                  << "generators: " << alg.generators.size() << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions opts;
    opts.n_max = cfg.n_max;
    opts.seed = cfg.seed;
    opts.slow = cfg.slow;
    std::vector<Report> reports = run_all_checks(opts);
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& r : reports)
            out.push_back({{"name", r.name}, {"status", to_string(r.status)},
                           {"witness", r.witness}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.name << ": " << to_string(r.status);
            if (!r.witness.empty()) std::cout << "  [" << r.witness << "]";
            std::cout << "\n";
        }
    }
    return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of commutative shift subalgebras "
                 "for minimal-nilpotent centralizers in gl_n"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.seed = default_seed();

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        if (needs_n) sub->add_option("--n", cfg.n, "matrix size n")->check(CLI::Range(2, 5));
        sub->add_option("--seed", cfg.seed, "random seed (env MFQ_SEED as fallback)");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_chi = [&](CLI::App* sub) {
        sub->add_option("--chi", cfg.chi_source, "chi source: zero, random-regular, file")
            ->check(CLI::IsMember({"zero", "random-regular", "file"}));
        sub->add_option("--chi-file", cfg.chi_file, "path to a serialized functional");
        sub->add_flag("--allow-singular", cfg.allow_singular, "skip the regularity gate");
    };

    auto* centralizer = app.add_subcommand("centralizer", "print the centralizer basis/brackets");
    add_common(centralizer, true);
    auto* invariants = app.add_subcommand("invariants", "print the truncated invariants");
    add_common(invariants, true);
    auto* mf = app.add_subcommand("mf", "print the classical shift generators");
    add_common(mf, true);
    add_chi(mf);
    auto* q = app.add_subcommand("q", "print the central elements Q_i");
    add_common(q, true);
    auto* quantize = app.add_subcommand("quantize", "print the quantized generators");
    add_common(quantize, true);
    add_chi(quantize);
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, false);
    bool all = false;
    verify->add_flag("--all", all, "run every check");
    verify->add_option("--n-max", cfg.n_max, "largest n for the suite")->check(CLI::Range(2, 5));
    verify->add_flag("--slow", cfg.slow, "include the n = 5 checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (centralizer->parsed()) return cmd_centralizer(cfg);
        if (invariants->parsed()) return cmd_invariants(cfg);
        if (mf->parsed()) return cmd_mf(cfg);
        if (q->parsed()) return cmd_q(cfg);
        if (quantize->parsed()) return cmd_quantize(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const mfq::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
