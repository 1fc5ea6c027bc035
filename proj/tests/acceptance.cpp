// Acceptance gate: one line per criterion, exit 0 iff everything passes.
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "mfq/verify.hpp"

namespace {

struct Criterion {
    const char* title;
    std::vector<const char*> checks;
};

// criterion 4 groups the crosscheck with its flagged print discrepancy
const std::vector<Criterion> kCriteria = {
    {"golden formula reproduction (n=3,4)", {"golden-formulas"}},
    {"vacuum centrality at the critical level", {"vacuum-centrality"}},
    {"quantized pairwise commutativity", {"quantized-commutativity"}},
    {"shift-image crosscheck A_i = phi(Q_i)", {"shift-image-crosscheck", "a2-correction-term"}},
    {"classical layer: invariance, good system, MF commutativity", {"classical-layer"}},
    {"associated-graded consistency", {"gr-consistency"}},
    {"jet invariance of translated symbols", {"jet-invariance"}},
    {"centralizer index equals the rank", {"centralizer-index"}},
    {"rank-two fixture: branch and generic ranks", {"c2-fixture"}},
    {"structural property suites (100+ instances each)", {"property-suites"}},
};

}  // namespace

int main(int argc, char** argv) {
    mfq::VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--slow") {
            opts.slow = true;
        } else if (arg == "--seed" && i + 1 < argc) {
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--n-max" && i + 1 < argc) {
            opts.n_max = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--slow] [--seed S] [--n-max N]\n", argv[0]);
            return 2;
        }
    }

    std::vector<mfq::Report> reports = mfq::run_all_checks(opts);
    std::map<std::string, const mfq::Report*> by_name;
    for (const auto& r : reports) by_name[r.name] = &r;

    bool ok = true;
    int idx = 0;
    for (const auto& crit : kCriteria) {
        ++idx;
        bool pass = true;
        std::string notes;
        for (const char* name : crit.checks) {
            auto it = by_name.find(name);
            if (it == by_name.end()) {
                pass = false;
                notes += std::string(" [missing check: ") + name + "]";
                continue;
            }
            const mfq::Report& r = *it->second;
            if (r.status == mfq::Report::Status::fail) {
                pass = false;
                notes += " [" + r.name + ": " + r.witness + "]";
            } else if (r.status == mfq::Report::Status::flagged) {
                notes += " [flagged: " + r.witness + "]";
            }
        }
        std::printf("criterion %2d: %s  %s%s\n", idx, pass ? "PASS" : "FAIL", crit.title,
                    notes.c_str());
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}
