#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mfq {

struct Report {
    enum class Status { pass, fail, flagged };

    std::string name;
    Status status = Status::fail;
    /// Exact witness for failures; explanatory note for flagged checks.
    std::string witness;
};

std::string to_string(Report::Status s);

struct VerifyOptions {
    int n_max = 4;
    std::uint64_t seed = 7;
    /// Extends the heavier checks to n = 5.
    bool slow = false;
};

/// Runs the whole verification suite; one report per check plus flags.
std::vector<Report> run_all_checks(const VerifyOptions& opts);

/// True iff no report failed (flagged checks do not fail).
bool all_passed(const std::vector<Report>& reports);

}  // namespace mfq
