#pragma once

#include <stdexcept>
#include <string>

namespace mfq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands built over different Lie algebra contexts.
struct context_mismatch : error {
    using error::error;
};

// A variable required by an evaluation was not assigned.
struct missing_assignment : error {
    using error::error;
};

// Input outside the operation's domain (zero polynomial, n too small, ...).
struct domain_error : error {
    using error::error;
};

// A polynomial expected to live in S(g) (depth 1) has deeper variables.
struct wrong_ring : error {
    using error::error;
};

// A claimed invariant failed a construction-time check.
struct invariance_violation : error {
    using error::error;
};

// chi is not regular and the caller did not override.
struct regularity_error : error {
    using error::error;
};

struct size_limit_error : error {
    using error::error;
};

}  // namespace mfq
