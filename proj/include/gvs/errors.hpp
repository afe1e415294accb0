#pragma once

#include <stdexcept>
#include <string>

namespace gvs {

// Bad input: malformed tuples, out-of-domain arguments, refused computations.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Two routes that must agree disagreed, or an internal assertion failed.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A guarded brute-force cap was exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gvs
