#pragma once

#include <stdexcept>
#include <string>

namespace rdp {

// Error taxonomy shared by all modules. Callers that violate a documented
// precondition get std::invalid_argument instead.
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidModulus : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedRing : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotBijective : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace rdp
