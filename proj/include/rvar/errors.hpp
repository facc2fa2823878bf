#pragma once

#include <stdexcept>
#include <string>

namespace rvar {

// Malformed input: out-of-range vertices, unparsable text, bad parameters.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters describe a graph that cannot exist (e.g. an odd number of
// odd-degree vertices in a regular gadget).
struct feasibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Query lies outside the regime a formula covers.
struct regime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rvar
