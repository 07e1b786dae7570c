#pragma once

#include <stdexcept>
#include <string>

namespace realchar {

// bad user input: malformed files, invalid specs, unknown indices (CLI exit 2)
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an internal invariant failed; results cannot be trusted (CLI exit 1)
struct EngineDefect : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace realchar
