#pragma once

#include <stdexcept>

namespace lwasim {

/// Thrown when an event is scheduled before the current simulated clock.
struct CausalityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Header field outside its declared range at encode time.
struct EncodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated or malformed input at decode time.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration value or combination.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File or socket failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lwasim
