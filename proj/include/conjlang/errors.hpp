#ifndef CONJLANG_ERRORS_HPP
#define CONJLANG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conjlang {

// Maps to CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Maps to CLI exit code 3.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Maps to CLI exit code 4 (e.g. cone radius too small, bad structure table).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace conjlang

#endif
