#pragma once

#include <stdexcept>
#include <string>

namespace lsat {

enum class ErrorKind {
    InvalidInput,       // malformed or out-of-domain input
    UnsupportedRegime,  // a formula or oracle that is not proven for these parameters
    Internal,           // a broken invariant inside the library
};

// Every library failure carries a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string tag, const std::string& detail)
        : std::runtime_error(tag + ": " + detail), kind_(kind), tag_(std::move(tag)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& tag() const noexcept { return tag_; }

private:
    ErrorKind kind_;
    std::string tag_;
};

[[noreturn]] inline void fail_input(std::string tag, const std::string& detail) {
    throw Error(ErrorKind::InvalidInput, std::move(tag), detail);
}

[[noreturn]] inline void fail_regime(std::string tag, const std::string& detail) {
    throw Error(ErrorKind::UnsupportedRegime, std::move(tag), detail);
}

[[noreturn]] inline void fail_internal(std::string tag, const std::string& detail) {
    throw Error(ErrorKind::Internal, std::move(tag), detail);
}

inline void check_internal(bool cond, const char* tag, const std::string& detail) {
    if (!cond) fail_internal(tag, detail);
}

}  // namespace lsat
