#pragma once

#include <stdexcept>
#include <string>

namespace cutrank {

/// Error categories shared between the library and the CLI exit codes.
enum class Errc {
    VerifyMismatch = 1,   // verification report is not a perfect match
    Parse = 2,            // group-spec / CSV parse failure
    CapExceeded = 3,      // construction would exceed the order cap
    UnsupportedFamily = 4,
    Internal = 5,         // invariant breach: oracle vs formula disagreement, budget exhaustion
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace cutrank
