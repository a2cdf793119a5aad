#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bilform {

// Thrown when an enumeration or construction would exceed the configured cap.
// The CLI maps this to exit code 3.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed. Construction and witness code verify their
// own postconditions and abort loudly rather than fall back silently.
class verification_error : public std::logic_error {
public:
    explicit verification_error(const std::string& msg) : std::logic_error(msg) {}
};

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

}  // namespace bilform
