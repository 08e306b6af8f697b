#pragma once

#include <stdexcept>
#include <string>

namespace quandles {

/// Thrown when a search or enumeration would exceed its configured bound
/// (group order caps, enumeration order caps, closure size caps).
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace quandles
