#pragma once

#include <stdexcept>
#include <string>

namespace matchex {

// Thrown when an input exceeds the fixed desk-scale limits (128 edge bits,
// face-count budget, subset-filter width).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace matchex
