#pragma once

#include <stdexcept>
#include <string>

namespace cyclekit {

// Raised when a numerical routine cannot reach its requested accuracy
// (quadrature that fails to converge, series truncation whose tail bound
// exceeds tolerance).  Configuration mistakes raise std::invalid_argument /
// std::domain_error instead.
class PrecisionError : public std::runtime_error {
  public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclekit
