#pragma once

#include <stdexcept>
#include <string>

namespace cartan3 {

/// Numerical failure (sampler breakdown, branch tracking, conditioning).
/// Distinct from std::invalid_argument / std::domain_error so callers can
/// map it to a different exit code.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cartan3
