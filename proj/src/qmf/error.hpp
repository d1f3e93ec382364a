#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

// Error codes shared with the C API (keep in sync with include/qmforms.h).
enum class ErrorCode : int {
    Ok = 0,
    UnknownName = 1,
    UnknownRule = 2,
    DomainError = 3,
    ZeroLeadingCoefficient = 4,
    FractionalExponent = 5,
    NonIntegralResult = 6,
    DimensionMismatch = 7,
    SubstitutionError = 8,
    DescriptorMismatch = 9,
    PrecisionError = 10,
    NotPrime = 11,
    CrosscheckMismatch = 12,
    BadArgument = 13,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qmf
