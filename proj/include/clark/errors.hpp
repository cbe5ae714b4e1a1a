#pragma once

#include <stdexcept>
#include <string>

namespace clark {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct DivergenceError : Error { using Error::Error; };
struct RankError : Error { using Error::Error; };
struct NonUnitaryError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };
struct ToleranceError : Error { using Error::Error; };

}  // namespace clark
