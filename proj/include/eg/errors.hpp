#pragma once

#include <stdexcept>
#include <string>

namespace eg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};
struct DoesNotSatisfy : Error {
    using Error::Error;
};
struct NoRowBpd : Error {
    using Error::Error;
};
struct DecompositionMismatch : Error {
    using Error::Error;
};
struct InternalMismatch : Error {
    using Error::Error;
};
struct TypeViolation : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct OracleDisagreement : Error {
    using Error::Error;
};
struct DescentPrecondition : Error {
    using Error::Error;
};

}  // namespace eg
