#pragma once

#include <stdexcept>
#include <string>

namespace stacky {

// Base class for all domain errors raised by the library.  The CLI maps
// these to exit code 1; malformed command lines map to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct NotHyperbolic : Error {
    explicit NotHyperbolic(const std::string& what) : Error(what) {}
};

struct GenusNotZero : Error {
    explicit GenusNotZero(const std::string& what) : Error(what) {}
};

struct NotInPi : Error {
    explicit NotInPi(const std::string& what) : Error(what) {}
};

struct DegreeBoundExceeded : Error {
    explicit DegreeBoundExceeded(const std::string& what) : Error(what) {}
};

struct UnhandledSpecialDivisor : Error {
    explicit UnhandledSpecialDivisor(const std::string& what) : Error(what) {}
};

struct InsufficientFlags : Error {
    explicit InsufficientFlags(const std::string& what) : Error(what) {}
};

struct HypothesisFails : Error {
    explicit HypothesisFails(const std::string& what) : Error(what) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& what) : Error(what) {}
};

struct MissingPoleData : Error {
    explicit MissingPoleData(const std::string& what) : Error(what) {}
};

struct NotABaseCase : Error {
    explicit NotABaseCase(const std::string& what) : Error(what) {}
};

struct DispatchGap : Error {
    explicit DispatchGap(const std::string& what) : Error(what) {}
};

struct NumeratorNotStabilized : Error {
    explicit NumeratorNotStabilized(const std::string& what) : Error(what) {}
};

}  // namespace stacky
