#pragma once
#include <stdexcept>
#include <string>

namespace mstab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitError : Error {
    NonUnitError() : Error("element is not a unit") {}
    explicit NonUnitError(const std::string& what) : Error(what) {}
};

struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& what) : Error(what) {}
};

struct NotInSubgroup : Error {
    explicit NotInSubgroup(const std::string& what) : Error(what) {}
};

struct LevelTooSmall : Error {
    explicit LevelTooSmall(const std::string& what) : Error(what) {}
};

struct SizeCapExceeded : Error {
    explicit SizeCapExceeded(const std::string& what) : Error(what) {}
};

struct WellDefinednessFailure : Error {
    explicit WellDefinednessFailure(const std::string& what) : Error(what) {}
};

struct IntegralityFailure : Error {
    explicit IntegralityFailure(const std::string& what) : Error(what) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
    size_t offset;
    SyntaxError(const std::string& what, size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct UnknownIdentifier : Error {
    explicit UnknownIdentifier(const std::string& name)
        : Error("unknown identifier: " + name) {}
};

}  // namespace mstab
