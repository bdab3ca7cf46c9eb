#pragma once

#include <stdexcept>
#include <string>

namespace satkit {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(const std::string& what) : Error(what) {}
};

struct ZeroInputError : Error {
    explicit ZeroInputError(const std::string& what) : Error(what) {}
};

struct UnknownVariableError : Error {
    explicit UnknownVariableError(const std::string& what) : Error(what) {}
};

struct ImproperIdealError : Error {
    explicit ImproperIdealError(const std::string& what) : Error(what) {}
};

/// A morphism whose images do not kill some source relation.
struct NotWellDefinedError : Error {
    NotWellDefinedError(const std::string& what, std::string relation)
        : Error(what), offending_relation(std::move(relation)) {}
    std::string offending_relation;
};

struct NotAnExtensionError : Error {
    explicit NotAnExtensionError(const std::string& what) : Error(what) {}
};

struct NotIntegralError : Error {
    explicit NotIntegralError(const std::string& what) : Error(what) {}
};

struct NotANormalizationError : Error {
    explicit NotANormalizationError(const std::string& what) : Error(what) {}
};

}  // namespace satkit
