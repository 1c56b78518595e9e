#ifndef EDGEMON_ERRORS_HPP
#define EDGEMON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgemon {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (bad row, non-numeric field, wrong arity).
class ParseError : public Error {
public:
    using Error::Error;
};

// Input columns/fields do not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Operation precondition violated (empty dataset, out-of-range argument).
class DomainError : public Error {
public:
    using Error::Error;
};

// Scenario/topology configuration is invalid.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Illegal lifecycle transition.
class StateError : public Error {
public:
    using Error::Error;
};

// Conflicting operation (duplicate deployment, lock already held).
class ConflictError : public Error {
public:
    using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace edgemon

#endif // EDGEMON_ERRORS_HPP
