#pragma once

#include <stdexcept>
#include <string>

namespace dporders {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Classes live on different lattices (base mismatch or bad coefficient count).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A surface passed as target is not an extension/ancestor of the owner.
class LineageError : public Error {
public:
    using Error::Error;
};

/// A multiplicity map references an unknown point or curve.
class IncidenceError : public Error {
public:
    using Error::Error;
};

/// Structural validation failed (flags, proximity, node data, degrees).
class InvalidConfigurationError : public Error {
public:
    using Error::Error;
};

/// More blowup points than the enumeration bounds support.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its predicate domain.
class PredicateError : public Error {
public:
    using Error::Error;
};

/// The requested quantity is undefined for this input (e.g. mixed degrees).
class NotApplicableError : public Error {
public:
    using Error::Error;
};

/// The generator cannot be contracted inside the blowup forest.
class ContractionError : public Error {
public:
    using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace dporders
