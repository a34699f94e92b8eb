#ifndef DIPATH_ERROR_HPP
#define DIPATH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dipath {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A malformed object: a non-face-closed complex, an invalid cube chain,
/// overlapping vectors in a discrete field, a broken certificate.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An argument that violates the documented contract of a function.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A precondition about the input complex does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A cell or label that is not part of the structure it was looked up in.
class LookupError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace dipath

#endif
