#pragma once

#include <stdexcept>
#include <string>

namespace ssr {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructor or operation precondition was violated (bad parameter values,
// ill-posed specs, weights that do not sum to one, ...).  The message names
// the precondition that failed.
class InvalidSpecError : public Error {
public:
    using Error::Error;
};

// Two sampled objects were combined whose grids do not agree.  We never
// resample implicitly.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

// A sampled result would carry significant mass outside the grid window.
class WindowOverflowError : public Error {
public:
    using Error::Error;
};

// File / serialization problems.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace ssr
