#pragma once

#include <stdexcept>
#include <string>

namespace wimax_il {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisibilityError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NotAPermutation : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a generator is stepped past the last index of the block.
class Exhausted : public Error {
public:
    using Error::Error;
};

class CyclicGraph : public Error {
public:
    using Error::Error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace wimax_il
