#pragma once

#include <stdexcept>
#include <string>

namespace hopfmzv {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    using Error::Error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

// A coefficient was requested outside the validity window of a series.
class PrecisionExceeded : public Error {
public:
    using Error::Error;
};

class LambdaZero : public Error {
public:
    using Error::Error;
};

class NonzeroConstantTerm : public Error {
public:
    using Error::Error;
};

class TruncationMismatch : public Error {
public:
    using Error::Error;
};

class EvenWeight : public Error {
public:
    using Error::Error;
};

class DepthOne : public Error {
public:
    using Error::Error;
};

// Raised when psi_+ has a nonzero coefficient below z^{k_1+...+k_n}; this
// can only happen through an implementation bug.
class NonvanishingLowerTerm : public Error {
public:
    using Error::Error;
};

} // namespace hopfmzv
