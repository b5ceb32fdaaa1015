#pragma once

#include <stdexcept>
#include <string>

namespace imag {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

class NotSymmetric : public Error {
public:
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

class NotPSD : public Error {
public:
    explicit NotPSD(const std::string& what) : Error(what) {}
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class MuOutOfRange : public Error {
public:
    explicit MuOutOfRange(const std::string& what) : Error(what) {}
};

class BlochNormExceeded : public Error {
public:
    explicit BlochNormExceeded(const std::string& what) : Error(what) {}
};

class ZeroVector : public Error {
public:
    explicit ZeroVector(const std::string& what) : Error(what) {}
};

class ProbabilityOutOfRange : public Error {
public:
    explicit ProbabilityOutOfRange(const std::string& what) : Error(what) {}
};

class SingularNormalizer : public Error {
public:
    explicit SingularNormalizer(const std::string& what) : Error(what) {}
};

class NuBelowOne : public Error {
public:
    explicit NuBelowOne(const std::string& what) : Error(what) {}
};

class SingularSum : public Error {
public:
    explicit SingularSum(const std::string& what) : Error(what) {}
};

class TruncationUnreliable : public Error {
public:
    explicit TruncationUnreliable(const std::string& what) : Error(what) {}
};

// Thrown when a state/operation/file fails invariant validation at an API boundary.
class ValidationFailed : public Error {
public:
    explicit ValidationFailed(const std::string& what) : Error(what) {}
};

// Thrown on malformed input files or grid specs.
class ParseFailed : public Error {
public:
    explicit ParseFailed(const std::string& what) : Error(what) {}
};

} // namespace imag
