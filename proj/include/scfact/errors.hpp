#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scfact {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different rings.
class DescriptorMismatch : public Error {
public:
    explicit DescriptorMismatch(const std::string& msg) : Error(msg) {}
};

/// Inversion of a non-unit. Carries a witness describing why the element
/// is not invertible (a common divisor, a vanishing sample index, ...).
class NotAUnit : public Error {
public:
    NotAUnit(const std::string& msg, std::string witness)
        : Error(msg + " (" + witness + ")"), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

class NoSquareRoot : public Error {
public:
    explicit NoSquareRoot(const std::string& msg) : Error(msg) {}
};

/// Exhaustive search requested on a ring with infinite carrier.
class InfiniteRing : public Error {
public:
    explicit InfiniteRing(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Expression uses an operation the target ring does not support
/// (trig or pi on an exact ring).
class TypeError : public Error {
public:
    explicit TypeError(const std::string& msg) : Error(msg) {}
};

class EvalError : public Error {
public:
    explicit EvalError(const std::string& msg) : Error(msg) {}
};

/// A theorem hypothesis fails at a concrete index / grid point.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(const std::string& msg, long long index, long long grid_point = -1)
        : Error(msg + " at n=" + std::to_string(index) +
                (grid_point >= 0 ? ", grid point " + std::to_string(grid_point) : "")),
          index_(index), grid_point_(grid_point) {}
    long long index() const { return index_; }
    long long grid_point() const { return grid_point_; }

private:
    long long index_;
    long long grid_point_;
};

/// A term of a would-be eigensequence is not a unit.
class NonUnitTerm : public Error {
public:
    NonUnitTerm(const std::string& msg, long long index)
        : Error(msg + " at n=" + std::to_string(index)), index_(index) {}
    long long index() const { return index_; }

private:
    long long index_;
};

/// Supplied multiplier sequence fails the characteristic residual.
class NotAnEigensequence : public Error {
public:
    NotAnEigensequence(const std::string& msg, long long index)
        : Error(msg + " at n=" + std::to_string(index)), index_(index) {}
    long long index() const { return index_; }

private:
    long long index_;
};

/// Cascade stage could not be factorized.
class StageFailed : public Error {
public:
    StageFailed(const std::string& msg, int depth)
        : Error("stage " + std::to_string(depth) + ": " + msg), depth_(depth) {}
    int depth() const { return depth_; }

private:
    int depth_;
};

class GridMismatch : public Error {
public:
    explicit GridMismatch(const std::string& msg) : Error(msg) {}
};

/// Conjugate-pair closed form evaluated where the discriminant is nonnegative.
class WrongRegion : public Error {
public:
    explicit WrongRegion(const std::string& msg) : Error(msg) {}
};

/// Internal cross-check between two solution routes disagreed.
class VerificationFailure : public Error {
public:
    explicit VerificationFailure(const std::string& msg) : Error(msg) {}
};

} // namespace scfact
