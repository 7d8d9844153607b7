#pragma once

#include <stdexcept>
#include <string>

namespace hypermix {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- validation ---

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NonFiniteValue : Error {
    explicit NonFiniteValue(std::ptrdiff_t index)
        : Error("non-finite entry at flat index " + std::to_string(index)), index(index) {}
    std::ptrdiff_t index;
};

struct NegativeValue : Error {
    explicit NegativeValue(std::ptrdiff_t index)
        : Error("negative entry at flat index " + std::to_string(index)), index(index) {}
    std::ptrdiff_t index;
};

struct OutOfRange : Error {
    using Error::Error;
};

// --- dgmap ---

struct ZeroNorm : Error {
    using Error::Error;
};

struct InvalidBandwidth : Error {
    using Error::Error;
};

struct ImageTooSmall : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    NoConvergence(int iterations, double residual)
        : Error("iterative solver did not reach the residual target after " +
                std::to_string(iterations) + " iterations (residual " +
                std::to_string(residual) + ")"),
          iterations(iterations),
          residual(residual) {}
    int iterations;
    double residual;
};

// --- unmix / metrics ---

struct BadK : Error {
    using Error::Error;
};

struct DegenerateRow : Error {
    explicit DegenerateRow(int row)
        : Error("abundance row " + std::to_string(row) + " has zero sum"), row(row) {}
    int row;
};

struct ZeroColumn : Error {
    explicit ZeroColumn(std::ptrdiff_t column)
        : Error("all-zero abundance column " + std::to_string(column)), column(column) {}
    std::ptrdiff_t column;
};

struct EmptyInput : Error {
    using Error::Error;
};

// --- synth ---

struct InfeasibleSpec : Error {
    using Error::Error;
};

// --- io / render ---

struct IoError : Error {
    using Error::Error;
};

struct BadMagic : IoError {
    using IoError::IoError;
};

struct TruncatedPayload : IoError {
    using IoError::IoError;
};

struct TooManyEndmembers : Error {
    using Error::Error;
};

struct DegeneratePixel : Error {
    explicit DegeneratePixel(std::ptrdiff_t pixel)
        : Error("all-zero abundance column at pixel " + std::to_string(pixel)), pixel(pixel) {}
    std::ptrdiff_t pixel;
};

}  // namespace hypermix
