#pragma once

#include <stdexcept>
#include <string>

namespace curlicue {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The phase argument is too large for its fractional part to carry useful bits.
class PrecisionExceeded : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Pixel spacing is too coarse to resolve the main lobe of the sum.
class UnderSampled : public Error {
public:
    UnderSampled(const std::string& what, int required_pixels)
        : Error(what), required_pixels_(required_pixels) {}
    int required_pixels() const noexcept { return required_pixels_; }

private:
    int required_pixels_;
};

class EmptyWindow : public Error {
public:
    using Error::Error;
};

class DegenerateBandwidth : public Error {
public:
    using Error::Error;
};

/// A number-range plan needs a wider window than the one supplied.
class InsufficientBandwidth : public Error {
public:
    InsufficientBandwidth(const std::string& what, double minimum_beta)
        : Error(what), minimum_beta_(minimum_beta) {}
    double minimum_beta() const noexcept { return minimum_beta_; }

private:
    double minimum_beta_;
};

}  // namespace curlicue
