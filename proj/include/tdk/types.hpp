#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace tdk {

using Complex = std::complex<double>;

// Shared numeric policy: comparisons are relative with an absolute floor,
// Hermitian/structural checks use the tighter structural tolerance.
inline constexpr double kRelTol = 1e-10;
inline constexpr double kAbsFloor = 1e-14;
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kIndeterminateFactor = 10.0;

inline bool approx_zero(double magnitude, double scale) {
    return magnitude <= std::max(kAbsFloor, kRelTol * scale);
}

inline bool approx_equal(Complex lhs, Complex rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return approx_zero(std::abs(lhs - rhs), scale);
}

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A defining scalar a_n (or the tail ratio) is zero.
class NonzeroViolation : public Error {
public:
    using Error::Error;
};

class NotLeftInvertible : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

class NotTruncated : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnstableTruncation : public Error {
public:
    using Error::Error;
};

class DivergenceWarning : public Error {
public:
    using Error::Error;
};

class NormalityDetected : public Error {
public:
    using Error::Error;
};

}  // namespace tdk
