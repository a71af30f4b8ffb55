// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace qcopt {

/// An exact rotation angle, stored as a rational multiple of pi.
///
/// The value k = num/den denotes a z-rotation by k*pi radians. Angles are
/// kept in lowest terms with a positive denominator and normalized into the
/// half-open interval [0, 2), so k and k + 2 compare equal. Using exact
/// rationals instead of floats keeps gate merging free of rounding error.
class Angle {
public:
    constexpr Angle() = default;
    Angle(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    /// Odd multiples of pi/4 (denominator 4 in lowest terms) cost one T gate.
    bool is_t_angle() const { return den_ == 4; }

    double radians() const;

    Angle operator+(const Angle& other) const;
    Angle operator-(const Angle& other) const;
    friend bool operator==(const Angle&, const Angle&) = default;

    /// Serialized as "m*pi/n" in lowest terms ("pi" when m=n=1, "0" when m=0).
    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// k*pi with k = 2 - k', the angle produced when an X gate moves past Rz(k').
Angle reflect_angle(const Angle& a);

} // namespace qcopt
