// SPDX-License-Identifier: Apache-2.0
#include "qcopt/angle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcopt {

namespace {

// Reduce to lowest terms and wrap the value into [0, 2).
void normalize(std::int64_t& num, std::int64_t& den) {
    if (den == 0) throw std::invalid_argument("Angle: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t period = 2 * den;
    num %= period;
    if (num < 0) num += period;
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
}

} // namespace

Angle::Angle(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
    normalize(num_, den_);
}

double Angle::radians() const {
    return M_PI * static_cast<double>(num_) / static_cast<double>(den_);
}

Angle Angle::operator+(const Angle& other) const {
    // den <= 2^31 in practice; the intermediate product fits comfortably.
    const std::int64_t g = std::gcd(den_, other.den_);
    const std::int64_t scale = other.den_ / g;
    return Angle(num_ * scale + other.num_ * (den_ / g), den_ * scale);
}

Angle Angle::operator-(const Angle& other) const {
    const std::int64_t g = std::gcd(den_, other.den_);
    const std::int64_t scale = other.den_ / g;
    return Angle(num_ * scale - other.num_ * (den_ / g), den_ * scale);
}

std::string Angle::to_string() const {
    if (num_ == 0) return "0";
    std::string s;
    if (num_ != 1) s = std::to_string(num_) + "*";
    s += "pi";
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Angle reflect_angle(const Angle& a) {
    return Angle(2 * a.den() - a.num(), a.den());
}

} // namespace qcopt
