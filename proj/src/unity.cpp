#include "fusion2s/unity.hpp"

#include <cmath>
#include <numeric>

#include "fusion2s/errors.hpp"

namespace fusion2s {

UnityScalar UnityScalar::from_fraction(long long num, long long den) {
    if (den == 0) throw InputError("root-of-unity exponent with zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    const long long g = std::gcd(num, den);
    return UnityScalar(num / g, den / g);
}

UnityScalar UnityScalar::operator*(const UnityScalar& rhs) const {
    return from_fraction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

UnityScalar UnityScalar::inverse() const { return from_fraction(-num_, den_); }

UnityScalar UnityScalar::pow(long long exponent) const {
    const long long m = ((exponent % den_) + den_) % den_;
    return from_fraction(num_ * m, den_);
}

std::complex<double> UnityScalar::to_complex() const {
    const double angle = 2.0 * M_PI * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
}

std::string UnityScalar::str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fusion2s
