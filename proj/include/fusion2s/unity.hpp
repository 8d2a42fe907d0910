#pragma once

#include <complex>
#include <string>

namespace fusion2s {

/// A root of unity e^{2*pi*i*p/q}, stored as the reduced exponent p/q with
/// 0 <= p < q. Multiplication is exponent addition mod 1 and is always exact;
/// equality compares reduced exponents. Sums of roots are never represented
/// exactly: anything additive goes through to_complex().
class UnityScalar {
public:
    /// The unit 1 (exponent 0).
    UnityScalar() : num_(0), den_(1) {}

    /// Normalizes num/den mod 1 and reduces. den must be nonzero.
    static UnityScalar from_fraction(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_one() const { return num_ == 0; }

    UnityScalar operator*(const UnityScalar& rhs) const;
    UnityScalar& operator*=(const UnityScalar& rhs) {
        *this = *this * rhs;
        return *this;
    }
    UnityScalar inverse() const;
    UnityScalar pow(long long exponent) const;

    std::complex<double> to_complex() const;

    /// Reduced exponent rendered as "p/q", or "0" for the unit.
    std::string str() const;

    friend bool operator==(const UnityScalar&, const UnityScalar&) = default;
    /// Orders by exponent value; consistent with == on reduced fractions.
    auto operator<=>(const UnityScalar& rhs) const {
        return num_ * rhs.den_ <=> rhs.num_ * den_;
    }

private:
    UnityScalar(long long num, long long den) : num_(num), den_(den) {}

    long long num_;
    long long den_;
};

}  // namespace fusion2s
