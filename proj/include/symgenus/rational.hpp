#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Every quantity derived from a signature (measure, order multiplier,
 * bound coefficient) is an exact fraction. Nothing in this library is
 * ever evaluated in floating point.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "symgenus/errors.hpp"

namespace symgenus {

using Int = boost::multiprecision::cpp_int;

/// Fraction kept in lowest terms; denominator always positive; 0 is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational operator+(const Rational& r) const {
        return Rational(num_ * r.den_ + r.num_ * den_, den_ * r.den_);
    }
    Rational operator-(const Rational& r) const {
        return Rational(num_ * r.den_ - r.num_ * den_, den_ * r.den_);
    }
    Rational operator*(const Rational& r) const {
        return Rational(num_ * r.num_, den_ * r.den_);
    }
    Rational operator/(const Rational& r) const {
        if (r.num_ == 0) throw Error("Rational: division by zero");
        return Rational(num_ * r.den_, den_ * r.num_);
    }

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    Rational reciprocal() const {
        if (num_ == 0) throw Error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    bool operator==(const Rational& r) const {
        return num_ == r.num_ && den_ == r.den_;
    }
    bool operator!=(const Rational& r) const { return !(*this == r); }

    // Cross-multiplication is exact; denominators are positive.
    bool operator<(const Rational& r) const { return num_ * r.den_ < r.num_ * den_; }
    bool operator>(const Rational& r) const { return r < *this; }
    bool operator<=(const Rational& r) const { return !(r < *this); }
    bool operator>=(const Rational& r) const { return !(*this < r); }

    std::string str() const {
        std::ostringstream os;
        os << num_;
        if (den_ != 1) os << "/" << den_;
        return os.str();
    }

private:
    void reduce() {
        if (den_ == 0) throw Error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace symgenus
