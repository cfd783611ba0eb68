#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "addchow/error.hpp"

namespace addchow {

using Int = mpz_class;

// Exact rational number. Always canonical: reduced, positive denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'.
    static Rational parse(std::string_view s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero");
        return Rational(den(), num());
    }

    // e may be negative (then *this must be nonzero).
    Rational pow_int(long e) const;

    Rational abs() const { return v_ < 0 ? Rational(mpq_class(-v_)) : *this; }

    // Is this a square of a rational? If so and root != nullptr, set *root >= 0.
    bool is_square(Rational* root = nullptr) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

} // namespace addchow
