#pragma once

#include <map>
#include <string>

#include "addchow/rational.hpp"

namespace addchow {

// q * cbrt(c) with c a positive cube-free integer (sign and cube factors
// absorbed into q, denominator of the radicand cleared). c = 1 encodes a
// plain rational; q = 0 only in the canonical zero (then c = 1).
class RadMonomial {
  public:
    RadMonomial() : q_(0), c_(1) {}
    RadMonomial(const Rational& plain) : q_(plain), c_(1) {}
    RadMonomial(long plain) : q_(plain), c_(1) {}

    // q * cbrt(c) for rational c != 0.
    static RadMonomial normalize(const Rational& q, const Rational& c);
    static RadMonomial cbrt(const Rational& c) { return normalize(Rational(1), c); }

    const Rational& coeff() const { return q_; }
    const Int& radicand() const { return c_; }

    bool is_zero() const { return q_.is_zero(); }
    bool is_rational() const { return c_ == 1; }

    Rational cube() const { return q_.pow_int(3) * Rational(c_); }

    RadMonomial operator-() const;
    friend RadMonomial operator*(const RadMonomial& a, const RadMonomial& b);
    RadMonomial inverted() const;

    friend bool operator==(const RadMonomial& a, const RadMonomial& b) {
        return a.q_ == b.q_ && a.c_ == b.c_;
    }
    friend bool operator!=(const RadMonomial& a, const RadMonomial& b) { return !(a == b); }
    friend bool operator<(const RadMonomial& a, const RadMonomial& b) {
        if (a.c_ != b.c_)
            return a.c_ < b.c_;
        return a.q_ < b.q_;
    }

    std::string str() const;

  private:
    Rational q_;
    Int c_;
};

// Finite Q-linear combination of cube roots of distinct cube-free positive
// integers. Distinct radicands are linearly independent over Q, so the zero
// test is exact.
class RadScalar {
  public:
    RadScalar() = default;
    RadScalar(const RadMonomial& m) { add(m); }
    RadScalar(const Rational& plain) { add(RadMonomial(plain)); }

    void add(const RadMonomial& m);
    bool is_zero() const { return terms_.empty(); }

    RadScalar operator-() const;
    friend RadScalar operator+(const RadScalar& a, const RadScalar& b);
    friend RadScalar operator-(const RadScalar& a, const RadScalar& b);
    friend RadScalar operator*(const RadScalar& a, const RadScalar& b);
    RadScalar scaled(const Rational& c) const;

    friend bool operator==(const RadScalar& a, const RadScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadScalar& a, const RadScalar& b) { return !(a == b); }
    friend bool operator<(const RadScalar& a, const RadScalar& b) {
        return a.terms_ < b.terms_;
    }

    const std::map<Int, Rational>& terms() const { return terms_; }

    std::string str() const;

  private:
    std::map<Int, Rational> terms_; // radicand -> coefficient, no zeros stored
};

} // namespace addchow
