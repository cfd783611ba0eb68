#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addchow/poly.hpp"

namespace addchow {

// Closed point of P^1 over Q.
struct PointP1 {
    static PointP1 finite(Rational v) { return PointP1{false, std::move(v)}; }
    static PointP1 infinity() { return PointP1{true, Rational(0)}; }

    bool is_infinity() const { return infinite; }
    std::string str() const { return infinite ? "inf" : value.str(); }

    friend bool operator==(const PointP1& a, const PointP1& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator!=(const PointP1& a, const PointP1& b) { return !(a == b); }
    friend bool operator<(const PointP1& a, const PointP1& b) {
        if (a.infinite != b.infinite)
            return !a.infinite; // finite points first, infinity last
        if (a.infinite)
            return false;
        return a.value < b.value;
    }

    bool infinite;
    Rational value;
};

// Value of a rational function at a point of P^1 (an element of P^1 itself).
struct P1Value {
    static P1Value finite(Rational v) { return P1Value{false, std::move(v)}; }
    static P1Value infinity() { return P1Value{true, Rational(0)}; }
    bool is_infinity() const { return infinite; }
    bool is_zero() const { return !infinite && value.is_zero(); }
    bool is_one() const { return !infinite && value.is_one(); }
    std::string str() const { return infinite ? "inf" : value.str(); }

    bool infinite;
    Rational value;
};

// Divisor on P^1: finitely many points with nonzero integer orders.
using Divisor = std::map<PointP1, int>;

// Product decomposition coeff * prod factors[i]^e_i kept alongside a RatFunc
// numerator or denominator when it is cheaply available.
struct PolyFactors {
    Rational coeff{1};
    std::vector<std::pair<Poly, int>> factors;

    Poly expand() const;
};

// Rational function over Q in reduced canonical form: gcd(num, den) = 1 and
// den monic. Optional factored forms are kept when construction or
// multiplication preserves them; they always expand to num / den exactly.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(Rational(1))) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(Rational(1))) {}
    RatFunc(Poly num, Poly den);
    static RatFunc t() { return RatFunc(Poly::variable()); }
    static RatFunc from_factors(PolyFactors num, PolyFactors den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::optional<PolyFactors>& factored_num() const { return fnum_; }
    const std::optional<PolyFactors>& factored_den() const { return fden_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    // max(deg num, deg den); the degree of the induced map P^1 -> P^1.
    int map_degree() const { return std::max(num_.degree(), den_.degree()); }

    RatFunc operator-() const;
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc pow_int(int e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const;
    // f'/f for nonzero f.
    RatFunc dlog() const;

    P1Value eval(const PointP1& p) const;

    std::string str(const char* var = "t") const;

    static int cmp(const RatFunc& a, const RatFunc& b);
    friend bool operator<(const RatFunc& a, const RatFunc& b) { return cmp(a, b) < 0; }

  private:
    void reduce();
    Poly num_, den_;
    std::optional<PolyFactors> fnum_, fden_;
};

// Every root of p over the algebraic closure, as (root, multiplicity) over Q.
// Throws UnsupportedFactorization when a root is not rational (after rational
// root extraction and quadratic splitting with rational discriminant).
std::map<Rational, int> rational_roots_complete(const Poly& p);

// Order of vanishing of f at p (negative at poles). At Infinity this equals
// deg(den) - deg(num).
int ord_at(const RatFunc& f, const PointP1& p);

enum class Target { Zero, Infinity };

// All points of P^1 (including Infinity) where f attains the target, with
// positive multiplicities.
Divisor zeros_poles(const RatFunc& f, Target target);

// Laurent coefficients of f in the local parameter (t - p), or u = 1/t at
// Infinity, for exponents from..to inclusive.
std::vector<Rational> laurent_coeffs(const RatFunc& f, const PointP1& p, int from, int to);

// Residue of the differential f dt at p. At Infinity this is the residue of
// f(1/u) (-1/u^2) du at u = 0.
Rational residue_at(const RatFunc& f, const PointP1& p);

} // namespace addchow
