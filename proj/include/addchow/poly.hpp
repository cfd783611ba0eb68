#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "addchow/rational.hpp"

namespace addchow {

// Univariate polynomial over Q in the parameter t.
// coeffs_[i] is the coefficient of t^i; no trailing zeros are stored,
// so the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly variable() { return Poly({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Rational& leading() const;
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    // Index of the lowest nonzero coefficient; degree+1 semantics don't apply:
    // requires nonzero polynomial.
    int trailing_order() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& c) const;
    Poly pow_int(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: *this = q * d + r with deg r < deg d. d must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const;

    // Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    Poly derivative() const;

    // p(t) -> p(t + c): coefficients of the expansion around c.
    Poly taylor_shift(const Rational& c) const;

    // t^deg * p(1/t), i.e. the coefficient sequence reversed. Nonzero input.
    Poly reversed() const;

    Poly monic() const;

    // Multiplicity of the root c (0 if p(c) != 0). Nonzero input.
    int root_multiplicity(const Rational& c) const;

    std::string str(const char* var = "t") const;

    // Total ordering for use as a map key (degree, then coefficients).
    static int cmp(const Poly& a, const Poly& b);

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

} // namespace addchow
