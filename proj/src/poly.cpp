#include "addchow/poly.hpp"

#include <algorithm>
#include <sstream>

namespace addchow {

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

const Rational& Poly::leading() const {
    if (is_zero())
        throw ZeroFunction("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int Poly::trailing_order() const {
    if (is_zero())
        throw ZeroFunction("trailing order of the zero polynomial");
    int i = 0;
    while (coeffs_[static_cast<std::size_t>(i)].is_zero())
        ++i;
    return i;
}

Poly Poly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c)
        x = -x;
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& c) const {
    std::vector<Rational> r(coeffs_);
    for (auto& x : r)
        x *= c;
    return Poly(std::move(r));
}

Poly Poly::pow_int(int e) const {
    if (e < 0)
        throw InvalidParameter("negative polynomial power");
    Poly r = Poly::constant(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero())
        throw DivisionByZero("polynomial division by zero");
    Poly r = *this;
    std::vector<Rational> q;
    int dd = d.degree();
    if (r.degree() >= dd)
        q.assign(static_cast<std::size_t>(r.degree() - dd + 1), Rational(0));
    const Rational& lc = d.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rational f = r.leading() / lc;
        q[static_cast<std::size_t>(k)] = f;
        std::vector<Rational> sub(static_cast<std::size_t>(k), Rational(0));
        sub.insert(sub.end(), d.coeffs_.begin(), d.coeffs_.end());
        Poly s(std::move(sub));
        r = r - s * f;
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1)
        return Poly();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

Poly Poly::taylor_shift(const Rational& c) const {
    // Repeated synthetic division by (t - c); the remainders are the
    // coefficients of p(c + s) in increasing order.
    if (is_zero())
        return Poly();
    std::vector<Rational> a(coeffs_);
    std::vector<Rational> out;
    out.reserve(a.size());
    while (!a.empty()) {
        if (a.size() == 1) {
            out.push_back(a[0]);
            break;
        }
        std::vector<Rational> q(a.size() - 1, Rational(0));
        q[a.size() - 2] = a[a.size() - 1];
        for (std::size_t i = a.size() - 2; i >= 1; --i)
            q[i - 1] = a[i] + c * q[i];
        out.push_back(a[0] + c * q[0]);
        a = std::move(q);
    }
    return Poly(std::move(out));
}

Poly Poly::reversed() const {
    if (is_zero())
        throw ZeroFunction("reversal of the zero polynomial");
    std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(c));
}

Poly Poly::monic() const {
    if (is_zero())
        throw ZeroFunction("monic form of the zero polynomial");
    return *this * leading().inverse();
}

int Poly::root_multiplicity(const Rational& c) const {
    if (is_zero())
        throw ZeroFunction("root multiplicity in the zero polynomial");
    Poly p = *this;
    Poly lin({-c, Rational(1)});
    int m = 0;
    while (!p.is_constant()) {
        auto [q, r] = p.divrem(lin);
        if (!r.is_zero())
            break;
        ++m;
        p = std::move(q);
    }
    return m;
}

std::string Poly::str(const char* var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one())
                os << a.str() << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

int Poly::cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i])
            return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
    }
    return 0;
}

} // namespace addchow
