#include "addchow/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace addchow {

Poly PolyFactors::expand() const {
    Poly p = Poly::constant(coeff);
    for (const auto& [f, e] : factors)
        p = p * f.pow_int(e);
    return p;
}

void RatFunc::reduce() {
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        fnum_.reset();
        fden_.reset();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    bool cancelled = g.degree() > 0;
    if (cancelled) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
        den_ = den_ * lc.inverse();
        num_ = num_ * lc.inverse();
    }
    if (cancelled) {
        fnum_.reset();
        fden_.reset();
    }
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

RatFunc RatFunc::from_factors(PolyFactors num, PolyFactors den) {
    Poly ne = num.expand();
    Poly de = den.expand();
    RatFunc f(ne, de);
    if (f.is_zero())
        return f;
    // Keep the factored forms only when no cancellation occurred; rescale the
    // constants so the expansions match the canonical (monic-den) num/den.
    Poly g = Poly::gcd(ne, de);
    if (g.degree() == 0) {
        Rational dlc = de.leading();
        den.coeff /= dlc;
        num.coeff /= dlc;
        f.fnum_ = std::move(num);
        f.fden_ = std::move(den);
    }
    return f;
}

Rational RatFunc::constant_value() const {
    if (!is_constant())
        throw InvalidParameter("not a constant rational function");
    if (num_.is_zero())
        return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    if (r.fnum_)
        r.fnum_->coeff = -r.fnum_->coeff;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of the zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    Rational lc = r.den_.leading();
    if (!lc.is_one()) {
        r.den_ = r.den_ * lc.inverse();
        r.num_ = r.num_ * lc.inverse();
    }
    if (fnum_ && fden_) {
        PolyFactors n = *fden_, d = *fnum_;
        n.coeff /= lc;
        d.coeff /= lc;
        r.fnum_ = std::move(n);
        r.fden_ = std::move(d);
    }
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

namespace {

void merge_factor(std::vector<std::pair<Poly, int>>& out, const Poly& f, int e) {
    for (auto& [g, k] : out) {
        if (g == f) {
            k += e;
            return;
        }
    }
    out.emplace_back(f, e);
}

PolyFactors merge_factors(const PolyFactors& x, const PolyFactors& y) {
    PolyFactors r;
    r.coeff = x.coeff * y.coeff;
    r.factors = x.factors;
    for (const auto& [f, e] : y.factors)
        merge_factor(r.factors, f, e);
    return r;
}

} // namespace

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero())
        return RatFunc();
    if (a.fnum_ && a.fden_ && b.fnum_ && b.fden_)
        return RatFunc::from_factors(merge_factors(*a.fnum_, *b.fnum_),
                                     merge_factors(*a.fden_, *b.fden_));
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow_int(int e) const {
    if (e == 0)
        return RatFunc(Rational(1));
    if (e < 0)
        return inverse().pow_int(-e);
    if (fnum_ && fden_) {
        PolyFactors n = *fnum_, d = *fden_;
        n.coeff = n.coeff.pow_int(e);
        d.coeff = d.coeff.pow_int(e);
        for (auto& [f, k] : n.factors)
            k *= e;
        for (auto& [f, k] : d.factors)
            k *= e;
        return from_factors(std::move(n), std::move(d));
    }
    return RatFunc(num_.pow_int(e), den_.pow_int(e));
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::dlog() const {
    if (is_zero())
        throw ZeroFunction("dlog of the zero function");
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * num_);
}

P1Value RatFunc::eval(const PointP1& p) const {
    if (p.is_infinity()) {
        int dn = num_.degree(), dd = den_.degree();
        if (is_zero())
            return P1Value::finite(Rational(0));
        if (dn > dd)
            return P1Value::infinity();
        if (dn < dd)
            return P1Value::finite(Rational(0));
        return P1Value::finite(num_.leading() / den_.leading());
    }
    Rational dv = den_.eval(p.value);
    if (dv.is_zero())
        return P1Value::infinity(); // num(p) != 0 because the fraction is reduced
    return P1Value::finite(num_.eval(p.value) / dv);
}

std::string RatFunc::str(const char* var) const {
    auto factor_str = [&](const PolyFactors& pf, bool force_parens) {
        std::ostringstream os;
        bool first = true;
        if (!pf.coeff.is_one() || pf.factors.empty()) {
            os << pf.coeff.str();
            first = false;
        }
        for (const auto& [f, e] : pf.factors) {
            if (!first)
                os << "*";
            first = false;
            os << "(" << f.str(var) << ")";
            if (e != 1)
                os << "^" << e;
        }
        std::string s = os.str();
        if (force_parens && (pf.factors.size() + (pf.coeff.is_one() ? 0 : 1)) > 1)
            return "(" + s + ")";
        return s;
    };
    if (den_ == Poly::constant(Rational(1))) {
        if (fnum_)
            return factor_str(*fnum_, false);
        return num_.str(var);
    }
    std::ostringstream os;
    if (fnum_ && fden_) {
        os << factor_str(*fnum_, true) << "/" << factor_str(*fden_, true);
    } else {
        os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
    }
    return os.str();
}

int RatFunc::cmp(const RatFunc& a, const RatFunc& b) {
    int c = Poly::cmp(a.num_, b.num_);
    if (c != 0)
        return c;
    return Poly::cmp(a.den_, b.den_);
}

// ---------------------------------------------------------------------------
// Root extraction
// ---------------------------------------------------------------------------

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0)
        n = -n;
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n)
                divs.push_back(n / d);
        }
    }
    return divs;
}

// Primitive integer polynomial with the same roots.
Poly integer_primitive(const Poly& p) {
    Int lcm_den(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Rational> scaled;
    scaled.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        scaled.push_back(c * Rational(lcm_den));
    Poly q{std::vector<Rational>(scaled)};
    Int content(0);
    for (const auto& c : q.coeffs())
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.num().get_mpz_t());
    if (content > 1) {
        std::vector<Rational> out;
        out.reserve(q.coeffs().size());
        for (const auto& c : q.coeffs())
            out.push_back(c / Rational(content));
        q = Poly(std::move(out));
    }
    return q;
}

} // namespace

std::map<Rational, int> rational_roots_complete(const Poly& p) {
    if (p.is_zero())
        throw ZeroFunction("roots of the zero polynomial");
    std::map<Rational, int> roots;
    if (p.is_constant())
        return roots;

    Poly q = p;
    int m0 = q.trailing_order();
    if (m0 > 0) {
        roots[Rational(0)] = m0;
        std::vector<Rational> c(q.coeffs().begin() + m0, q.coeffs().end());
        q = Poly(std::move(c));
    }
    if (q.is_constant())
        return roots;

    Poly zi = integer_primitive(q);
    auto p_divs = positive_divisors(zi.coeff(0).num());
    auto q_divs = positive_divisors(zi.leading().num());
    for (const Int& pn : p_divs) {
        for (const Int& qd : q_divs) {
            for (int s : {1, -1}) {
                Rational cand(s * pn, qd);
                if (roots.count(cand))
                    continue;
                int m = q.root_multiplicity(cand);
                if (m > 0) {
                    roots[cand] = m;
                    Poly lin({-cand, Rational(1)});
                    for (int i = 0; i < m; ++i)
                        q = q.divrem(lin).first;
                }
            }
        }
    }

    if (q.degree() == 2) {
        // Quadratic formula; a rational-square discriminant would have given
        // rational roots already, so this splits only in degenerate reruns.
        Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
        Rational disc = b * b - Rational(4) * a * c;
        Rational root;
        if (disc.is_square(&root)) {
            Rational r1 = (-b + root) / (Rational(2) * a);
            Rational r2 = (-b - root) / (Rational(2) * a);
            roots[r1] += 1;
            roots[r2] += 1;
            q = Poly::constant(a);
        }
    }
    if (q.degree() >= 1)
        throw UnsupportedFactorization("irreducible factor of degree " +
                                       std::to_string(q.degree()) +
                                       " with non-rational roots: " + q.str());
    return roots;
}

int ord_at(const RatFunc& f, const PointP1& p) {
    if (f.is_zero())
        throw ZeroFunction("order of the zero function");
    if (p.is_infinity())
        return f.den().degree() - f.num().degree();
    return f.num().root_multiplicity(p.value) - f.den().root_multiplicity(p.value);
}

namespace {

void roots_into(const Poly& poly, const std::optional<PolyFactors>& factored, int scale,
                Divisor& out) {
    if (factored) {
        for (const auto& [f, e] : factored->factors) {
            if (f.is_constant())
                continue;
            for (const auto& [r, m] : rational_roots_complete(f))
                out[PointP1::finite(r)] += scale * e * m;
        }
        return;
    }
    for (const auto& [r, m] : rational_roots_complete(poly))
        out[PointP1::finite(r)] += scale * m;
}

} // namespace

Divisor zeros_poles(const RatFunc& f, Target target) {
    Divisor d;
    if (target == Target::Zero) {
        if (f.is_zero())
            throw ZeroFunction("zero divisor of the zero function");
        if (f.is_constant())
            return d;
        roots_into(f.num(), f.factored_num(), 1, d);
        int at_inf = f.den().degree() - f.num().degree();
        if (at_inf > 0)
            d[PointP1::infinity()] += at_inf;
    } else {
        if (f.is_zero() || f.is_constant())
            return d;
        roots_into(f.den(), f.factored_den(), 1, d);
        int at_inf = f.num().degree() - f.den().degree();
        if (at_inf > 0)
            d[PointP1::infinity()] += at_inf;
    }
    return d;
}

namespace {

// Coefficients 0..n of the inverse of the unit power series d (d[0] != 0).
std::vector<Rational> series_inverse(const std::vector<Rational>& d, int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
    Rational d0inv = d[0].inverse();
    b[0] = d0inv;
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j) {
            Rational dj = j < static_cast<int>(d.size()) ? d[static_cast<std::size_t>(j)]
                                                         : Rational(0);
            s += dj * b[static_cast<std::size_t>(k - j)];
        }
        b[static_cast<std::size_t>(k)] = -s * d0inv;
    }
    return b;
}

} // namespace

std::vector<Rational> laurent_coeffs(const RatFunc& f, const PointP1& p, int from, int to) {
    if (f.is_zero())
        throw ZeroFunction("Laurent expansion of the zero function");
    if (from > to)
        throw InvalidParameter("empty Laurent coefficient range");

    // Write f = s^m * n1(s)/d1(s) in the local parameter s, with n1(0), d1(0) != 0.
    std::vector<Rational> n1, d1;
    int m;
    if (p.is_infinity()) {
        // s = u = 1/t: f(1/u) = u^(deg den - deg num) * rev(num)(u)/rev(den)(u)
        const Poly n = f.num().reversed();
        const Poly d = f.den().reversed();
        n1 = n.coeffs();
        d1 = d.coeffs();
        m = f.den().degree() - f.num().degree();
    } else {
        const Poly n = f.num().taylor_shift(p.value);
        const Poly d = f.den().taylor_shift(p.value);
        int a = n.trailing_order();
        int b = d.trailing_order();
        m = a - b;
        n1.assign(n.coeffs().begin() + a, n.coeffs().end());
        d1.assign(d.coeffs().begin() + b, d.coeffs().end());
    }

    std::vector<Rational> out(static_cast<std::size_t>(to - from + 1), Rational(0));
    int order = to - m;
    if (order >= 0) {
        std::vector<Rational> inv = series_inverse(d1, order);
        for (int k = std::max(from, m); k <= to; ++k) {
            Rational c(0);
            for (int j = 0; j <= k - m && j < static_cast<int>(n1.size()); ++j)
                c += n1[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - m - j)];
            out[static_cast<std::size_t>(k - from)] = c;
        }
    }
    return out;
}

Rational residue_at(const RatFunc& f, const PointP1& p) {
    if (f.is_zero())
        return Rational(0);
    if (p.is_infinity())
        return -laurent_coeffs(f, p, 1, 1)[0];
    return laurent_coeffs(f, p, -1, -1)[0];
}

} // namespace addchow
