#include "addchow/rational.hpp"

#include <cctype>
#include <ostream>

namespace addchow {

Rational Rational::parse(std::string_view s) {
    if (s.empty())
        throw InvalidParameter("empty rational literal");
    std::string t(s);
    for (char c : t) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw InvalidParameter("bad rational literal '" + t + "'");
    }
    mpq_class q;
    if (q.set_str(t, 10) != 0)
        throw InvalidParameter("bad rational literal '" + t + "'");
    if (q.get_den() == 0)
        throw DivisionByZero("rational literal with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow_int(long e) const {
    if (e == 0)
        return Rational(1);
    if (is_zero()) {
        if (e < 0)
            throw DivisionByZero("negative power of zero");
        return Rational(0);
    }
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(n, d);
}

bool Rational::is_square(Rational* root) const {
    if (v_ < 0)
        return false;
    Int n = num(), d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        *root = Rational(rn, rd);
    }
    return true;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

} // namespace addchow
