#ifndef SMF_RATIONAL_HPP
#define SMF_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace smf {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(p, q) does not canonicalize on its own.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q"; lowest terms enforced on load.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Coefficients of single theta constants take values in Z[i]; products of
// interest end up rational, but intermediate arithmetic must keep the
// imaginary part.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re, -a.im);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return cmp(a.re, b.re) == 0 && cmp(a.im, b.im) == 0;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // i^k for the unit coefficients of theta terms
    static GaussianRational i_power(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussianRational(Rational(1));
            case 1: return GaussianRational(Rational(0), Rational(1));
            case 2: return GaussianRational(Rational(-1));
            default: return GaussianRational(Rational(0), Rational(-1));
        }
    }

    std::string str() const {
        if (is_real()) return re.get_str();
        return re.get_str() + (sgn(im) < 0 ? "" : "+") + im.get_str() + "i";
    }
};

}  // namespace smf

#endif
