#pragma once

// Exact univariate polynomials over Q and interpolation from exact samples.

#include <gmpxx.h>

#include "hallkit/error.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hallkit {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string rational_to_string(const Rational& r);  // always "num/den"
Rational rational_from_string(const std::string& s);
/// q^n for integer q and any (possibly negative) exponent.
Rational rational_pow(long q, long n);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(const Rational& c);
    static RatPoly T();  // the variable
    static RatPoly monomial(int deg, const Rational& c = 1);

    /// Ascending coefficients; empty for the zero polynomial.
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;
    Rational eval(long x) const { return eval(Rational(x)); }
    /// p(T^d).
    RatPoly compose_power(int d) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rational& c);
    RatPoly operator-() const;

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Human form, e.g. "2T^2+2T+1" or "1/2T^2-1/2T".
    std::string to_string() const;
    /// Machine form: "num/den" strings, ascending degree.
    std::vector<std::string> to_strings() const;
    static RatPoly from_strings(const std::vector<std::string>& s);

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

RatPoly pow(const RatPoly& p, int n);

bool is_integer_poly(const RatPoly& p);

struct Sample {
    long point;
    Rational value;
};

/// The unique polynomial of degree <= degree_bound through the first
/// degree_bound+1 samples (Newton form). Every remaining sample must agree
/// exactly, otherwise VerificationError; fewer than degree_bound+1 samples or
/// repeated points raise InputError. A negative bound means "identically zero".
RatPoly interpolate(const std::vector<Sample>& samples, int degree_bound);

}  // namespace hallkit
