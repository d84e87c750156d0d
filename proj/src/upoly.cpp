#include "hallkit/upoly.hpp"

#include <set>

#include "hallkit/error.hpp"

namespace hallkit {

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw InputError("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

Rational rational_pow(long q, long n) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), BigInt(q).get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
    if (n >= 0) return Rational(p);
    Rational r(1, 1);
    r /= Rational(p);
    return r;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }
RatPoly RatPoly::T() { return monomial(1); }

RatPoly RatPoly::monomial(int deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return RatPoly(std::move(v));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

Rational RatPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RatPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + coeffs_[i];
    return r;
}

RatPoly RatPoly::compose_power(int d) const {
    if (d < 1) throw InputError("compose_power: exponent must be >= 1");
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(degree()) * d + 1, Rational(0));
    for (int i = 0; i <= degree(); ++i) v[static_cast<size_t>(i) * d] = coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) { return *this += -o; }

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(v);
    normalize();
    return *this;
}

RatPoly operator*(RatPoly a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    a.normalize();
    return a;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (c < 0) {
            s += "-";
            c = -c;
        } else if (!s.empty()) {
            s += "+";
        }
        if (c != 1 || i == 0) s += c.get_str();
        if (i >= 1) s += "T";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::vector<std::string> RatPoly::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs_) out.push_back(rational_to_string(c));
    return out;
}

RatPoly RatPoly::from_strings(const std::vector<std::string>& s) {
    std::vector<Rational> v;
    for (const auto& x : s) v.push_back(rational_from_string(x));
    return RatPoly(std::move(v));
}

RatPoly pow(const RatPoly& p, int n) {
    RatPoly r = RatPoly::constant(1);
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

bool is_integer_poly(const RatPoly& p) {
    for (const auto& c : p.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

RatPoly interpolate(const std::vector<Sample>& samples, int degree_bound) {
    std::set<long> seen;
    for (const auto& s : samples)
        if (!seen.insert(s.point).second) throw InputError("interpolate: repeated sample point " + std::to_string(s.point));

    if (degree_bound < 0) {
        for (const auto& s : samples)
            if (s.value != 0)
                throw VerificationError("interpolate: nonzero sample at " + std::to_string(s.point) +
                                        " but the degree bound forces the zero polynomial");
        return {};
    }
    const size_t need = static_cast<size_t>(degree_bound) + 1;
    if (samples.size() < need)
        throw InputError("interpolate: " + std::to_string(samples.size()) + " samples, need " + std::to_string(need));

    // Newton divided differences on the first `need` samples
    std::vector<Rational> dd(need);
    for (size_t i = 0; i < need; ++i) dd[i] = samples[i].value;
    for (size_t j = 1; j < need; ++j)
        for (size_t i = need - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(samples[i].point - samples[i - j].point);
            if (i == j) break;
        }

    // expand the Newton form into coefficients
    RatPoly result;
    RatPoly basis = RatPoly::constant(1);
    for (size_t k = 0; k < need; ++k) {
        result += basis * dd[k];
        basis *= RatPoly({Rational(-samples[k].point), Rational(1)});
    }

    for (const auto& s : samples)
        if (result.eval(s.point) != s.value)
            throw VerificationError("interpolate: sample (" + std::to_string(s.point) + ", " + s.value.get_str() +
                                    ") inconsistent with degree <= " + std::to_string(degree_bound) + " fit " +
                                    result.to_string());
    return result;
}

}  // namespace hallkit
