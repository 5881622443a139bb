#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "polarmod/errors.hpp"

namespace polarmod {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Complex number with exact rational parts.  The function backend keeps
// denominators real, so only numerators ever carry an imaginary part.
struct CRational {
    Rational re, im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRational operator+(const CRational& o) const { return {re + o.re, im + o.im}; }
    CRational operator-(const CRational& o) const { return {re - o.re, im - o.im}; }
    CRational operator*(const CRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRational operator/(const CRational& o) const;
    CRational conj() const { return {re, -im}; }
    bool operator==(const CRational& o) const { return re == o.re && im == o.im; }
};

// Polynomial with exact complex-rational coefficients, lowest degree first.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<CRational> coeffs);
    static RatPoly constant(const CRational& c);
    static RatPoly x();

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<CRational>& coeffs() const { return coeffs_; }
    CRational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : CRational();
    }

    bool is_real() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    CRational eval(const Rational& x) const;
    RatPoly derivative() const;
    RatPoly conj() const;

    // Euclidean division; denominator-free only in the field sense.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

private:
    std::vector<CRational> coeffs_;
};

// Monic gcd over the rationals.
RatPoly poly_gcd(RatPoly a, RatPoly b);
RatPoly square_free_part(const RatPoly& p);

// All rational roots of a real polynomial, ascending, with multiplicity
// stripped.  Throws ZeroPolynomial on the zero polynomial.
std::vector<Rational> rational_roots(const RatPoly& p);

// Exact count of distinct real roots of a real polynomial in the half-open
// interval [a, b), by Sturm chains.
int sturm_count(const RatPoly& p, const Rational& a, const Rational& b);

// Distinct real roots in an interval with explicit endpoint inclusion.
int real_root_count(const RatPoly& p, const Rational& a, const Rational& b, bool include_a,
                    bool include_b);

}  // namespace polarmod
