#pragma once

#include <optional>
#include <vector>

#include "polarmod/ratpoly.hpp"

namespace polarmod {

// Finite union of disjoint closed intervals with rational endpoints.
struct Domain1D {
    struct Interval {
        Rational lo, hi;
    };
    std::vector<Interval> components;

    Domain1D() = default;
    explicit Domain1D(std::vector<Interval> comps);
    bool operator==(const Domain1D& o) const;
};

// Exact piecewise rational function on a Domain1D.  Each component carries a
// contiguous partition into pieces; every piece holds num/den polynomials
// whose denominator has no root on the closed piece.  Denominators are kept
// real so conjugation touches numerators only.
class PwRational {
public:
    struct Piece {
        Rational lo, hi;
        RatPoly num, den;
    };

    PwRational() = default;
    PwRational(Domain1D domain, std::vector<std::vector<Piece>> pieces);

    static PwRational constant(const Domain1D& d, const CRational& c);
    static PwRational coordinate(const Domain1D& d);  // f(x) = x
    // Single rational function on the whole domain.
    static PwRational from_fraction(const Domain1D& d, RatPoly num, RatPoly den);

    const Domain1D& domain() const { return domain_; }
    const std::vector<Piece>& component_pieces(std::size_t i) const { return pieces_[i]; }

    bool is_real() const;
    // True when the function vanishes identically on component i.
    bool component_is_zero(std::size_t i) const;
    bool is_identically_zero() const;

    CRational eval(const Rational& x) const;

    PwRational operator+(const PwRational& o) const;
    PwRational operator-(const PwRational& o) const;
    PwRational operator*(const PwRational& o) const;
    PwRational conj() const;

    bool operator==(const PwRational& o) const;

private:
    Domain1D domain_;
    std::vector<std::vector<Piece>> pieces_;
};

PwRational pw_star(const PwRational& f);

// Exact zero set of a real piecewise rational function.
struct ZeroSet {
    struct ComponentPart {
        std::vector<Domain1D::Interval> intervals;  // maximal closed zero intervals
        std::vector<Rational> points;               // isolated rational roots
    };
    std::vector<ComponentPart> parts;  // one per domain component
};

// Throws UnsupportedIrrationalRoot when an entry has a real but irrational
// root inside the domain.
ZeroSet zero_set(const PwRational& f);

// The range closure of multiplication by f is orthogonally complemented
// exactly when the zero set is a union of whole domain components.  On
// failure the certificate is a zero-set point inside the closure of the
// support.
struct ClopenVerdict {
    bool clopen = false;
    std::optional<Rational> certificate;
};

ClopenVerdict is_clopen(const ZeroSet& z, const Domain1D& domain);

PwRational pw_abs(const PwRational& f);
// +-1 on components where f does not vanish, 0 on components where it does;
// requires a clopen zero set.
PwRational pw_sign_support(const PwRational& f);
// 1/f on the support components, 0 elsewhere; requires a clopen zero set.
PwRational pw_recip_support(const PwRational& f);

}  // namespace polarmod
