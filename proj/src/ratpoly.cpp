#include "polarmod/ratpoly.hpp"

#include <algorithm>
#include <sstream>

namespace polarmod {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            // Accept plain integers and decimal literals with exact meaning.
            const auto dot = s.find('.');
            if (dot == std::string::npos) return Rational(BigInt(s));
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            const std::size_t frac_len = s.size() - dot - 1;
            BigInt den = 1;
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rational(BigInt(digits), den);
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + s + "'");
    }
}

CRational CRational::operator/(const CRational& o) const {
    const Rational d = o.re * o.re + o.im * o.im;
    if (d == 0) throw ZeroPolynomial("division by zero rational");
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

RatPoly::RatPoly(std::vector<CRational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const CRational& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({CRational(Rational(0)), CRational(Rational(1))}); }

bool RatPoly::is_real() const {
    for (const CRational& c : coeffs_)
        if (!c.is_real()) return false;
    return true;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<CRational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<CRational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<CRational> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-() const {
    std::vector<CRational> c = coeffs_;
    for (CRational& z : c) z = CRational(Rational(0)) - z;
    return RatPoly(std::move(c));
}

CRational RatPoly::eval(const Rational& x) const {
    CRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * CRational(x) + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<CRational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * CRational(Rational(static_cast<long>(i)));
    return RatPoly(std::move(c));
}

RatPoly RatPoly::conj() const {
    std::vector<CRational> c = coeffs_;
    for (CRational& z : c) z = z.conj();
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("polynomial division by zero");
    RatPoly rem = *this;
    std::vector<CRational> quot(
        rem.degree() >= d.degree() ? std::size_t(rem.degree() - d.degree() + 1) : 0);
    const CRational lead = d.coeffs_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const std::size_t shift = std::size_t(rem.degree() - d.degree());
        const CRational q = rem.coeffs_.back() / lead;
        quot[shift] = q;
        std::vector<CRational> sub(shift + d.coeffs_.size());
        for (std::size_t i = 0; i < d.coeffs_.size(); ++i) sub[shift + i] = q * d.coeffs_[i];
        rem = rem - RatPoly(std::move(sub));
    }
    return {RatPoly(std::move(quot)), rem};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // Normalize to monic.
    const CRational lead = a.coeffs().back();
    std::vector<CRational> c = a.coeffs();
    for (CRational& z : c) z = z / lead;
    return RatPoly(std::move(c));
}

RatPoly square_free_part(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("square-free part of zero polynomial");
    if (p.degree() == 0) return p;
    const RatPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return p.divmod(g).first;
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    }
    return out;
}

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const RatPoly& p : chain) {
        const int s = sign_of(p.eval(x).re);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("root search on zero polynomial");
    if (!p.is_real()) throw SchemaError("rational root search needs a real polynomial");

    RatPoly q = square_free_part(p);
    std::vector<Rational> roots;

    // Strip roots at zero.
    while (!q.is_zero() && q.coeff(0).is_zero() && q.degree() > 0) {
        roots.push_back(Rational(0));
        std::vector<CRational> c(q.coeffs().begin() + 1, q.coeffs().end());
        q = RatPoly(std::move(c));
        if (!roots.empty() && roots.size() > 1 && roots[roots.size() - 2] == 0) roots.pop_back();
    }
    if (q.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }

    // Clear denominators to a primitive integer polynomial.
    BigInt den_lcm = 1;
    for (const CRational& c : q.coeffs()) {
        const BigInt d = boost::multiprecision::denominator(c.re);
        den_lcm = boost::multiprecision::lcm(den_lcm, d);
    }
    std::vector<BigInt> ic(q.coeffs().size());
    for (std::size_t i = 0; i < ic.size(); ++i) {
        const Rational v = q.coeff(i).re * den_lcm;
        ic[i] = boost::multiprecision::numerator(v);
    }

    const BigInt a0 = ic.front();
    const BigInt an = ic.back();
    for (const BigInt& pnum : divisors(a0)) {
        for (const BigInt& pden : divisors(an)) {
            for (int sgn : {1, -1}) {
                const Rational cand(sgn * pnum, pden);
                if (q.eval(cand).is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

int real_root_count(const RatPoly& p, const Rational& a, const Rational& b, bool include_a,
                    bool include_b) {
    if (p.is_zero()) throw ZeroPolynomial("Sturm count on zero polynomial");
    if (!p.is_real()) throw SchemaError("Sturm count needs a real polynomial");
    if (b < a) throw SchemaError("Sturm interval reversed");

    RatPoly q = square_free_part(p);
    const bool root_a = q.eval(a).is_zero();
    const bool root_b = (a != b) && q.eval(b).is_zero();

    // Divide out the endpoints so the chain sees none at a or b.
    for (const auto& [is_root, point] : {std::pair{root_a, a}, std::pair{root_b, b}}) {
        if (!is_root) continue;
        const RatPoly lin({CRational(-point), CRational(Rational(1))});
        q = q.divmod(lin).first;
    }

    int interior = 0;
    if (a != b && q.degree() >= 1) {
        const std::vector<RatPoly> chain = sturm_chain(q);
        interior = sign_variations(chain, a) - sign_variations(chain, b);
    }
    int total = interior;
    if (root_a && include_a) ++total;
    if (root_b && include_b) ++total;
    if (a == b && include_a && include_b && square_free_part(p).eval(a).is_zero()) total = 1;
    return total;
}

int sturm_count(const RatPoly& p, const Rational& a, const Rational& b) {
    return real_root_count(p, a, b, /*include_a=*/true, /*include_b=*/false);
}

}  // namespace polarmod
