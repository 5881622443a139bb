#include "polarmod/pwrational.hpp"

#include <algorithm>

namespace polarmod {

Domain1D::Domain1D(std::vector<Interval> comps) : components(std::move(comps)) {
    if (components.empty()) throw SchemaError("domain must be nonempty");
    for (const Interval& iv : components)
        if (!(iv.lo < iv.hi)) throw SchemaError("domain intervals need positive length");
    for (std::size_t i = 0; i + 1 < components.size(); ++i)
        if (!(components[i].hi < components[i + 1].lo))
            throw SchemaError("domain intervals must be sorted and disjoint");
}

bool Domain1D::operator==(const Domain1D& o) const {
    if (components.size() != o.components.size()) return false;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].lo != o.components[i].lo || components[i].hi != o.components[i].hi)
            return false;
    return true;
}

namespace {

void check_piece(const PwRational::Piece& p) {
    if (!(p.lo < p.hi)) throw SchemaError("piece needs positive length");
    if (p.den.is_zero()) throw SchemaError("piece denominator is zero");
    if (!p.den.is_real()) throw SchemaError("piece denominators must be real");
    if (real_root_count(p.den, p.lo, p.hi, true, true) != 0)
        throw SchemaError("piece denominator vanishes on the piece");
}

CRational eval_piece(const PwRational::Piece& p, const Rational& x) {
    return p.num.eval(x) / p.den.eval(x);
}

}  // namespace

PwRational::PwRational(Domain1D domain, std::vector<std::vector<Piece>> pieces)
    : domain_(std::move(domain)), pieces_(std::move(pieces)) {
    if (pieces_.size() != domain_.components.size())
        throw SchemaError("piece list count differs from component count");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& comp = domain_.components[i];
        const auto& ps = pieces_[i];
        if (ps.empty()) throw SchemaError("component without pieces");
        if (ps.front().lo != comp.lo || ps.back().hi != comp.hi)
            throw SchemaError("pieces do not cover their component");
        for (std::size_t j = 0; j < ps.size(); ++j) {
            check_piece(ps[j]);
            if (j + 1 < ps.size()) {
                if (ps[j].hi != ps[j + 1].lo) throw SchemaError("pieces are not contiguous");
                // Continuity at the shared breakpoint, checked exactly.
                if (!(eval_piece(ps[j], ps[j].hi) == eval_piece(ps[j + 1], ps[j].hi)))
                    throw SchemaError("function is discontinuous at a breakpoint");
            }
        }
    }
}

PwRational PwRational::constant(const Domain1D& d, const CRational& c) {
    std::vector<std::vector<Piece>> ps;
    for (const auto& comp : d.components)
        ps.push_back({Piece{comp.lo, comp.hi, RatPoly::constant(c),
                            RatPoly::constant(CRational(Rational(1)))}});
    return PwRational(d, std::move(ps));
}

PwRational PwRational::coordinate(const Domain1D& d) {
    std::vector<std::vector<Piece>> ps;
    for (const auto& comp : d.components)
        ps.push_back(
            {Piece{comp.lo, comp.hi, RatPoly::x(), RatPoly::constant(CRational(Rational(1)))}});
    return PwRational(d, std::move(ps));
}

PwRational PwRational::from_fraction(const Domain1D& d, RatPoly num, RatPoly den) {
    std::vector<std::vector<Piece>> ps;
    for (const auto& comp : d.components) ps.push_back({Piece{comp.lo, comp.hi, num, den}});
    return PwRational(d, std::move(ps));
}

bool PwRational::is_real() const {
    for (const auto& comp : pieces_)
        for (const Piece& p : comp)
            if (!p.num.is_real()) return false;
    return true;
}

bool PwRational::component_is_zero(std::size_t i) const {
    for (const Piece& p : pieces_[i])
        if (!p.num.is_zero()) return false;
    return true;
}

bool PwRational::is_identically_zero() const {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (!component_is_zero(i)) return false;
    return true;
}

CRational PwRational::eval(const Rational& x) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        for (const Piece& p : pieces_[i])
            if (p.lo <= x && x <= p.hi) return eval_piece(p, x);
    throw SchemaError("evaluation point outside the domain");
}

namespace {

using Piece = PwRational::Piece;

// Reduce a rational function by the gcd of numerator and denominator.
void reduce(RatPoly& num, RatPoly& den) {
    if (num.is_zero()) {
        den = RatPoly::constant(CRational(Rational(1)));
        return;
    }
    const RatPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    // Keep the denominator real: multiply through by its conjugate if the
    // gcd introduced complex factors (den started real, so this is a no-op
    // in practice unless the gcd was complex).
    if (!den.is_real()) {
        const RatPoly dc = den.conj();
        num = num * dc;
        den = den * dc;
    }
}

std::vector<Piece> combine_component(const std::vector<Piece>& a, const std::vector<Piece>& b,
                                     int op) {
    // Common refinement of the two partitions.
    std::vector<Rational> cuts;
    for (const Piece& p : a) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    for (const Piece& p : b) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto find_piece = [](const std::vector<Piece>& ps, const Rational& lo,
                         const Rational& hi) -> const Piece& {
        for (const Piece& p : ps)
            if (p.lo <= lo && hi <= p.hi) return p;
        throw SchemaError("refinement outside partition");
    };

    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Piece& pa = find_piece(a, cuts[i], cuts[i + 1]);
        const Piece& pb = find_piece(b, cuts[i], cuts[i + 1]);
        RatPoly num, den;
        if (op == 0) {  // add
            num = pa.num * pb.den + pb.num * pa.den;
            den = pa.den * pb.den;
        } else if (op == 1) {  // sub
            num = pa.num * pb.den - pb.num * pa.den;
            den = pa.den * pb.den;
        } else {  // mul
            num = pa.num * pb.num;
            den = pa.den * pb.den;
        }
        reduce(num, den);
        out.push_back(Piece{cuts[i], cuts[i + 1], std::move(num), std::move(den)});
    }
    return out;
}

}  // namespace

PwRational PwRational::operator+(const PwRational& o) const {
    if (!(domain_ == o.domain_)) throw DomainMismatch("domains differ");
    std::vector<std::vector<Piece>> ps;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        ps.push_back(combine_component(pieces_[i], o.pieces_[i], 0));
    return PwRational(domain_, std::move(ps));
}

PwRational PwRational::operator-(const PwRational& o) const {
    if (!(domain_ == o.domain_)) throw DomainMismatch("domains differ");
    std::vector<std::vector<Piece>> ps;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        ps.push_back(combine_component(pieces_[i], o.pieces_[i], 1));
    return PwRational(domain_, std::move(ps));
}

PwRational PwRational::operator*(const PwRational& o) const {
    if (!(domain_ == o.domain_)) throw DomainMismatch("domains differ");
    std::vector<std::vector<Piece>> ps;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        ps.push_back(combine_component(pieces_[i], o.pieces_[i], 2));
    return PwRational(domain_, std::move(ps));
}

PwRational PwRational::conj() const {
    std::vector<std::vector<Piece>> ps = pieces_;
    for (auto& comp : ps)
        for (Piece& p : comp) p.num = p.num.conj();
    return PwRational(domain_, std::move(ps));
}

bool PwRational::operator==(const PwRational& o) const {
    if (!(domain_ == o.domain_)) return false;
    return (*this - o).is_identically_zero();
}

PwRational pw_star(const PwRational& f) { return f.conj(); }

ZeroSet zero_set(const PwRational& f) {
    if (!f.is_real()) throw SchemaError("zero set needs a real-valued function");
    ZeroSet z;
    for (std::size_t i = 0; i < f.domain().components.size(); ++i) {
        ZeroSet::ComponentPart part;
        std::vector<Rational> points;
        std::optional<Domain1D::Interval> open_interval;

        auto flush = [&]() {
            if (open_interval) {
                part.intervals.push_back(*open_interval);
                open_interval.reset();
            }
        };

        for (const PwRational::Piece& p : f.component_pieces(i)) {
            if (p.num.is_zero()) {
                if (open_interval && open_interval->hi == p.lo)
                    open_interval->hi = p.hi;
                else {
                    flush();
                    open_interval = Domain1D::Interval{p.lo, p.hi};
                }
                continue;
            }
            // Nonzero piece: its rational roots within [lo, hi], verified
            // complete against the exact Sturm count.
            std::vector<Rational> roots;
            for (const Rational& r : rational_roots(p.num))
                if (p.lo <= r && r <= p.hi) roots.push_back(r);
            const int exact = real_root_count(p.num, p.lo, p.hi, true, true);
            if (static_cast<int>(roots.size()) != exact)
                throw UnsupportedIrrationalRoot(
                    "numerator has an irrational root inside the domain");
            for (const Rational& r : roots) points.push_back(r);
            flush();
        }
        flush();

        // Absorb points sitting on interval boundaries; dedupe the rest.
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        for (const Rational& r : points) {
            bool covered = false;
            for (const auto& iv : part.intervals)
                if (iv.lo <= r && r <= iv.hi) covered = true;
            if (!covered) part.points.push_back(r);
        }
        z.parts.push_back(std::move(part));
    }
    return z;
}

ClopenVerdict is_clopen(const ZeroSet& z, const Domain1D& domain) {
    ClopenVerdict v;
    for (std::size_t i = 0; i < domain.components.size(); ++i) {
        const auto& comp = domain.components[i];
        const auto& part = z.parts.at(i);
        if (!part.points.empty()) {
            v.clopen = false;
            v.certificate = part.points.front();
            return v;
        }
        for (const auto& iv : part.intervals) {
            if (iv.lo == comp.lo && iv.hi == comp.hi) continue;  // whole component
            // A proper zero interval has a boundary point inside the closure
            // of the support.
            v.clopen = false;
            v.certificate = (iv.hi < comp.hi) ? iv.hi : iv.lo;
            return v;
        }
    }
    v.clopen = true;
    return v;
}

namespace {

int sign_at(const PwRational::Piece& p, const Rational& x) {
    const Rational v = (p.num.eval(x) / p.den.eval(x)).re;
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

}  // namespace

PwRational pw_abs(const PwRational& f) {
    if (!f.is_real()) throw SchemaError("abs needs a real-valued function");
    (void)zero_set(f);  // surfaces UnsupportedIrrationalRoot before any split
    std::vector<std::vector<PwRational::Piece>> out;
    for (std::size_t i = 0; i < f.domain().components.size(); ++i) {
        std::vector<PwRational::Piece> comp_out;
        for (const PwRational::Piece& p : f.component_pieces(i)) {
            if (p.num.is_zero()) {
                comp_out.push_back(p);
                continue;
            }
            std::vector<Rational> cuts{p.lo};
            for (const Rational& r : rational_roots(p.num))
                if (p.lo < r && r < p.hi) cuts.push_back(r);
            cuts.push_back(p.hi);
            std::sort(cuts.begin(), cuts.end());
            for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
                const Rational mid = (cuts[j] + cuts[j + 1]) / 2;
                PwRational::Piece q{cuts[j], cuts[j + 1], p.num, p.den};
                if (sign_at(p, mid) < 0) q.num = -q.num;
                comp_out.push_back(std::move(q));
            }
        }
        out.push_back(std::move(comp_out));
    }
    return PwRational(f.domain(), std::move(out));
}

namespace {

// Shared skeleton for sign/recip on a clopen zero set.
PwRational support_transform(const PwRational& f, bool reciprocal) {
    if (!f.is_real()) throw SchemaError("support transform needs a real-valued function");
    const ZeroSet z = zero_set(f);
    const ClopenVerdict v = is_clopen(z, f.domain());
    if (!v.clopen)
        throw NotComplemented("zero set is not a union of components",
                              rational_to_string(*v.certificate));

    std::vector<std::vector<PwRational::Piece>> out;
    for (std::size_t i = 0; i < f.domain().components.size(); ++i) {
        const auto& comp = f.domain().components[i];
        std::vector<PwRational::Piece> comp_out;
        if (f.component_is_zero(i)) {
            comp_out.push_back({comp.lo, comp.hi, RatPoly(),
                                RatPoly::constant(CRational(Rational(1)))});
        } else if (reciprocal) {
            for (const PwRational::Piece& p : f.component_pieces(i))
                comp_out.push_back({p.lo, p.hi, p.den, p.num});
        } else {
            // Clopen zero set means no roots at all on this component, so
            // the sign is constant across it.
            const PwRational::Piece& first = f.component_pieces(i).front();
            const Rational mid = (first.lo + first.hi) / 2;
            const int s = sign_at(first, mid);
            comp_out.push_back({comp.lo, comp.hi,
                                RatPoly::constant(CRational(Rational(s))),
                                RatPoly::constant(CRational(Rational(1)))});
        }
        out.push_back(std::move(comp_out));
    }
    return PwRational(f.domain(), std::move(out));
}

}  // namespace

PwRational pw_sign_support(const PwRational& f) { return support_transform(f, false); }

PwRational pw_recip_support(const PwRational& f) { return support_transform(f, true); }

}  // namespace polarmod
