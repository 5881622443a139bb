#include "polarmod/funbackend.hpp"

namespace polarmod {

DiagOperator::DiagOperator(Domain1D d, std::vector<PwRational> e)
    : domain(std::move(d)), entries(std::move(e)) {
    if (entries.empty()) throw SchemaError("diagonal operator needs at least one entry");
    for (const PwRational& f : entries)
        if (!(f.domain() == domain)) throw DomainMismatch("entry domain differs");
}

bool DiagOperator::is_real() const {
    for (const PwRational& f : entries)
        if (!f.is_real()) return false;
    return true;
}

ComplementReport diag_complement_check(const DiagOperator& t) {
    if (!t.is_real()) throw SchemaError("complement check needs real-valued entries");
    ComplementReport rep;
    rep.complemented = true;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const ZeroSet z = zero_set(t.entries[i]);
        const ClopenVerdict v = is_clopen(z, t.domain);
        rep.entries.push_back({v.clopen, v.certificate});
        if (!v.clopen && rep.complemented) {
            rep.complemented = false;
            rep.failing_entry = i;
            rep.certificate = v.certificate;
        }
    }
    return rep;
}

namespace {

void require_complemented(const DiagOperator& t) {
    const ComplementReport rep = diag_complement_check(t);
    if (!rep.complemented)
        throw NotComplemented("entry " + std::to_string(*rep.failing_entry) +
                                  " has a non-clopen zero set",
                              rational_to_string(*rep.certificate));
}

}  // namespace

DiagPolar diag_polar(const DiagOperator& t) {
    require_complemented(t);
    std::vector<PwRational> sign, abs;
    for (const PwRational& f : t.entries) {
        sign.push_back(pw_sign_support(f));
        abs.push_back(pw_abs(f));
    }
    return {DiagOperator(t.domain, std::move(sign)), DiagOperator(t.domain, std::move(abs))};
}

DiagOperator diag_pinv(const DiagOperator& t) {
    require_complemented(t);
    std::vector<PwRational> recip;
    for (const PwRational& f : t.entries) recip.push_back(pw_recip_support(f));
    return DiagOperator(t.domain, std::move(recip));
}

DiagOperator diag_compose(const DiagOperator& a, const DiagOperator& b) {
    if (a.rank() != b.rank()) throw ShapeMismatch("diagonal ranks differ");
    std::vector<PwRational> e;
    for (std::size_t i = 0; i < a.rank(); ++i) e.push_back(a.entries[i] * b.entries[i]);
    return DiagOperator(a.domain, std::move(e));
}

DiagOperator diag_sub(const DiagOperator& a, const DiagOperator& b) {
    if (a.rank() != b.rank()) throw ShapeMismatch("diagonal ranks differ");
    std::vector<PwRational> e;
    for (std::size_t i = 0; i < a.rank(); ++i) e.push_back(a.entries[i] - b.entries[i]);
    return DiagOperator(a.domain, std::move(e));
}

bool diag_equal(const DiagOperator& a, const DiagOperator& b) {
    if (a.rank() != b.rank()) return false;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!(a.entries[i] == b.entries[i])) return false;
    return true;
}

DiagOperator diag_star(const DiagOperator& a) {
    std::vector<PwRational> e;
    for (const PwRational& f : a.entries) e.push_back(pw_star(f));
    return DiagOperator(a.domain, std::move(e));
}

}  // namespace polarmod
