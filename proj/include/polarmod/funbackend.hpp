#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polarmod/pwrational.hpp"

namespace polarmod {

// Diagonal multiplication operator on C(X)^k, X a finite union of closed
// intervals.  Entries act entrywise; the adjoint conjugates entrywise, so
// real-valued entries are exactly the selfadjoint ones.
struct DiagOperator {
    Domain1D domain;
    std::vector<PwRational> entries;

    DiagOperator() = default;
    DiagOperator(Domain1D d, std::vector<PwRational> e);

    std::size_t rank() const { return entries.size(); }
    bool is_real() const;
};

struct EntryVerdict {
    bool clopen = false;
    std::optional<Rational> certificate;
};

struct ComplementReport {
    std::vector<EntryVerdict> entries;
    bool complemented = false;
    // First failing entry and its certificate point.
    std::optional<std::size_t> failing_entry;
    std::optional<Rational> certificate;
};

// The range closure of T is orthogonally complemented iff every entry's zero
// set is a union of whole components.
ComplementReport diag_complement_check(const DiagOperator& t);

struct DiagPolar {
    DiagOperator v;      // entrywise sign on the support
    DiagOperator abs_t;  // entrywise |f|
};

// Exact polar decomposition T = V |T|; throws NotComplemented with the
// certificate point when the complement check fails.
DiagPolar diag_polar(const DiagOperator& t);

// Exact generalized inverse, entrywise 1/f on the support and 0 elsewhere.
DiagOperator diag_pinv(const DiagOperator& t);

DiagOperator diag_compose(const DiagOperator& a, const DiagOperator& b);
DiagOperator diag_sub(const DiagOperator& a, const DiagOperator& b);
bool diag_equal(const DiagOperator& a, const DiagOperator& b);
DiagOperator diag_star(const DiagOperator& a);

}  // namespace polarmod
