#include <fstream>

#include "polarmod/cli.hpp"

namespace polarmod::cli {

namespace {

void reject_unknown(const json& j, const std::vector<std::string>& allowed,
                    const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + " must be an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const std::string& a : allowed)
            if (key == a) ok = true;
        if (!ok) throw SchemaError("unknown field '" + key + "' in " + where);
    }
}

Complex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SchemaError(where + " must be a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

AlgElement element_from_json(const BlockProfile& p, const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != p.block_count())
        throw SchemaError(where + " must list " + std::to_string(p.block_count()) + " blocks");
    std::vector<CMat> blocks;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        const std::size_t n = p.sizes[b];
        const json& jb = j[b];
        if (!jb.is_array() || jb.size() != n)
            throw SchemaError(where + " block " + std::to_string(b) + " needs " +
                              std::to_string(n) + " rows");
        CMat m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!jb[r].is_array() || jb[r].size() != n)
                throw SchemaError(where + " block " + std::to_string(b) + " row " +
                                  std::to_string(r) + " needs " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = complex_from_json(jb[r][c], where + " block " + std::to_string(b));
        }
        if (!m.all_finite()) throw SchemaError(where + ": non-finite entry");
        blocks.push_back(std::move(m));
    }
    return AlgElement(p, std::move(blocks));
}

json element_to_json(const AlgElement& a) {
    json jblocks = json::array();
    for (std::size_t b = 0; b < a.block_count(); ++b) {
        const CMat& m = a.block(b);
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c)
                row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
            rows.push_back(std::move(row));
        }
        jblocks.push_back(std::move(rows));
    }
    return jblocks;
}

RatPoly poly_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + " must be a coefficient list");
    std::vector<CRational> c;
    for (const auto& e : j) {
        if (!e.is_string()) throw SchemaError(where + " coefficients must be 'p/q' strings");
        c.emplace_back(rational_from_string(e.get<std::string>()));
    }
    return RatPoly(std::move(c));
}

json poly_to_json(const RatPoly& p) {
    json out = json::array();
    for (const CRational& c : p.coeffs()) out.push_back(rational_to_string(c.re));
    return out;
}

PwRational pwrational_from_json(const Domain1D& d, const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != d.components.size())
        throw SchemaError(where + " must list pieces per domain component");
    std::vector<std::vector<PwRational::Piece>> comps;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& jc = j[i];
        if (!jc.is_array() || jc.empty())
            throw SchemaError(where + " component " + std::to_string(i) + " needs pieces");
        std::vector<PwRational::Piece> pieces;
        for (std::size_t k = 0; k < jc.size(); ++k) {
            const std::string pw =
                where + " component " + std::to_string(i) + " piece " + std::to_string(k);
            reject_unknown(jc[k], {"lo", "hi", "num", "den"}, pw);
            if (!jc[k].contains("lo") || !jc[k].contains("hi") || !jc[k].contains("num"))
                throw SchemaError(pw + " needs lo/hi/num");
            PwRational::Piece piece;
            piece.lo = rational_from_string(jc[k]["lo"].get<std::string>());
            piece.hi = rational_from_string(jc[k]["hi"].get<std::string>());
            piece.num = poly_from_json(jc[k]["num"], pw + " num");
            piece.den = jc[k].contains("den")
                            ? poly_from_json(jc[k]["den"], pw + " den")
                            : RatPoly::constant(CRational(Rational(1)));
            pieces.push_back(std::move(piece));
        }
        comps.push_back(std::move(pieces));
    }
    return PwRational(d, std::move(comps));
}

json pwrational_to_json(const PwRational& f) {
    json comps = json::array();
    for (std::size_t i = 0; i < f.domain().components.size(); ++i) {
        json pieces = json::array();
        for (const PwRational::Piece& p : f.component_pieces(i)) {
            json jp;
            jp["lo"] = rational_to_string(p.lo);
            jp["hi"] = rational_to_string(p.hi);
            jp["num"] = poly_to_json(p.num);
            jp["den"] = poly_to_json(p.den);
            pieces.push_back(std::move(jp));
        }
        comps.push_back(std::move(pieces));
    }
    return comps;
}

OperatorMatrix family_component(const BlockProfile& p, const std::string& name, std::size_t n) {
    std::vector<AlgElement> entries;
    double value = 1.0;
    if (name == "diag_inverse_index")
        value = 1.0 / double(n);
    else if (name == "diag_index")
        value = double(n);
    else if (name == "identity")
        value = 1.0;
    else
        throw SchemaError("unknown graded family '" + name + "'");
    std::vector<CMat> blocks;
    for (std::size_t sz : p.sizes) {
        CMat m(sz, sz);
        for (std::size_t i = 0; i < sz; ++i) m(i, i) = value;
        blocks.push_back(std::move(m));
    }
    entries.emplace_back(p, std::move(blocks));
    return OperatorMatrix(p, 1, 1, std::move(entries));
}

}  // namespace

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Matrix: return "matrix";
        case Backend::Function: return "function";
        case Backend::Graded: return "graded";
    }
    return "?";
}

json operator_to_json(const OperatorMatrix& op) {
    json j;
    j["domain_rank"] = op.domain_rank();
    j["codomain_rank"] = op.codomain_rank();
    json entries = json::array();
    for (std::size_t r = 0; r < op.domain_rank(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < op.codomain_rank(); ++c)
            row.push_back(element_to_json(op.entry(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

OperatorMatrix operator_from_json(const BlockProfile& p, const json& j, const std::string& where) {
    reject_unknown(j, {"domain_rank", "codomain_rank", "entries"}, where);
    if (!j.contains("domain_rank") || !j.contains("codomain_rank") || !j.contains("entries"))
        throw SchemaError(where + " needs domain_rank, codomain_rank, entries");
    const std::size_t k = j["domain_rank"].get<std::size_t>();
    const std::size_t m = j["codomain_rank"].get<std::size_t>();
    if (k == 0 || m == 0) throw SchemaError(where + " ranks must be positive");
    const json& je = j["entries"];
    if (!je.is_array() || je.size() != k)
        throw SchemaError(where + ".entries needs " + std::to_string(k) + " rows");
    std::vector<AlgElement> entries;
    for (std::size_t r = 0; r < k; ++r) {
        if (!je[r].is_array() || je[r].size() != m)
            throw SchemaError(where + ".entries row " + std::to_string(r) + " needs " +
                              std::to_string(m) + " entries");
        for (std::size_t c = 0; c < m; ++c)
            entries.push_back(element_from_json(
                p, je[r][c],
                where + ".entries[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    return OperatorMatrix(p, k, m, std::move(entries));
}

json diag_to_json(const DiagOperator& d) {
    json j;
    j["rank"] = d.rank();
    json entries = json::array();
    for (const PwRational& f : d.entries) entries.push_back(pwrational_to_json(f));
    j["entries"] = std::move(entries);
    return j;
}

ProblemFile parse_problem_json(const json& j) {
    reject_unknown(j, {"backend", "algebra", "operator", "components", "family", "options"},
                   "problem");
    if (!j.contains("backend") || !j["backend"].is_string())
        throw SchemaError("problem needs a 'backend' string");
    const std::string bk = j["backend"].get<std::string>();

    ProblemFile pf;
    if (bk == "matrix")
        pf.backend = Backend::Matrix;
    else if (bk == "function")
        pf.backend = Backend::Function;
    else if (bk == "graded")
        pf.backend = Backend::Graded;
    else
        throw SchemaError("unknown backend '" + bk + "'");

    if (j.contains("options")) {
        reject_unknown(j["options"], {"tol", "rank_tol"}, "options");
        if (j["options"].contains("tol")) pf.file_tol = j["options"]["tol"].get<double>();
        if (j["options"].contains("rank_tol"))
            pf.file_rank_tol = j["options"]["rank_tol"].get<double>();
    }

    if (!j.contains("algebra")) throw SchemaError("problem needs an 'algebra' descriptor");

    if (pf.backend == Backend::Function) {
        reject_unknown(j["algebra"], {"intervals"}, "algebra");
        if (!j["algebra"].contains("intervals"))
            throw SchemaError("function algebra needs 'intervals'");
        std::vector<Domain1D::Interval> ivs;
        for (const auto& pair : j["algebra"]["intervals"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw SchemaError("each interval must be a [lo, hi] pair of 'p/q' strings");
            ivs.push_back({rational_from_string(pair[0].get<std::string>()),
                           rational_from_string(pair[1].get<std::string>())});
        }
        const Domain1D domain(std::move(ivs));
        if (!j.contains("operator")) throw SchemaError("problem needs an 'operator'");
        reject_unknown(j["operator"], {"rank", "entries"}, "operator");
        const std::size_t rank = j["operator"].at("rank").get<std::size_t>();
        const json& je = j["operator"].at("entries");
        if (!je.is_array() || je.size() != rank)
            throw SchemaError("operator.entries needs " + std::to_string(rank) + " entries");
        std::vector<PwRational> entries;
        for (std::size_t i = 0; i < rank; ++i)
            entries.push_back(
                pwrational_from_json(domain, je[i], "operator.entries[" + std::to_string(i) + "]"));
        pf.diag = DiagOperator(domain, std::move(entries));
        return pf;
    }

    reject_unknown(j["algebra"], {"blocks"}, "algebra");
    if (!j["algebra"].contains("blocks")) throw SchemaError("matrix algebra needs 'blocks'");
    std::vector<std::size_t> sizes;
    for (const auto& s : j["algebra"]["blocks"]) sizes.push_back(s.get<std::size_t>());
    pf.profile = BlockProfile(std::move(sizes));

    if (pf.backend == Backend::Matrix) {
        if (!j.contains("operator")) throw SchemaError("problem needs an 'operator'");
        pf.op = operator_from_json(*pf.profile, j["operator"], "operator");
        return pf;
    }

    // graded
    if (j.contains("family")) {
        reject_unknown(j["family"], {"name", "count"}, "family");
        const std::string name = j["family"].at("name").get<std::string>();
        const std::size_t count = j["family"].at("count").get<std::size_t>();
        if (count == 0) throw SchemaError("family count must be positive");
        for (std::size_t n = 1; n <= count; ++n)
            pf.components.push_back(family_component(*pf.profile, name, n));
    } else if (j.contains("components")) {
        const json& jc = j["components"];
        if (!jc.is_array() || jc.empty()) throw SchemaError("'components' must be nonempty");
        for (std::size_t i = 0; i < jc.size(); ++i)
            pf.components.push_back(operator_from_json(
                *pf.profile, jc[i], "components[" + std::to_string(i) + "]"));
    } else {
        throw SchemaError("graded problem needs 'family' or 'components'");
    }
    return pf;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem_json(j);
}

}  // namespace polarmod::cli
