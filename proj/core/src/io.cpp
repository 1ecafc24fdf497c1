#include "qweyl/io.hpp"

#include <cctype>
#include <sstream>

namespace qweyl {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

Int parse_unsigned_int(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        throw ParseError("expected a digit", c.i);
    Int v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = v * 10 + (c.s[c.i] - '0');
        ++c.i;
    }
    return v;
}

// number [/ number], no sign
Rat parse_unsigned_rat(Cursor& c) {
    Int num = parse_unsigned_int(c);
    if (c.peek() == '/') {
        ++c.i;
        Int den = parse_unsigned_int(c);
        if (den == 0) throw ParseError("zero denominator", c.i);
        return Rat(num, den);
    }
    return Rat(num);
}

long parse_exponent(Cursor& c) {
    c.skip_ws();
    std::size_t at = c.i;
    Int e = parse_unsigned_int(c);
    if (e > 1000000) throw ParseError("exponent too large", at);
    return static_cast<long>(e);
}

// [rational] [*] [t [^ exponent]]; at least one of the two parts must appear
void parse_term(Cursor& c, std::vector<Rat>& coeffs, bool negative) {
    Rat coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_unsigned_rat(c);
        have_coeff = true;
    }
    long deg = 0;
    char ch = c.peek();
    if (ch == '*') {
        ++c.i;
        ch = c.peek();
        if (ch != 't') throw ParseError("expected t after *", c.i);
    }
    if (ch == 't') {
        ++c.i;
        deg = 1;
        if (c.peek() == '^') {
            ++c.i;
            deg = parse_exponent(c);
        }
    } else if (!have_coeff) {
        throw ParseError("expected a number or t", c.i);
    }
    if (negative) coeff = -coeff;
    if (static_cast<std::size_t>(deg) >= coeffs.size()) coeffs.resize(deg + 1, Rat(0));
    coeffs[deg] += coeff;
}

std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    Cursor c{s};
    bool neg = false;
    if (c.peek() == '-') { neg = true; ++c.i; }
    Rat r = parse_unsigned_rat(c);
    if (!c.done()) throw ParseError("trailing characters in rational", c.i);
    return neg ? -r : r;
}

}  // namespace

CycNum parse_scalar(const FieldPtr& ctx, const std::string& text) {
    Cursor c{text};
    std::vector<Rat> coeffs;
    bool first = true;
    while (!c.done()) {
        bool negative = false;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            negative = (ch == '-');
            ++c.i;
        } else if (!first) {
            throw ParseError("expected + or - between terms", c.i);
        }
        parse_term(c, coeffs, negative);
        first = false;
    }
    if (first) throw ParseError("empty scalar literal", 0);
    return CycNum::from_poly(ctx, std::move(coeffs));
}

std::string scalar_literal(const CycNum& c) {
    const auto& coeffs = c.coeffs();
    std::ostringstream os;
    bool first = true;
    for (long d = static_cast<long>(coeffs.size()) - 1; d >= 0; --d) {
        Rat r = coeffs[d];
        if (r == 0) continue;
        bool neg = r < 0;
        if (neg) r = -r;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        if (d == 0 || r != 1) {
            os << rat_string(r);
            if (d > 0) os << '*';
        }
        if (d == 1) os << 't';
        else if (d > 1) os << "t^" << d;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

json cycnum_to_json(const CycNum& c) {
    json a = json::array();
    for (const Rat& r : c.coeffs()) a.push_back(rat_string(r));
    return a;
}

CycNum cycnum_from_json(const FieldPtr& ctx, const json& j) {
    if (!j.is_array()) throw ParseError("CycNum JSON must be an array of strings", 0);
    std::vector<Rat> coeffs;
    for (const auto& el : j) coeffs.push_back(rat_from_string(el.get<std::string>()));
    return CycNum::from_poly(ctx, std::move(coeffs));
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(cycnum_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat mat_from_json(const FieldPtr& ctx, const json& j) {
    const long rows = j.at("rows").get<long>(), cols = j.at("cols").get<long>();
    const json& e = j.at("entries");
    if (static_cast<long>(e.size()) != rows)
        throw ParseError("Mat JSON: entry rows disagree with \"rows\"", 0);
    Mat m(ctx, rows, cols);
    for (long i = 0; i < rows; ++i) {
        if (static_cast<long>(e[i].size()) != cols)
            throw ParseError("Mat JSON: entry row length disagrees with \"cols\"", 0);
        for (long c = 0; c < cols; ++c) m.at(i, c) = cycnum_from_json(ctx, e[i][c]);
    }
    return m;
}

json algelem_to_json(const AlgElem& e) {
    json out = json::array();
    for (const auto& [mono, coeff] : e.terms())
        out.push_back(json{{"a", mono.a}, {"b", mono.b}, {"c", mono.c},
                           {"coeff", cycnum_to_json(coeff)}});
    return out;
}

AlgElem algelem_from_json(const FieldPtr& ctx, const json& j) {
    AlgElem e(ctx);
    for (const auto& term : j)
        e.add_term(Mono{term.at("a").get<int>(), term.at("b").get<int>(), term.at("c").get<int>()},
                   cycnum_from_json(ctx, term.at("coeff")));
    return e;
}

json report_to_json(const IdentityReport& r, const Params& p, int a_max) {
    json params{{"l", p.ctx->order()},
                {"alpha", scalar_literal(p.alpha)},
                {"beta", scalar_literal(p.beta)},
                {"gamma", scalar_literal(p.gamma)},
                {"a_max", a_max}};
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"identity", c.identity}, {"params", params}, {"pass", c.pass}};
        if (c.witness) jc["witness"] = algelem_to_json(*c.witness);
        checks.push_back(std::move(jc));
    }
    return checks;
}

json pi_report_to_json(const PIReport& r) {
    return json{{"l", r.l},
                {"h_image", r.h_image},
                {"pideg_bruteforce", r.pideg_bruteforce},
                {"invariant_factors", r.invariant_factors},
                {"pideg_factors", r.pideg_factors},
                {"pideg_claimed", r.pideg_claimed},
                {"kernel_matches_diagonal", r.kernel_matches_diagonal},
                {"consistent", r.consistent()}};
}

json rep_to_json(const Rep& r) {
    return json{{"l", r.p.ctx->order()},
                {"alpha", scalar_literal(r.p.alpha)},
                {"beta", scalar_literal(r.p.beta)},
                {"gamma", scalar_literal(r.p.gamma)},
                {"dim", r.dim},
                {"X", mat_to_json(r.X)},
                {"Y", mat_to_json(r.Y)},
                {"Z", mat_to_json(r.Z)}};
}

Rep rep_from_json(const json& j) {
    FieldPtr ctx = FieldCtx::make(j.at("l").get<long>());
    Rep r;
    r.p = Params::make(ctx, parse_scalar(ctx, j.at("alpha").get<std::string>()),
                       parse_scalar(ctx, j.at("beta").get<std::string>()),
                       parse_scalar(ctx, j.at("gamma").get<std::string>()));
    r.dim = j.at("dim").get<long>();
    r.X = mat_from_json(ctx, j.at("X"));
    r.Y = mat_from_json(ctx, j.at("Y"));
    r.Z = mat_from_json(ctx, j.at("Z"));
    if (r.X.rows() != r.dim || r.Y.rows() != r.dim || r.Z.rows() != r.dim ||
        r.X.cols() != r.dim || r.Y.cols() != r.dim || r.Z.cols() != r.dim)
        throw DimensionError("Rep JSON: matrix shapes disagree with \"dim\"");
    return r;
}

json family_spec_to_json(const FamilySpec& s) {
    json params = json::object();
    for (const auto& [name, value] : s.params) params[name] = scalar_literal(value);
    return json{{"family", family_name(s.tag)}, {"params", std::move(params)}};
}

FamilySpec family_spec_from_json(const FieldPtr& ctx, const json& j) {
    FamilySpec s;
    s.tag = family_from_name(j.at("family").get<std::string>());
    for (const auto& [name, value] : j.at("params").items())
        s.params.emplace(name, parse_scalar(ctx, value.get<std::string>()));
    return s;
}

json classify_result_to_json(const ClassifyResult& r) {
    json canonical = json::object(), scalars = json::object();
    for (const auto& [name, value] : r.canonical) canonical[name] = scalar_literal(value);
    for (const auto& [name, value] : r.scalars) scalars[name] = scalar_literal(value);
    json out{{"family", family_name(r.tag)},
             {"canonical", std::move(canonical)},
             {"scalars", std::move(scalars)}};
    if (r.tag == Family::M3) out["s"] = r.s;
    return out;
}

}  // namespace qweyl
