#include "staircase/json_io.hpp"

#include "staircase/errors.hpp"

namespace staircase {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("json: missing field '") + key + "'");
    }
    return j.at(key);
}

std::vector<std::string> string_rows(const Json& j)
{
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) {
        throw ParseError("json: 'rows' must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& r : rows) {
        if (!r.is_string()) {
            throw ParseError("json: 'rows' must be an array of strings");
        }
        out.push_back(r.get<std::string>());
    }
    return out;
}

template <class Tableau>
Json bordered_json(const Tableau& t, const std::string& text)
{
    Json rows = Json::array();
    std::size_t pos = text.find('\n') + 1;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const std::size_t end = text.find('\n', pos);
        rows.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return Json{{"border", t.shape.to_string()}, {"rows", rows}};
}

std::string bordered_text(const Json& j)
{
    const Json& border = field(j, "border");
    if (!border.is_string()) {
        throw ParseError("json: 'border' must be a string");
    }
    std::string text = border.get<std::string>() + "\n";
    for (const auto& r : string_rows(j)) {
        text += r + "\n";
    }
    return text;
}

} // namespace

Json poly_to_json(const GfPoly& p)
{
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exp = Json::array();
        for (std::size_t i = 0; i < kVarCount; ++i) {
            exp.push_back(m[i]);
        }
        out.push_back(Json{{"exp", exp}, {"coeff", to_string(c)}});
    }
    return out;
}

GfPoly poly_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw ParseError("json: polynomial must be an array of terms");
    }
    GfPoly p;
    for (const auto& term : j) {
        const Json& exp = field(term, "exp");
        const Json& coeff = field(term, "coeff");
        if (!exp.is_array() || exp.size() != kVarCount || !coeff.is_string()) {
            throw ParseError("json: term needs six exponents and a string coefficient");
        }
        Monomial::Exponents e{};
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (!exp[i].is_number_unsigned() || exp[i].get<unsigned long>() > 0xFFFF) {
                throw ParseError("json: exponents must be small non-negative integers");
            }
            e[i] = static_cast<std::uint16_t>(exp[i].get<unsigned>());
        }
        p.add_term(Monomial(e), parse_integer(coeff.get<std::string>()));
    }
    return p;
}

Json tableau_to_json(const StaircaseTableau& t)
{
    Json rows = Json::array();
    for (unsigned r = 1; r <= t.size(); ++r) {
        std::string line;
        for (CellLabel l : t.row(r)) {
            line += label_char(l);
        }
        rows.push_back(line);
    }
    return Json{{"size", t.size()}, {"rows", rows}};
}

StaircaseTableau tableau_from_json(const Json& j)
{
    const Json& size = field(j, "size");
    if (!size.is_number_integer()) {
        throw ParseError("json: 'size' must be an integer");
    }
    std::string text = std::to_string(size.get<long long>()) + "\n";
    for (const auto& r : string_rows(j)) {
        text += r + "\n";
    }
    return parse_tableau(text);
}

Json tableau_to_json(const PermutationTableau& t) { return bordered_json(t, to_text(t)); }
Json tableau_to_json(const AlternativeTableau& t) { return bordered_json(t, to_text(t)); }

PermutationTableau permutation_tableau_from_json(const Json& j)
{
    return parse_permutation_tableau(bordered_text(j));
}

AlternativeTableau alternative_tableau_from_json(const Json& j)
{
    return parse_alternative_tableau(bordered_text(j));
}

Json params_to_json(const AsepParams& p)
{
    return Json{{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"gamma", to_string(p.gamma)},
                {"delta", to_string(p.delta)}, {"q", to_string(p.q)},        {"u", to_string(p.u)}};
}

Json params_to_json(const AwParams& p)
{
    return Json{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)},
                {"d", to_string(p.d)}, {"q", to_string(p.q)}};
}

Json distribution_to_json(const StationaryDist& dist)
{
    Json out = Json::object();
    for (const auto& [tau, p] : dist.probabilities) {
        out[tau.to_string()] = to_string(p);
    }
    return out;
}

Json report_to_json(const VerifyReport& report)
{
    Json out{{"family", report.family}, {"max_len", report.max_len}, {"checks", report.checks}};
    if (report.ok()) {
        out["status"] = "ok";
        return out;
    }
    const Counterexample& c = *report.failure;
    out["status"] = "fail";
    out["X"] = c.x;
    out["Y"] = c.y;
    if (c.indices) {
        const auto& idx = *c.indices;
        if (idx[2] < 0) {
            out["j"] = idx[0];
            out["l"] = idx[1];
        } else {
            out["i"] = idx[0];
            out["j"] = idx[1];
            out["k"] = idx[2];
            out["l"] = idx[3];
        }
    }
    out["lhs"] = to_string(c.lhs);
    out["rhs"] = to_string(c.rhs);
    return out;
}

} // namespace staircase
