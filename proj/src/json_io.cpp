#include "hsq/json_io.hpp"

#include <fstream>

#include "hsq/errors.hpp"

namespace hsq {

namespace {

const Json& require_field(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw validation_error(std::string("missing field '") + field + "'");
    return j.at(field);
}

BigInt bigint_from_json(const Json& x, const char* where) {
    try {
        if (x.is_number_integer()) return BigInt(x.get<long long>());
        if (x.is_string()) return BigInt(x.get<std::string>());
    } catch (const std::exception&) {
    }
    throw validation_error(std::string("field '") + where + "' must hold integers");
}

BigRat bigrat_from_json(const Json& x, const char* where) {
    try {
        if (x.is_number_integer()) return BigRat(x.get<long long>());
        if (x.is_string()) return BigRat(x.get<std::string>());
    } catch (const std::exception&) {
    }
    throw validation_error(std::string("field '") + where + "' must hold integers or 'a/b' strings");
}

int int_from_json(const Json& x, const char* where) {
    if (!x.is_number_integer())
        throw validation_error(std::string("field '") + where + "' must be an integer");
    return x.get<int>();
}

std::vector<int> int_vector_from_json(const Json& x, const char* where) {
    if (!x.is_array())
        throw validation_error(std::string("field '") + where + "' must be an array");
    std::vector<int> out;
    for (const Json& e : x) out.push_back(int_from_json(e, where));
    return out;
}

IntMatrix matrix_from_json(const Json& x, const char* where) {
    if (!x.is_array() || x.empty())
        throw validation_error(std::string("field '") + where + "' must be a nonempty array of rows");
    IntMatrix m;
    for (const Json& row : x) {
        if (!row.is_array())
            throw validation_error(std::string("field '") + where + "' rows must be arrays");
        std::vector<BigInt> r;
        for (const Json& e : row) r.push_back(bigint_from_json(e, where));
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

Json poly_to_json(const LaurentPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, c.str()}));
    return Json{{"var", var_name(p.var())}, {"terms", std::move(terms)}};
}

LaurentPolynomial poly_from_json(const Json& j) {
    const Json& var = require_field(j, "var");
    if (!var.is_string() || (var != "q" && var != "t"))
        throw validation_error("polynomial 'var' must be \"q\" or \"t\"");
    LaurentPolynomial p(var == "q" ? Var::q : Var::t);
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw validation_error("polynomial 'terms' must be an array");
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 2)
            throw validation_error("polynomial terms must be [exponent, coefficient] pairs");
        p.set_coeff(int_from_json(t.at(0), "terms"), bigint_from_json(t.at(1), "terms"));
    }
    return p;
}

Json ratfn_to_json(const RationalFunction& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

Json series_to_json(const TruncatedMultiSeries& s) {
    Json terms = Json::array();
    for (const auto& [deg, value] : s.terms())
        terms.push_back(Json{{"degree", deg}, {"value", ratfn_to_json(value)}});
    return Json{{"var", var_name(s.coeff_var())}, {"box", s.box()}, {"terms", std::move(terms)}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open instance file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text);
}

ToricInstance toric_instance_from_json(const Json& j) {
    if (j.is_array()) return ToricInstance(matrix_from_json(j, "matrix"));
    IntMatrix m = matrix_from_json(require_field(j, "matrix"), "matrix");
    std::optional<std::vector<BigRat>> xi;
    if (j.contains("xi")) {
        const Json& x = j.at("xi");
        if (!x.is_array()) throw validation_error("field 'xi' must be an array");
        std::vector<BigRat> level;
        for (const Json& e : x) level.push_back(bigrat_from_json(e, "xi"));
        xi = std::move(level);
    }
    return ToricInstance(std::move(m), std::move(xi));
}

QuiverJobSpec quiver_instance_from_json(const Json& j) {
    const int n = int_from_json(require_field(j, "vertices"), "vertices");
    const Json& edges_json = require_field(j, "edges");
    if (!edges_json.is_array()) throw validation_error("field 'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : edges_json) {
        const std::vector<int> pair = int_vector_from_json(e, "edges");
        if (pair.size() != 2)
            throw validation_error("each edge must be a [from, to] pair");
        if (pair[0] < 1 || pair[0] > n || pair[1] < 1 || pair[1] > n)
            throw validation_error("edge endpoints must be 1-based vertex indices");
        edges.emplace_back(pair[0] - 1, pair[1] - 1);
    }
    const std::vector<int> w = int_vector_from_json(require_field(j, "w"), "w");

    std::optional<std::vector<int>> v;
    if (j.contains("v")) v = int_vector_from_json(j.at("v"), "v");
    std::vector<int> vmax;
    if (j.contains("vmax"))
        vmax = int_vector_from_json(j.at("vmax"), "vmax");
    else if (v)
        vmax = *v;
    else
        throw validation_error("quiver instance needs 'vmax' or 'v'");

    return QuiverJobSpec{QuiverQuery(Quiver(n, std::move(edges)), w, std::move(vmax)), std::move(v)};
}

RepresentationInstance representation_from_json(const Json& j) {
    const Json& kind = require_field(j, "kind");
    if (kind == "toric") return RepresentationInstance::make_toric(toric_instance_from_json(j));
    if (kind == "quiver") {
        QuiverJobSpec spec = quiver_instance_from_json(j);
        if (!spec.v)
            throw validation_error("quiver verification needs an explicit 'v'");
        return RepresentationInstance::make_quiver(spec.query.quiver,
                                                   DimensionData{*spec.v, spec.query.w});
    }
    throw validation_error("field 'kind' must be \"toric\" or \"quiver\"");
}

} // namespace hsq
