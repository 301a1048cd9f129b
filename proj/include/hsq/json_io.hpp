#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsq/laurent.hpp"
#include "hsq/oracle.hpp"
#include "hsq/quiver.hpp"
#include "hsq/rational_fn.hpp"
#include "hsq/series.hpp"
#include "hsq/toric.hpp"

namespace hsq {

// Insertion-ordered documents keep output byte-identical across runs.
using Json = nlohmann::ordered_json;

// {"var": "q", "terms": [[exponent, "coefficient"], ...]} with ascending
// exponents and decimal-string coefficients.
Json poly_to_json(const LaurentPolynomial& p);
LaurentPolynomial poly_from_json(const Json& j);

// {"num": <poly>, "den": <poly>}
Json ratfn_to_json(const RationalFunction& f);

// {"var": ..., "box": [...], "terms": [{"degree": [...], "value": <ratfn>}]}
Json series_to_json(const TruncatedMultiSeries& s);

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

// {"matrix": [[...]], "xi": [...]}; xi entries are integers or "a/b"
// strings; a bare top-level array is accepted as the matrix alone.
ToricInstance toric_instance_from_json(const Json& j);

struct QuiverJobSpec {
    QuiverQuery query;
    std::optional<std::vector<int>> v;
};

// {"vertices": n, "edges": [[i,j], ...], "w": [...], "vmax": [...],
//  "v": [...]}; vertex indices 1-based, vmax defaults to v when absent.
QuiverJobSpec quiver_instance_from_json(const Json& j);

// Dispatches on {"kind": "toric" | "quiver"}; the quiver form requires "v".
RepresentationInstance representation_from_json(const Json& j);

} // namespace hsq
