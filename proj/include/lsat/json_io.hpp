#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "lsat/hfunction.hpp"
#include "lsat/laurent.hpp"

namespace lsat {

using Json = nlohmann::ordered_json;

// Wire format: {"vars": 1|2, "terms": [{"e": [doubled exponents], "c": coeff}]}.
// Coefficients outside the 64-bit range travel as decimal strings.
Json to_json(const LaurentPoly1& p);
Json to_json(const LaurentPoly2& p);
LaurentPoly1 poly1_from_json(const Json& j);
LaurentPoly2 poly2_from_json(const Json& j);

// {"linking": int, "delta_tilde": poly2, "delta1": poly1, "delta2": poly1, "g3"?: int}
struct LinkFile {
    LinkAlexData data;  // sign resolved
    std::optional<std::int64_t> g3;
};

Json to_json(const LinkAlexData& data);
LinkFile link_from_json(const Json& j);
LinkFile read_link_file(const std::string& path);

}  // namespace lsat
