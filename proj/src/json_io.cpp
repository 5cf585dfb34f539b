#include "lsat/json_io.hpp"

#include <fstream>
#include <limits>

#include "lsat/error.hpp"

namespace lsat {

namespace {

Json coeff_to_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

BigInt coeff_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        auto digits = s.find_first_not_of("+-");
        if (s.empty() || digits > 1 || s.find_first_not_of("0123456789", digits) != std::string::npos)
            fail_input("bad-json", "coefficient string '" + s + "' is not an integer");
        return BigInt(s);
    }
    fail_input("bad-json", "coefficient must be an integer");
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail_input("bad-json", std::string("missing field '") + key + "'");
    return j.at(key);
}

std::int64_t get_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail_input("bad-json", std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

void check_vars(const Json& j, int vars) {
    if (get_int(require(j, "vars"), "vars") != vars)
        fail_input("bad-json", "expected a " + std::to_string(vars) + "-variable polynomial");
    if (!require(j, "terms").is_array()) fail_input("bad-json", "terms must be an array");
}

}  // namespace

Json to_json(const LaurentPoly1& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"e", {e.doubled()}}, {"c", coeff_to_json(c)}});
    return {{"vars", 1}, {"terms", terms}};
}

Json to_json(const LaurentPoly2& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"e", {e.first.doubled(), e.second.doubled()}}, {"c", coeff_to_json(c)}});
    return {{"vars", 2}, {"terms", terms}};
}

LaurentPoly1 poly1_from_json(const Json& j) {
    check_vars(j, 1);
    LaurentPoly1::Terms t;
    for (const Json& term : j.at("terms")) {
        const Json& e = require(term, "e");
        if (!e.is_array() || e.size() != 1) fail_input("bad-json", "1-variable exponent must have one entry");
        auto [it, fresh] = t.emplace(HalfInt::from_doubled(get_int(e[0], "exponent")), coeff_from_json(require(term, "c")));
        if (!fresh) fail_input("bad-json", "repeated exponent");
    }
    return LaurentPoly1(std::move(t));
}

LaurentPoly2 poly2_from_json(const Json& j) {
    check_vars(j, 2);
    LaurentPoly2::Terms t;
    for (const Json& term : j.at("terms")) {
        const Json& e = require(term, "e");
        if (!e.is_array() || e.size() != 2) fail_input("bad-json", "2-variable exponent must have two entries");
        Exp2 key{HalfInt::from_doubled(get_int(e[0], "exponent")), HalfInt::from_doubled(get_int(e[1], "exponent"))};
        auto [it, fresh] = t.emplace(key, coeff_from_json(require(term, "c")));
        if (!fresh) fail_input("bad-json", "repeated exponent");
    }
    return LaurentPoly2(std::move(t));
}

Json to_json(const LinkAlexData& data) {
    return {{"linking", data.linking},
            {"delta_tilde", to_json(data.delta_tilde)},
            {"delta1", to_json(data.delta1)},
            {"delta2", to_json(data.delta2)}};
}

LinkFile link_from_json(const Json& j) {
    LinkFile out;
    out.data.linking = get_int(require(j, "linking"), "linking");
    out.data.delta_tilde = poly2_from_json(require(j, "delta_tilde"));
    out.data.delta1 = j.contains("delta1") ? poly1_from_json(j.at("delta1")) : LaurentPoly1::one();
    out.data.delta2 = j.contains("delta2") ? poly1_from_json(j.at("delta2")) : LaurentPoly1::one();
    if (j.contains("g3")) out.g3 = get_int(j.at("g3"), "g3");
    out.data = resolve_sign(std::move(out.data));
    return out;
}

LinkFile read_link_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_input("bad-path", "cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail_input("bad-json", path + ": " + e.what());
    }
    return link_from_json(j);
}

}  // namespace lsat
