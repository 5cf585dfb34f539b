#include <doctest.h>

#include <functional>

#include "lsat/error.hpp"
#include "lsat/halfint.hpp"
#include "lsat/json_io.hpp"
#include "lsat/laurent.hpp"

using namespace lsat;

namespace {

HalfInt hi(std::int64_t v) { return HalfInt::from_int(v); }
HalfInt hd(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }
LaurentPoly2 m2(HalfInt a, HalfInt b, int c) { return LaurentPoly2::monomial(a, b, c); }
LaurentPoly2 whitehead_printed() {
    return m2(hi(1), hi(1), -1) + m2(hi(1), hi(0), 1) + m2(hi(0), hi(1), 1) + m2(hi(0), hi(0), -1);
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("half-integers") {
    CHECK(hd(3).str() == "3/2");
    CHECK(hd(-1).str() == "-1/2");
    CHECK(hi(-4).str() == "-4");
    CHECK(parse_halfint("-5/2") == hd(-5));
    CHECK(parse_halfint("7") == hi(7));
    CHECK(hd(3) + hd(1) == hi(2));
    CHECK(hd(1) < hi(1));
    CHECK(hd(-1).coset() == 1);
    CHECK(kind_of([] { parse_halfint("1/3"); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { parse_halfint("x"); }) == ErrorKind::InvalidInput);
    CHECK_THROWS_AS((void)hd(1).to_int(), Error);
}

TEST_CASE("addition") {
    LaurentPoly2 x1_plus_1 = m2(hi(1), hi(0), 1) + m2(hi(0), hi(0), 1);
    CHECK(add(x1_plus_1, m2(hi(1), hi(0), -1)) == m2(hi(0), hi(0), 1));
    CHECK(add(LaurentPoly2{}, LaurentPoly2{}).is_zero());
    LaurentPoly2 a = m2(hi(1), hi(1), 1) + m2(hi(1), hi(0), 1);
    LaurentPoly2 b = m2(hi(0), hi(1), 1) + m2(hi(0), hi(0), -1);
    CHECK(add(a, b) == LaurentPoly2({{{hi(1), hi(1)}, 1}, {{hi(1), hi(0)}, 1}, {{hi(0), hi(1)}, 1}, {{hi(0), hi(0)}, -1}}));
    CHECK(kind_of([] { (void)add(LaurentPoly2::monomial(hd(1), hd(1)), LaurentPoly2::monomial(hi(0), hi(0))); }) ==
          ErrorKind::InvalidInput);
}

TEST_CASE("shift") {
    LaurentPoly2 want = m2(hd(3), hd(3), -1) + m2(hd(3), hd(1), 1) + m2(hd(1), hd(3), 1) + m2(hd(1), hd(1), -1);
    CHECK(shift(whitehead_printed(), hd(1), hd(1)) == want);
    CHECK(shift(whitehead_printed(), hi(0), hi(0)) == whitehead_printed());
    CHECK(shift(m2(hi(0), hi(0), 1), hd(1), hd(1)) == m2(hd(1), hd(1), 1));
}

TEST_CASE("symmetrize") {
    Symmetrized one = symmetrize(m2(hi(0), hi(0), 1));
    CHECK(one.poly == m2(hi(0), hi(0), 1));
    CHECK(one.sign == 1);

    // x1 - 1 recentres to x1^(1/2) - x1^(-1/2).
    Symmetrized s = symmetrize(m2(hi(1), hi(0), 1) + m2(hi(0), hi(0), -1));
    CHECK(s.poly == m2(hd(1), hi(0), 1) + m2(hd(-1), hi(0), -1));

    // A unit translate of the Whitehead polynomial lands on the centred support.
    LaurentPoly2 translate = shift(whitehead_printed(), hi(3), hi(-2));
    Symmetrized w = symmetrize(translate);
    CHECK(w.poly == shift(whitehead_printed(), hd(-1), hd(-1)));
    CHECK(w.poly.has_inversion_symmetry(1));

    LaurentPoly2 lopsided = m2(hi(1), hi(0), 2) + m2(hi(0), hi(0), 1);
    CHECK(kind_of([&] { (void)symmetrize(lopsided); }) == ErrorKind::InvalidInput);
}

TEST_CASE("property: symmetrize is invariant under unit translates") {
    const LaurentPoly2 base = shift(whitehead_printed(), hd(-1), hd(-1)) + m2(hd(3), hd(1), 2) + m2(hd(-3), hd(-1), 2);
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            Symmetrized s = symmetrize(shift(base, hi(a), hi(b)));
            CHECK(s.poly == base);
            CHECK(shift(shift(base, hi(a), hi(b)), s.shift1, s.shift2) == s.poly);
        }
}

TEST_CASE("knot chi sequences") {
    KnotChi unknot(LaurentPoly1::one());
    for (std::int64_t s = -4; s <= 0; ++s) CHECK(unknot.chi(hi(s)) == 1);
    CHECK(unknot.chi(hi(1)) == 0);
    CHECK(unknot.chi(hi(3)) == 0);

    LaurentPoly1 trefoil = LaurentPoly1::monomial(hi(1)) + LaurentPoly1::monomial(hi(0), -1) + LaurentPoly1::monomial(hi(-1));
    KnotChi t(trefoil);
    CHECK(t.chi(hi(1)) == 1);
    CHECK(t.chi(hi(0)) == 0);
    for (std::int64_t s = -5; s <= -1; ++s) CHECK(t.chi(hi(s)) == 1);
    CHECK(t.chi(hi(2)) == 0);

    LaurentPoly1 bad = LaurentPoly1::monomial(hi(1), 2) + LaurentPoly1::monomial(hi(-1), 2);
    CHECK(kind_of([&] { KnotChi k(bad); }) == ErrorKind::InvalidInput);
}

TEST_CASE("property: knot H-functions satisfy H(-s) = H(s) + s") {
    // T(2,3), T(2,5), T(3,4).
    std::vector<std::vector<std::pair<int, int>>> polys{
        {{1, 1}, {0, -1}, {-1, 1}},
        {{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}},
        {{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}},
    };
    for (const auto& terms : polys) {
        LaurentPoly1 delta;
        for (auto [e, c] : terms) delta = delta + LaurentPoly1::monomial(hi(e), c);
        KnotChi k(delta);
        for (std::int64_t s = -8; s <= 8; ++s) {
            CHECK(k.h(hi(-s)) == k.h(hi(s)) + s);
            BigInt step = k.h(hi(s)) - k.h(hi(s + 1));
            CHECK((step == 0 || step == 1));
        }
    }
}

TEST_CASE("json round trip") {
    LaurentPoly2 p = shift(whitehead_printed(), hd(-1), hd(1));
    CHECK(poly2_from_json(to_json(p)) == p);
    LaurentPoly1 big = LaurentPoly1::monomial(hi(2), BigInt("123456789012345678901234567890"));
    Json j = to_json(big);
    CHECK(j["terms"][0]["c"].is_string());
    CHECK(poly1_from_json(j) == big);
    Json repeated = Json::parse(R"({"vars":1,"terms":[{"e":[0],"c":1},{"e":[0],"c":2}]})");
    CHECK(kind_of([&] { (void)poly1_from_json(repeated); }) == ErrorKind::InvalidInput);
    Json wrong_vars = Json::parse(R"({"vars":2,"terms":[]})");
    CHECK(kind_of([&] { (void)poly1_from_json(wrong_vars); }) == ErrorKind::InvalidInput);
}

TEST_CASE("link files") {
    Json j = Json::parse(R"({"linking": 0, "delta_tilde": {"vars": 2, "terms": [
        {"e": [2, 2], "c": 1}, {"e": [2, 0], "c": -1}, {"e": [0, 2], "c": -1}, {"e": [0, 0], "c": 1}]}, "g3": 0})");
    LinkFile f = link_from_json(j);
    CHECK(f.g3 == 0);
    CHECK(f.data.sign_resolved);
    CHECK(f.data.delta_tilde == whitehead_printed());
    CHECK(kind_of([] { (void)link_from_json(Json::parse(R"({"delta_tilde": {"vars": 2, "terms": []}})")); }) ==
          ErrorKind::InvalidInput);
    CHECK(kind_of([] { (void)read_link_file("/nonexistent/file.json"); }) == ErrorKind::InvalidInput);
}
