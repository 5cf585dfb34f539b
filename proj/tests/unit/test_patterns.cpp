#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "lsat/error.hpp"
#include "lsat/patterns.hpp"

using namespace lsat;

namespace {

HalfInt hi(std::int64_t v) { return HalfInt::from_int(v); }
HalfInt hd(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }

std::string error_tag(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.tag();
    }
    return "";
}

// The sign sequence as described in words: r-1 pluses, then q-2 blocks of
// r equal signs alternating from minus, then r-1 pluses. For q = 1 only the
// p-1 = r-2 leading pluses remain.
std::vector<int> described_signs(std::int64_t r, std::int64_t q) {
    if (q == 1) return std::vector<int>(r - 2, 1);
    std::vector<int> out(r - 1, 1);
    for (std::int64_t k = 0; k < q - 2; ++k) out.insert(out.end(), r, k % 2 == 0 ? -1 : 1);
    out.insert(out.end(), r - 1, 1);
    return out;
}

// Strand permutation of (s_b ... s_1)(s_{p-1} ... s_1)^q, one cycle iff a knot.
bool closure_is_knot(std::int64_t p, std::int64_t q, std::int64_t b) {
    std::vector<std::int64_t> pos(p);
    std::iota(pos.begin(), pos.end(), 0);
    auto apply = [&](std::int64_t i) {  // s_i swaps positions i-1 and i
        for (auto& x : pos)
            if (x == i - 1) x = i;
            else if (x == i) x = i - 1;
    };
    for (std::int64_t i = b; i >= 1; --i) apply(i);
    const std::int64_t turns = ((q % p) + p) % p;
    for (std::int64_t k = 0; k < turns; ++k)
        for (std::int64_t i = p - 1; i >= 1; --i) apply(i);
    std::int64_t length = 0;
    std::int64_t at = 0;
    do {
        at = pos[at];
        ++length;
    } while (at != 0);
    return length == p;
}

}  // namespace

TEST_CASE("sign sequences match the verbal description") {
    for (std::int64_t q = 1; q <= 9; q += 2)
        for (std::int64_t r = std::max<std::int64_t>(q, 3); r <= 9; r += 2) {
            const std::int64_t p = r * q - 1;
            std::vector<int> want = described_signs(r, q);
            REQUIRE(static_cast<std::int64_t>(want.size()) == p - 1);
            for (std::int64_t i = 1; i <= p - 1; ++i) CHECK(twobridge_eta(p, q, i) == want[i - 1]);
            CHECK(twobridge_linking_from_eta(r, q) == (r - q) / 2);
        }
}

TEST_CASE("walks") {
    using Pts = std::set<std::pair<std::int64_t, std::int64_t>>;
    auto pts = [](std::int64_t r, std::int64_t q) {
        auto w = twobridge_walk(r, q);
        return Pts(w.begin(), w.end());
    };
    CHECK(pts(5, 3) == Pts{{0, 0}, {1, 1}, {2, 1}, {1, 0}, {0, -1}, {1, -1}, {2, 0}});
    CHECK(twobridge_walk(5, 3).size() == 7);
    CHECK(pts(3, 1) == Pts{{0, 0}});
    CHECK(twobridge_walk(3, 3).size() == 4);
}

TEST_CASE("two-bridge link data") {
    CHECK(twobridge_link(3, 1).delta_tilde == LaurentPoly2::monomial(hd(1), hd(1), 1));
    LaurentPoly2 wh = twobridge_link(3, 3).delta_tilde;
    CHECK(wh == whitehead_data().delta_tilde);
    CHECK(error_tag([] { (void)twobridge_link(4, 3); }) == "bad-pattern");
    CHECK(error_tag([] { (void)twobridge_link(1, 1); }) == "bad-pattern");
}

TEST_CASE("two-bridge profiles") {
    PatternProfile mazur = twobridge_profile(5, 3);
    CHECK(mazur.ell == 1);
    CHECK(mazur.r_center == hd(3));
    CHECK(mazur.r_minus == hd(1));
    CHECK(mazur.width == hd(3));
    CHECK(mazur.g3 == 0);

    PatternProfile wh = twobridge_profile(3, 3);
    CHECK(wh.ell == 0);
    CHECK(wh.r_center == hi(1));
    CHECK(wh.r_minus == hi(0));

    PatternProfile id = twobridge_profile(3, 1);
    CHECK(id.ell == 1);
    CHECK(id.r_center == hd(1));
    CHECK(id.g3 == 0);
    CHECK(id.provenance.at("r_plus") == Provenance::ComputedFromH);
    CHECK(mazur.provenance.at("r_plus") == Provenance::ClosedForm);
}

TEST_CASE("property: two-bridge profiles agree with the generic assembly") {
    for (std::int64_t q = 1; q <= 9; q += 2)
        for (std::int64_t r = std::max<std::int64_t>(q, 3); r <= 9; r += 2) {
            PatternProfile closed = twobridge_profile(r, q);
            PatternProfile generic = generic_profile(twobridge_link(r, q));
            CHECK(closed.ell == generic.ell);
            CHECK(closed.g3 == generic.g3);
            CHECK(closed.width == generic.width);
            CHECK(closed.r_minus == generic.r_minus);
            CHECK(closed.r_center == generic.r_center);
            CHECK(closed.r_plus == generic.r_plus);
            CHECK(closed.cond_tau == generic.cond_tau);
            CHECK(closed.cond_eps == generic.cond_eps);
            if (q >= 3) CHECK(closed.cond_tau);
        }
}

TEST_CASE("cable profiles") {
    PatternProfile c21 = cable_profile(2, 1);
    CHECK(c21.ell == 2);
    CHECK(c21.g3 == 0);
    CHECK(c21.r_center == hi(1));
    CHECK(c21.minimal_wrapping);
    PatternProfile c32 = cable_profile(3, 2);
    CHECK(c32.ell == 3);
    CHECK(c32.g3 == 1);
    CHECK(c32.r_center == hd(5));
    CHECK(error_tag([] { (void)cable_profile(4, 2); }) == "bad-pattern");
}

TEST_CASE("braid profiles") {
    PatternProfile b = bridge_braid_profile(4, 5, 2);
    CHECK(b.ell == 4);
    CHECK(b.g3 == 7);
    CHECK(b.minimal_wrapping);
    CHECK(error_tag([] { (void)bridge_braid_profile(3, 4, 1); }) == "bad-pattern");
    CHECK(error_tag([] { (void)bridge_braid_profile(3, 5, 1); }) == "bad-pattern");
}

TEST_CASE("property: braid knot predicate matches a strand simulation") {
    for (std::int64_t p = 3; p <= 9; ++p)
        for (std::int64_t q = -12; q <= 12; ++q)
            for (std::int64_t b = 1; b < p - 1; ++b) {
                CHECK(braid_closure_is_knot(p, q, b) == closure_is_knot(p, q, b));
                const std::int64_t m = ((q % p) + p) % p;
                if (m == 0 || m == p - 1) CHECK_FALSE(braid_closure_is_knot(p, q, b));
            }
    CHECK(braid_closure_is_knot(4, 5, 2));
}

TEST_CASE("generic profiles") {
    PatternProfile wh = generic_profile(whitehead_data(), 0);
    CHECK(wh.ell == 0);
    CHECK(wh.r_center == hi(1));
    CHECK(wh.cond_tau);
    CHECK(wh.cond_eps);
    PatternProfile hopf = generic_profile(hopf_data(1), 0);
    CHECK(hopf.ell == 1);
    CHECK(hopf.r_center == hd(1));
    CHECK(error_tag([] { (void)generic_profile(twobridge_link(5, 3), 1); }) == "g3-conflict");
    // A negative linking number is normalized by reversing P.
    CHECK(generic_profile(hopf_data(-1)).ell == 1);
}

TEST_CASE("companions") {
    CHECK(error_tag([] { (void)Companion::make(1, 0); }) == "bad-companion");
    CHECK(error_tag([] { (void)Companion::make(0, 2); }) == "bad-companion");
    CHECK(error_tag([] { (void)Companion::make(1, 1, {-1, 1}); }) == "bad-companion");
    Companion k = Companion::make(2, 1, {1, -1});
    Companion m = k.mirror();
    CHECK(m.tau == -2);
    CHECK(m.eps == -1);
    CHECK(m.mirror().tau == 2);
}
