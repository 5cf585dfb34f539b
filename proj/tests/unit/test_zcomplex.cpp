#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "lsat/error.hpp"
#include "lsat/hfunction.hpp"
#include "lsat/invariants.hpp"
#include "lsat/patterns.hpp"
#include "lsat/zcomplex.hpp"

using namespace lsat;

namespace {

HalfInt hi(std::int64_t v) { return HalfInt::from_int(v); }

std::vector<std::int64_t> powers(const ZComplex& c) {
    std::vector<std::int64_t> out;
    for (const ZArrow& a : c.arrows()) out.push_back(a.power);
    std::sort(out.begin(), out.end());
    return out;
}

bool throws_lsat(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error&) {
        return true;
    }
    return false;
}

}  // namespace

TEST_CASE("arrows must be homogeneous") {
    ZComplex c;
    std::size_t a = c.add_generator("a", 0, 0);
    std::size_t b = c.add_generator("b", -1, -1);
    std::size_t wrong = c.add_generator("c", -1, 1);
    c.add_arrow(a, b, 0);
    CHECK(throws_lsat([&] { c.add_arrow(a, wrong, 0); }));
    c.add_arrow(a, wrong, 1);
    CHECK(c.alexander(wrong) == hi(-1));
}

TEST_CASE("d squared") {
    ZComplex line;
    std::size_t a = line.add_generator("a", 0, 0);
    std::size_t b = line.add_generator("b", -1, -1);
    std::size_t c = line.add_generator("c", -2, -2);
    line.add_arrow(a, b, 0);
    line.add_arrow(b, c, 0);
    CHECK_FALSE(line.d_squared_zero());

    ZComplex square;
    std::size_t top = square.add_generator("top", 0, 0);
    std::size_t l = square.add_generator("l", -1, -1);
    std::size_t r = square.add_generator("r", -1, -1);
    std::size_t bottom = square.add_generator("bottom", -2, -2);
    square.add_arrow(top, l, 0);
    square.add_arrow(top, r, 0);
    square.add_arrow(l, bottom, 0);
    square.add_arrow(r, bottom, 0);
    CHECK(square.d_squared_zero());
}

TEST_CASE("tower gradings by both routes") {
    ZComplex single;
    single.add_generator("x", 0, 0);
    CHECK(tower_alexander_persistence(single) == hi(0));
    CHECK(tower_alexander_gradewise(single) == hi(0));

    // d s = Z b0 + b1 with A(b0) = 0 and A(b1) = A(s) = 1.
    ZComplex c;
    std::size_t b0 = c.add_generator("b0", -1, -1);
    std::size_t b1 = c.add_generator("b1", -1, -3);
    std::size_t s = c.add_generator("s", 0, -2);
    c.add_arrow(s, b0, 1);
    c.add_arrow(s, b1, 0);
    CHECK(tower_alexander_persistence(c) == hi(0));
    CHECK(tower_alexander_gradewise(c) == hi(0));
    CHECK(tower_alexander(c) == hi(0));

    // Two acyclic generators leave no tower.
    ZComplex acyclic;
    std::size_t x = acyclic.add_generator("x", 0, 0);
    std::size_t y = acyclic.add_generator("y", -1, -1);
    acyclic.add_arrow(x, y, 0);
    CHECK(throws_lsat([&] { (void)tower_alexander(acyclic); }));
}

TEST_CASE("staircases from columns") {
    HFunction wh(whitehead_data());
    Staircase st = staircase_from_column(wh, hi(0));
    REQUIRE(st.gens.size() == 3);
    CHECK(st.gens[0].gr_w == 0);
    CHECK(st.gens[0].gr_z == -2);
    CHECK(st.gens[1].gr_w == -1);
    CHECK(st.gens[1].gr_z == -1);
    CHECK(st.gens[2].gr_w == -2);
    CHECK(st.gens[2].gr_z == 0);
    CHECK(st.alpha == std::vector<std::int64_t>{1});
    CHECK(st.beta == std::vector<std::int64_t>{1});
    CHECK(staircase_from_column(wh, hi(2)).gens.size() == 1);

    Staircase u = staircase_from_column(HFunction(unlink_data()), hi(1));
    REQUIRE(u.gens.size() == 1);
    CHECK(u.gens[0].gr_w == 0);
    CHECK(u.gens[0].gr_z == -2);
}

TEST_CASE("property: staircase steps are positive and gradings consistent") {
    for (std::int64_t q = 1; q <= 9; q += 2)
        for (std::int64_t r = std::max<std::int64_t>(q, 3); r <= 9; r += 2) {
            LinkAlexData d = twobridge_link(r, q);
            HFunction h(d);
            for (HalfInt t : lattice_range(d.linking, hi(-5), hi(5))) {
                Staircase st = staircase_from_column(h, t);
                CHECK(st.gens.size() % 2 == 1);
                CHECK(st.alpha.size() == st.gens.size() / 2);
                for (std::size_t i = 0; i < st.alpha.size(); ++i) {
                    CHECK(st.alpha[i] >= 1);
                    CHECK(st.beta[i] >= 1);
                    const auto& odd = st.gens[2 * i + 1];
                    CHECK(st.gens[2 * i].gr_w - odd.gr_w == 2 * st.alpha[i] - 1);
                    CHECK(st.gens[2 * i + 2].gr_z - odd.gr_z == 2 * st.beta[i] - 1);
                }
                CHECK(st.gens.front().r == r_of_t(h, t));
            }
        }
}

TEST_CASE("summand shapes") {
    PatternProfile wh = twobridge_profile(3, 3);
    ZComplex w = build_summand(SummandCase::Eps1, wh, Companion::make(1, 1), 0);
    CHECK(w.size() == 7);
    CHECK(powers(w) == std::vector<std::int64_t>{0, 0, 1, 1, 1, 1});
    CHECK(w.alexander(*w.find("y_0|x'")) == hi(0));
    CHECK(tower_alexander(w) == hi(1));

    PatternProfile mazur = twobridge_profile(5, 3);
    ZComplex m0 = build_summand(SummandCase::Eps0Pos, mazur, Companion::make(0, 0), 2);
    CHECK(m0.size() == 5);
    CHECK(powers(m0) == std::vector<std::int64_t>{1, 1, 2, 2});

    ZComplex m1 = build_summand(SummandCase::EpsMinus1, mazur, Companion::make(0, -1), 1);
    CHECK(m1.size() == 3);
    CHECK(powers(m1) == std::vector<std::int64_t>{1, 1});
    CHECK(throws_lsat([&] { (void)build_summand(SummandCase::Eps1, mazur, Companion::make(0, -1), 1); }));
}

TEST_CASE("summand cases") {
    CHECK(summand_case(Companion::make(1, 1), -5) == SummandCase::Eps1);
    CHECK(summand_case(Companion::make(0, 0), 0) == SummandCase::Eps0Pos);
    CHECK(summand_case(Companion::make(0, 0), -1) == SummandCase::Eps0Neg);
    CHECK(summand_case(Companion::make(-1, -1), 3) == SummandCase::EpsMinus1);
}

TEST_CASE("property: the identity pattern returns tau(K)") {
    PatternProfile id = twobridge_profile(3, 1);
    for (std::int64_t tau = -3; tau <= 3; ++tau)
        for (int eps : {-1, 0, 1}) {
            if (eps == 0 && tau != 0) continue;
            for (std::int64_t n = -5; n <= 5; ++n) {
                TauResult r = tau_oracle(id, Companion::make(tau, eps), n);
                CHECK(r.value == tau);
                CHECK(r.method == "oracle");
            }
        }
}

TEST_CASE("property: oracle reproduces the cable formula for eps = 1") {
    for (std::int64_t p = 2; p <= 6; ++p)
        for (std::int64_t r = 1; r < p; ++r) {
            if (std::gcd(p, r) != 1) continue;
            PatternProfile prof = cable_profile(p, r);
            for (std::int64_t tau = -2; tau <= 2; ++tau)
                for (std::int64_t n = -3; n <= 3; ++n) {
                    const std::int64_t q = r + p * n;
                    CHECK(tau_oracle(prof, Companion::make(tau, 1), n).value == (p - 1) * (q - 1) / 2 + p * tau);
                }
        }
}

TEST_CASE("oracle example") {
    TauResult r = tau_oracle(twobridge_profile(3, 3), Companion::make(1, 1), 0);
    CHECK(r.value == 1);
    CHECK(r.case_tag == "eps=1,n<2tau");
}
