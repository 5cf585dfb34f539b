#include <doctest.h>

#include <atomic>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lsat/error.hpp"
#include "lsat/sweep.hpp"

using namespace lsat;

TEST_CASE("parallel_for visits every index once") {
    for (unsigned threads : {1u, 3u, 8u}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (const auto& h : hits) CHECK(h.load() == 1);
    }
    parallel_for(0, 4, [](std::size_t) { FAIL("called on an empty range"); });
}

TEST_CASE("parallel_for rethrows") {
    CHECK_THROWS_AS(parallel_for(50, 4,
                                 [](std::size_t i) {
                                     if (i == 17) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

TEST_CASE("sweep output does not depend on the worker count") {
    SweepSpec spec;
    spec.r_max = 7;
    auto one = run_sweep(spec, 1);
    auto many = run_sweep(spec, 8);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].check == many[i].check);
        CHECK(one[i].points == many[i].points);
        CHECK(one[i].failures == 0);
        CHECK(one[i].skipped == many[i].skipped);
    }
}

TEST_CASE("default sweep size") {
    SweepSpec spec;
    spec.checks = {SweepCheck::Oracle, SweepCheck::Classifier};
    auto res = run_sweep(spec, 4);
    CHECK(res[0].points == 1386);
    CHECK(res[0].failures == 0);
    CHECK(res[1].points == 15);
}

TEST_CASE("injected corruption is reported") {
    SweepSpec spec;
    spec.checks = {SweepCheck::Properties};
    Injection inj;
    inj.r = 5;
    inj.q = 3;
    inj.entries[{HalfInt::from_doubled(1), HalfInt::from_doubled(1)}] = 4;
    spec.injection = inj;
    auto res = run_sweep(spec, 2);
    CHECK(res[0].failures == 1);
    CHECK(res[0].first_failure.find("twobridge:5,3") == 0);
}

TEST_CASE("sweep ranges are checked") {
    SweepSpec empty;
    empty.n_min = 3;
    empty.n_max = 2;
    CHECK_THROWS_AS(empty.check(), Error);
    SweepSpec none;
    none.checks.clear();
    CHECK_THROWS_AS(none.check(), Error);
    SweepSpec stray;
    stray.injection = Injection{4, 3, {}};
    CHECK_THROWS_AS(stray.check(), Error);
}

TEST_CASE("check names") {
    for (SweepCheck c : {SweepCheck::Properties, SweepCheck::Oracle, SweepCheck::Inequality, SweepCheck::Classifier,
                         SweepCheck::Genus})
        CHECK(parse_sweep_check(to_string(c)) == c);
    CHECK_FALSE(parse_sweep_check("nope"));
}
