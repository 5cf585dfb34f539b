#include "lsat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "lsat/error.hpp"
#include "lsat/genus.hpp"
#include "lsat/invariants.hpp"
#include "lsat/patterns.hpp"
#include "lsat/zcomplex.hpp"

namespace lsat {

std::string to_string(SweepCheck c) {
    switch (c) {
        case SweepCheck::Properties: return "properties";
        case SweepCheck::Oracle: return "oracle";
        case SweepCheck::Inequality: return "inequality";
        case SweepCheck::Classifier: return "classifier";
        case SweepCheck::Genus: return "genus";
    }
    return "properties";
}

std::optional<SweepCheck> parse_sweep_check(const std::string& name) {
    for (SweepCheck c : {SweepCheck::Properties, SweepCheck::Oracle, SweepCheck::Inequality, SweepCheck::Classifier,
                         SweepCheck::Genus})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

void SweepSpec::check() const {
    if (r_max < 3 || r_max > 41) fail_input("bad-sweep", "r_max must lie in [3, 41]");
    if (n_min > n_max) fail_input("bad-sweep", "empty framing range");
    if (tau_max < 0 || tau_max > 50) fail_input("bad-sweep", "tau_max must lie in [0, 50]");
    if (n_max - n_min > 200) fail_input("bad-sweep", "framing range too wide");
    if (checks.empty()) fail_input("bad-sweep", "no checks selected");
    if (injection) {
        if (injection->r < 3 || injection->r > r_max || injection->q < 1 || injection->q > injection->r ||
            injection->r % 2 == 0 || injection->q % 2 == 0)
            fail_input("bad-sweep", "injection target is not a member of the sweep");
    }
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

namespace {

struct Member {
    std::int64_t r;
    std::int64_t q;
    std::string name() const { return "twobridge:" + std::to_string(r) + "," + std::to_string(q); }
};

std::vector<Member> members(const SweepSpec& spec) {
    std::vector<Member> out;
    for (std::int64_t q = 1; q <= spec.r_max; q += 2)
        for (std::int64_t r = std::max<std::int64_t>(q, 3); r <= spec.r_max; r += 2) out.push_back({r, q});
    return out;
}

std::vector<Companion> companions(const SweepSpec& spec) {
    std::vector<Companion> out;
    for (int eps : {-1, 1})
        for (std::int64_t tau = -spec.tau_max; tau <= spec.tau_max; ++tau) out.push_back(Companion::make(tau, eps));
    out.push_back(Companion::make(0, 0));
    return out;
}

std::string point_name(const Member& m, const Companion& k, std::int64_t n) {
    return m.name() + " tau=" + std::to_string(k.tau) + " eps=" + std::to_string(k.eps) + " n=" + std::to_string(n);
}

// Outcome of one sweep point: empty = pass.
struct Outcome {
    bool skipped = false;
    std::string failure;
};

CheckSummary collect(SweepCheck check, const std::vector<Outcome>& outcomes) {
    CheckSummary s;
    s.check = check;
    for (const Outcome& o : outcomes) {
        if (o.skipped) {
            ++s.skipped;
            continue;
        }
        ++s.points;
        if (!o.failure.empty()) {
            if (s.failures == 0) s.first_failure = o.failure;
            ++s.failures;
        }
    }
    return s;
}

Outcome property_point_unguarded(const Member& m, const SweepSpec& spec) {
    LinkAlexData data = twobridge_link(m.r, m.q);
    HFunction h(data);
    ValidationReport rep;
    if (spec.injection && spec.injection->r == m.r && spec.injection->q == m.q) {
        HOverride bad(h, spec.injection->entries);
        rep = validate(bad);
    } else {
        rep = validate(h);
    }
    if (!rep.ok()) return {false, m.name() + ": " + rep.summary()};
    if (width(data) != rep.width)
        return {false, m.name() + ": width from delta_tilde " + width(data).str() + " != width from H " + rep.width.str()};
    if (m.q >= 3) {
        PatternProfile prof = twobridge_profile(m.r, m.q);
        const HalfInt l2 = half(prof.ell);
        if (r_of_t(h, l2 - 1) != *prof.r_minus || r_of_t(h, l2) != *prof.r_center || r_of_t(h, l2 + 1) != *prof.r_plus)
            return {false, m.name() + ": R-values differ from the two-bridge formulas"};
    }
    const std::int64_t p = m.r * m.q - 1;
    if (hoste_closed_form(p, m.q, p / 2) != twobridge_walk_polynomial(m.r, m.q))
        return {false, m.name() + ": walk polynomial differs from the closed-form sum"};
    return {};
}

// A corrupted table may break the staircase reader itself; that also counts as a counterexample.
Outcome property_point(const Member& m, const SweepSpec& spec) {
    try {
        return property_point_unguarded(m, spec);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Internal) throw;
        return {false, m.name() + ": " + e.what()};
    }
}

Outcome classifier_point(const std::optional<Member>& m) {
    LinkAlexData data = m ? twobridge_link(m->r, m->q) : unlink_data();
    std::string name = m ? m->name() : "unlink";
    OperatorClass want = OperatorClass::Obstructed;
    if (!m) want = OperatorClass::Trivial;
    else if (m->r == 3 && m->q == 1) want = OperatorClass::Identity;
    for (std::int64_t n : {0, 1, 2}) {
        Classification got = classify_operator(data, n);
        if (got.cls != want)
            return {false, name + " n=" + std::to_string(n) + ": classified " + to_string(got.cls) + ", expected " + to_string(want)};
    }
    return {};
}

}  // namespace

std::vector<CheckSummary> run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.check();
    const std::vector<Member> pats = members(spec);
    const std::vector<Companion> comps = companions(spec);
    std::vector<PatternProfile> profiles;
    for (const Member& m : pats) profiles.push_back(twobridge_profile(m.r, m.q));

    const std::size_t n_count = static_cast<std::size_t>(spec.n_max - spec.n_min + 1);
    const std::size_t grid = pats.size() * n_count * comps.size();
    auto unpack = [&](std::size_t i) {
        std::size_t c = i % comps.size();
        std::size_t rest = i / comps.size();
        std::int64_t n = spec.n_min + static_cast<std::int64_t>(rest % n_count);
        std::size_t p = rest / n_count;
        return std::tuple<std::size_t, const Companion&, std::int64_t>{p, comps[c], n};
    };

    std::vector<CheckSummary> out;
    for (SweepCheck check : spec.checks) {
        std::vector<Outcome> outcomes;
        switch (check) {
            case SweepCheck::Properties:
                outcomes.resize(pats.size());
                parallel_for(pats.size(), threads, [&](std::size_t i) { outcomes[i] = property_point(pats[i], spec); });
                break;
            case SweepCheck::Classifier:
                outcomes.resize(pats.size() + 1);
                parallel_for(pats.size() + 1, threads, [&](std::size_t i) {
                    outcomes[i] = classifier_point(i < pats.size() ? std::optional<Member>(pats[i]) : std::nullopt);
                });
                break;
            case SweepCheck::Oracle:
                outcomes.resize(grid);
                parallel_for(grid, threads, [&](std::size_t i) {
                    auto [p, k, n] = unpack(i);
                    try {
                        TauResult a = tau_closed_form(profiles[p], k, n);
                        TauResult b = tau_oracle(profiles[p], k, n);
                        if (a.value != b.value)
                            outcomes[i].failure = point_name(pats[p], k, n) + ": closed form " + std::to_string(a.value) +
                                                  " (" + a.case_tag + ") != oracle " + std::to_string(b.value);
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::UnsupportedRegime) throw;
                        outcomes[i].skipped = true;
                    }
                });
                break;
            case SweepCheck::Inequality:
                outcomes.resize(grid);
                parallel_for(grid, threads, [&](std::size_t i) {
                    auto [p, k, n] = unpack(i);
                    InequalityResult res = tau_inequality_check(profiles[p], k, n);
                    if (!res.lhs || !res.rhs) {
                        outcomes[i].skipped = true;
                    } else if (!res.holds) {
                        outcomes[i].failure = point_name(pats[p], k, n) + ": tau = " + std::to_string(*res.lhs) +
                                              " < cable bound " + std::to_string(*res.rhs);
                    }
                });
                break;
            case SweepCheck::Genus:
                outcomes.resize(grid);
                parallel_for(grid, threads, [&](std::size_t i) {
                    auto [p, k, n] = unpack(i);
                    if (k.tau <= 0 || k.eps != 1) {
                        outcomes[i].skipped = true;
                        return;
                    }
                    const PatternProfile& prof = profiles[p];
                    try {
                        SliceGenus g = g4_satellite(prof, k, n, true);
                        if (n == 0 && g.value != tau_closed_form(prof, k, 0).value)
                            outcomes[i].failure = point_name(pats[p], k, n) + ": g4 formula != tau at n = 0";
                        if (prof.ell == 0 && n < 2 * k.tau && g.value != g3rel(prof))
                            outcomes[i].failure = point_name(pats[p], k, n) + ": winding-0 slice genus != g3rel";
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::UnsupportedRegime) throw;
                        outcomes[i].skipped = true;
                    }
                });
                break;
        }
        out.push_back(collect(check, outcomes));
    }
    return out;
}

}  // namespace lsat
