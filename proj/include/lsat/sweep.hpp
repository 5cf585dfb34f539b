#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsat/halfint.hpp"

namespace lsat {

enum class SweepCheck { Properties, Oracle, Inequality, Classifier, Genus };
std::string to_string(SweepCheck c);
std::optional<SweepCheck> parse_sweep_check(const std::string& name);

// Corrupted H-values for one two-bridge member, keyed by (t, r).
struct Injection {
    std::int64_t r = 3;
    std::int64_t q = 3;
    std::map<std::pair<HalfInt, HalfInt>, std::int64_t> entries;
};

// Two-bridge members L(rq-1, q) with odd 1 <= q <= r <= r_max, r >= 3,
// crossed with framings and companions.
struct SweepSpec {
    std::int64_t r_max = 9;
    std::int64_t n_min = -4;
    std::int64_t n_max = 4;
    std::int64_t tau_max = 2;
    std::vector<SweepCheck> checks{SweepCheck::Properties, SweepCheck::Oracle, SweepCheck::Inequality,
                                   SweepCheck::Classifier, SweepCheck::Genus};
    std::optional<Injection> injection;

    void check() const;  // ranges finite and nonempty
};

struct CheckSummary {
    SweepCheck check = SweepCheck::Properties;
    std::size_t points = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::string first_failure;
};

// Runs every requested check. Points are spread over `threads` workers;
// summaries come back in the order of spec.checks.
std::vector<CheckSummary> run_sweep(const SweepSpec& spec, unsigned threads);

// Calls body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace lsat
