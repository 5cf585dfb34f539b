#include "lsat/genus.hpp"

#include "lsat/error.hpp"

namespace lsat {

std::int64_t g3rel(const PatternProfile& prof) {
    if (prof.ell < 0) fail_input("bad-profile", "linking number must be normalized to >= 0");
    if (!prof.r_center) fail_regime("r-value-unavailable", prof.name + ": R_{l/2} is not known");
    return (*prof.r_center - half(prof.ell)).to_int();
}

SliceGenus g4_satellite(const PatternProfile& prof, const Companion& k, std::int64_t n, bool g4_equals_tau) {
    if (!g4_equals_tau) fail_input("hypothesis-flag-absent", "the slice genus formulas assume tau(K) = g4(K) > 0");
    if (k.tau <= 0) fail_input("bad-companion", "tau(K) = g4(K) > 0 needs tau(K) > 0");
    const std::int64_t ell = prof.ell;
    if (n == 0) return {g3rel(prof) + ell * k.tau, "n=0"};
    if (ell == 0 && n < 2 * k.tau) return {g3rel(prof), "winding-0"};
    if (prof.minimal_wrapping && n >= 0) return {prof.g3 + ell * (ell - 1) / 2 * n + ell * k.tau, "minimal-wrapping"};
    fail_regime("no-formula", prof.name + ": no slice genus formula for n = " + std::to_string(n));
}

std::int64_t g3rel_framed(const PatternProfile& prof, std::int64_t n) {
    if (!prof.minimal_wrapping) fail_regime("not-minimal-wrapping", prof.name + ": width exceeds l/2");
    if (n < 0) fail_input("bad-framing", "n must be >= 0");
    return prof.g3 + prof.ell * (prof.ell - 1) / 2 * n;
}

}  // namespace lsat
