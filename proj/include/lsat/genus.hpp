#pragma once

#include <cstdint>
#include <string>

#include "lsat/patterns.hpp"

namespace lsat {

// Minimal genus of a surface in S^1 x D^2 bounded by P and l longitudes.
std::int64_t g3rel(const PatternProfile& prof);

struct SliceGenus {
    std::int64_t value = 0;
    std::string regime;  // "n=0", "winding-0", "minimal-wrapping"
};

// g4(P(K, n)) under the caller's assertion that tau(K) = g4(K) > 0.
SliceGenus g4_satellite(const PatternProfile& prof, const Companion& k, std::int64_t n, bool g4_equals_tau);

// g3rel(P, -n) for a minimally wrapped pattern and n >= 0.
std::int64_t g3rel_framed(const PatternProfile& prof, std::int64_t n);

}  // namespace lsat
