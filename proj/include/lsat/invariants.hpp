#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "lsat/hfunction.hpp"
#include "lsat/patterns.hpp"

namespace lsat {

struct TauResult {
    std::int64_t value = 0;
    std::string method;    // "closed-form", "oracle" or "family-formula"
    std::string case_tag;  // e.g. "eps=1,n<2tau"
};

// tau(P(K, n)) from the pattern profile. Refuses regimes where the closed
// form is not proven or a needed R-value is unavailable.
TauResult tau_closed_form(const PatternProfile& prof, const Companion& k, std::int64_t n);

// Writes q = r + p*n with r in [lo, lo + p); returns {r, n}.
std::pair<std::int64_t, std::int64_t> fold_framing(std::int64_t q, std::int64_t p, std::int64_t lo);

// tau of the (p, q)-cable of K.
TauResult tau_cable(std::int64_t p, std::int64_t q, const Companion& k);

// tau of K_{p,q,b}, the satellite by the 1-bridge braid B(p, q, b) at framing 0.
TauResult tau_bridge_braid(std::int64_t p, std::int64_t q, std::int64_t b, const Companion& k);

enum class EpsVerdict { Guaranteed, Inconclusive };
std::string to_string(EpsVerdict v);

// Whether eps(P(K, n)) != -1 is guaranteed.
EpsVerdict eps_not_minus_one(const PatternProfile& prof, const Companion& k, std::int64_t n);

enum class OperatorClass { Trivial, Identity, OrientationReversing, Obstructed };
std::string to_string(OperatorClass c);

struct Classification {
    OperatorClass cls = OperatorClass::Obstructed;
    std::string failed_claim;  // empty unless obstructed
    bool orientation_reversed = false;
};

// Decides whether P(-, n) can be a concordance homomorphism for an L-space
// pattern. Requires an unknotted first component.
Classification classify_operator(const LinkAlexData& data, std::int64_t n);

// tau(P(K, n)) >= tau(K_{l, ln+1}). lhs/rhs are empty when a side is not
// computable in closed form; holds is then vacuous.
struct InequalityResult {
    std::optional<std::int64_t> lhs;
    std::optional<std::int64_t> rhs;
    std::string skipped;
    bool holds = true;
};

InequalityResult tau_inequality_check(const PatternProfile& prof, const Companion& k, std::int64_t n);

}  // namespace lsat
