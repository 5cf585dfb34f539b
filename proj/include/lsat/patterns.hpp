#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsat/halfint.hpp"
#include "lsat/hfunction.hpp"
#include "lsat/laurent.hpp"

namespace lsat {

enum class Provenance { ClosedForm, ComputedFromH, User, Unknown };
std::string to_string(Provenance p);

// Scalar data of a satellite pattern P with L_P = mu u P.
struct PatternProfile {
    std::string name;
    std::int64_t ell = 0;  // lk(mu, P) >= 0
    std::int64_t g3 = 0;   // Seifert genus of P in S^3
    HalfInt width;
    std::optional<HalfInt> r_minus;   // R_{l/2 - 1}
    std::optional<HalfInt> r_center;  // R_{l/2}
    std::optional<HalfInt> r_plus;    // R_{l/2 + 1}
    bool cond_tau = false;  // R_{l/2-1} >= g3 + l/2 - 1
    bool cond_eps = false;  // R_{l/2-1} >= g3 + l/2
    bool minimal_wrapping = false;
    std::map<std::string, Provenance> provenance;

    // Derives the condition flags and checks the structural invariants.
    void finalize();
};

// Companion knot data: tau(K), epsilon(K) and optionally the standard
// complex parameters b_1..b_m.
struct Companion {
    std::int64_t tau = 0;
    int eps = 0;
    std::vector<std::int64_t> b_seq;

    static Companion make(std::int64_t tau, int eps, std::vector<std::int64_t> b_seq = {});
    Companion mirror() const;
};

// ---- two-bridge links L(rq-1, q) ----

int twobridge_eta(std::int64_t p, std::int64_t q, std::int64_t i);
std::vector<std::pair<std::int64_t, std::int64_t>> twobridge_walk(std::int64_t r, std::int64_t q);
// Unsymmetrized polynomial read off the walk.
LaurentPoly2 twobridge_walk_polynomial(std::int64_t r, std::int64_t q);
// Hoste's closed-form sum for L(p, q), summed over i = 1..upper.
LaurentPoly2 hoste_closed_form(std::int64_t p, std::int64_t q, std::int64_t upper);
// Sum of eta_{2k+1} over the sign sequence of L(rq-1, q).
std::int64_t twobridge_linking_from_eta(std::int64_t r, std::int64_t q);
LinkAlexData twobridge_link(std::int64_t r, std::int64_t q);
PatternProfile twobridge_profile(std::int64_t r, std::int64_t q);

// ---- cables and 1-bridge braids ----

PatternProfile cable_profile(std::int64_t p, std::int64_t r);
bool braid_closure_is_knot(std::int64_t p, std::int64_t q, std::int64_t b);
PatternProfile bridge_braid_profile(std::int64_t p, std::int64_t r, std::int64_t b);

// ---- generic patterns ----

// Profile assembled from H-function queries. A negative linking number is
// normalized by reversing P. g3 is read off the R_t shape; a supplied value
// must agree.
PatternProfile generic_profile(const LinkAlexData& data, std::optional<std::int64_t> g3 = std::nullopt);

// Reference links.
LinkAlexData unlink_data();
LinkAlexData hopf_data(int sign);
LinkAlexData whitehead_data();

}  // namespace lsat
