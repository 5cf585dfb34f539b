#include "lsat/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lsat/error.hpp"

namespace lsat {

namespace {

bool is_odd(std::int64_t v) { return v % 2 != 0; }

void check_twobridge(std::int64_t r, std::int64_t q) {
    if (!is_odd(r) || !is_odd(q) || q < 1 || r < 3 || r < q)
        fail_input("bad-pattern", "two-bridge parameters need odd r >= q >= 1 with r >= 3");
}

// Permutation of the strands after the braid word, as a cycle count.
std::size_t cycle_count(const std::vector<std::int64_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    return cycles;
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::ClosedForm: return "closed-form";
        case Provenance::ComputedFromH: return "computed-from-H";
        case Provenance::User: return "user";
        case Provenance::Unknown: return "unknown";
    }
    return "unknown";
}

void PatternProfile::finalize() {
    if (ell < 0) fail_input("bad-profile", "linking number must be normalized to >= 0");
    if (g3 < 0) fail_input("bad-profile", "g3 must be nonnegative");
    const HalfInt l2 = half(ell);
    minimal_wrapping = (width == l2);
    cond_tau = r_minus && *r_minus >= l2 + (g3 - 1);
    cond_eps = r_minus && *r_minus >= l2 + g3;
    if (ell == 0 || ell == 1 || g3 == 0) {
        if (r_minus && !cond_tau)
            fail_internal("profile-invariant", name + ": R_{l/2-1} violates the condition forced for l in {0,1} or g3 = 0");
        cond_tau = true;
    }
    if (r_center) {
        if (r_minus && *r_minus > *r_center) fail_internal("profile-invariant", name + ": R_{l/2-1} > R_{l/2}");
        if (r_plus && *r_plus > *r_center) fail_internal("profile-invariant", name + ": R_{l/2+1} > R_{l/2}");
        HalfInt rel = *r_center - l2;
        if (rel < HalfInt::from_int(g3)) fail_internal("profile-invariant", name + ": R_{l/2} - l/2 < g3");
        if (minimal_wrapping && rel != HalfInt::from_int(g3))
            fail_internal("profile-invariant", name + ": minimal wrapping but R_{l/2} - l/2 != g3");
    }
    if (width < l2 || -width > l2) fail_internal("profile-invariant", name + ": width below l/2");
}

Companion Companion::make(std::int64_t tau, int eps, std::vector<std::int64_t> b_seq) {
    if (eps < -1 || eps > 1) fail_input("bad-companion", "epsilon must be -1, 0 or 1");
    if (eps == 0 && tau != 0) fail_input("bad-companion", "epsilon = 0 forces tau = 0");
    if (eps == 0 && !b_seq.empty()) fail_input("bad-companion", "epsilon = 0 admits no staircase parameters");
    if (!b_seq.empty()) {
        if (std::find(b_seq.begin(), b_seq.end(), 0) != b_seq.end())
            fail_input("bad-companion", "staircase parameters must be nonzero");
        auto sign = [](std::int64_t v) { return v > 0 ? 1 : -1; };
        if (sign(b_seq.front()) != eps || sign(b_seq.back()) != -eps)
            fail_input("bad-companion", "need sign(b_1) = epsilon = -sign(b_m)");
    }
    return Companion{tau, eps, std::move(b_seq)};
}

Companion Companion::mirror() const {
    std::vector<std::int64_t> b;
    b.reserve(b_seq.size());
    for (std::int64_t v : b_seq) b.push_back(-v);
    return Companion{-tau, -eps, std::move(b)};
}

// ---- two-bridge ----

int twobridge_eta(std::int64_t p, std::int64_t q, std::int64_t i) {
    if (p <= 0 || q <= 0 || i <= 0) fail_input("bad-pattern", "eta needs positive p, q, i");
    return ((i * q / p) % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<std::int64_t, std::int64_t>> twobridge_walk(std::int64_t r, std::int64_t q) {
    check_twobridge(r, q);
    std::vector<std::pair<std::int64_t, std::int64_t>> pts{{0, 0}};
    auto step = [&](std::int64_t dx, std::int64_t dy, std::int64_t count) {
        for (std::int64_t k = 0; k < count; ++k) pts.emplace_back(pts.back().first + dx, pts.back().second + dy);
    };
    step(1, 1, (r - 3) / 2);
    for (std::int64_t rep = 0; rep < (q - 1) / 2; ++rep) {
        step(1, 0, 1);
        step(-1, -1, (r - 1) / 2);
        step(1, 0, 1);
        step(1, 1, (r - 3) / 2);
    }
    std::set<std::pair<std::int64_t, std::int64_t>> seen(pts.begin(), pts.end());
    check_internal(seen.size() == pts.size(), "walk-revisit", "two-bridge walk revisits a point");
    return pts;
}

LaurentPoly2 twobridge_walk_polynomial(std::int64_t r, std::int64_t q) {
    LaurentPoly2::Terms t;
    for (auto [i, j] : twobridge_walk(r, q)) t[{HalfInt::from_int(i), HalfInt::from_int(j)}] += ((i + j) % 2 == 0) ? 1 : -1;
    return LaurentPoly2(std::move(t));
}

LaurentPoly2 hoste_closed_form(std::int64_t p, std::int64_t q, std::int64_t upper) {
    LaurentPoly2::Terms t;
    std::int64_t e1 = 0;      // sum of eta_{2j}, j < i
    std::int64_t odd_sum = 0; // sum of eta_{2k-1}, k < i
    for (std::int64_t i = 1; i <= upper; ++i) {
        int lead = twobridge_eta(p, q, 2 * i - 1);
        std::int64_t e2 = (lead - 1) / 2 + odd_sum;
        t[{HalfInt::from_int(e1), HalfInt::from_int(e2)}] += lead;
        e1 += twobridge_eta(p, q, 2 * i);
        odd_sum += lead;
    }
    return LaurentPoly2(std::move(t));
}

std::int64_t twobridge_linking_from_eta(std::int64_t r, std::int64_t q) {
    check_twobridge(r, q);
    const std::int64_t p = r * q - 1;
    std::int64_t sum = 0;
    for (std::int64_t k = 0; k <= (r * q - 3) / 2; ++k) sum += twobridge_eta(p, q, 2 * k + 1);
    return sum;
}

LinkAlexData twobridge_link(std::int64_t r, std::int64_t q) {
    check_twobridge(r, q);
    const std::int64_t ell = (r - q) / 2;
    check_internal(ell == twobridge_linking_from_eta(r, q), "linking-mismatch",
                   "bridge presentation and sign sequence disagree on the linking number");
    return normalize_link(twobridge_walk_polynomial(r, q), ell);
}

PatternProfile twobridge_profile(std::int64_t r, std::int64_t q) {
    check_twobridge(r, q);
    PatternProfile prof;
    prof.name = "twobridge:" + std::to_string(r) + "," + std::to_string(q);
    prof.ell = (r - q) / 2;
    prof.g3 = 0;
    LinkAlexData link = twobridge_link(r, q);
    prof.width = width(link);
    prof.provenance = {{"ell", Provenance::ClosedForm}, {"g3", Provenance::ClosedForm}, {"width", Provenance::ComputedFromH}};
    if (q >= 3) {
        prof.r_center = HalfInt::from_doubled((r + q - 2) / 2);
        prof.r_minus = HalfInt::from_doubled((r + q - 6) / 2);
        prof.r_plus = prof.r_minus;
        for (const char* k : {"r_minus", "r_center", "r_plus"}) prof.provenance[k] = Provenance::ClosedForm;
    } else {
        // q = 1 is the torus link T(2, r-1): the support is a segment, the
        // width is l/2 and R_{l/2+1} sits on the stable value g3 + l/2.
        HFunction h(link);
        const HalfInt l2 = half(prof.ell);
        prof.r_minus = r_of_t(h, l2 - 1);
        prof.r_center = r_of_t(h, l2);
        prof.r_plus = r_of_t(h, l2 + 1);
        for (const char* k : {"r_minus", "r_center", "r_plus"}) prof.provenance[k] = Provenance::ComputedFromH;
    }
    prof.finalize();
    return prof;
}

// ---- cables and braids ----

PatternProfile cable_profile(std::int64_t p, std::int64_t r) {
    if (p < 2 || r <= 0 || r >= p) fail_input("bad-pattern", "cable needs p >= 2 and 0 < r < p");
    if (std::gcd(p, r) != 1) fail_input("bad-pattern", "cable with gcd(p, r) != 1 is a link");
    PatternProfile prof;
    prof.name = "cable:" + std::to_string(p) + "," + std::to_string(r);
    prof.ell = p;
    prof.g3 = (p - 1) * (r - 1) / 2;
    prof.width = half(p);
    prof.r_center = HalfInt::from_int(prof.g3) + half(p);
    prof.provenance = {{"ell", Provenance::ClosedForm},   {"g3", Provenance::ClosedForm},
                       {"width", Provenance::ClosedForm}, {"r_minus", Provenance::Unknown},
                       {"r_center", Provenance::ClosedForm}, {"r_plus", Provenance::Unknown}};
    prof.finalize();
    return prof;
}

bool braid_closure_is_knot(std::int64_t p, std::int64_t q, std::int64_t b) {
    if (p < 2 || b < 0 || b >= p) return false;
    std::vector<std::int64_t> strands(static_cast<std::size_t>(p));
    std::iota(strands.begin(), strands.end(), 0);
    auto sigma = [&](std::int64_t i) { std::swap(strands[i - 1], strands[i]); };
    for (std::int64_t i = b; i >= 1; --i) sigma(i);
    // (sigma_{p-1}...sigma_1) has order p as a permutation; sigma_i^{-1} permutes like sigma_i.
    std::int64_t reps = ((q % p) + p) % p;
    for (std::int64_t k = 0; k < reps; ++k)
        for (std::int64_t i = p - 1; i >= 1; --i) sigma(i);
    return cycle_count(strands) == 1;
}

PatternProfile bridge_braid_profile(std::int64_t p, std::int64_t r, std::int64_t b) {
    if (p < 3 || r <= p || r >= 2 * p || b <= 0 || b >= p - 1)
        fail_input("bad-pattern", "1-bridge braid needs p < r < 2p and 0 < b < p - 1");
    if (!braid_closure_is_knot(p, r, b)) fail_input("bad-pattern", "braid closure is a link, not a knot");
    const std::int64_t twice_g3 = (p - 1) * (r - 1) + b;
    check_internal(twice_g3 % 2 == 0, "parity", "knot closure with odd 2*g3");
    PatternProfile prof;
    prof.name = "braid:" + std::to_string(p) + "," + std::to_string(r) + "," + std::to_string(b);
    prof.ell = p;
    prof.g3 = twice_g3 / 2;
    prof.width = half(p);
    prof.r_center = HalfInt::from_int(prof.g3) + half(p);
    prof.provenance = {{"ell", Provenance::ClosedForm},   {"g3", Provenance::ClosedForm},
                       {"width", Provenance::ClosedForm}, {"r_minus", Provenance::Unknown},
                       {"r_center", Provenance::ClosedForm}, {"r_plus", Provenance::Unknown}};
    prof.finalize();
    return prof;
}

// ---- generic ----

PatternProfile generic_profile(const LinkAlexData& data, std::optional<std::int64_t> g3) {
    LinkAlexData d = data.sign_resolved ? data : resolve_sign(data);
    if (d.linking < 0) d = reverse_second_orientation(d);
    if (!d.first_component_unknot()) fail_input("component-not-unknot", "the meridian component must be an unknot");
    HFunction h(d);
    ValidationReport rep = validate(h);
    if (!rep.ok()) fail_input("validation-failed", rep.summary());

    const HalfInt l2 = half(d.linking);
    PatternProfile prof;
    prof.name = "generic";
    prof.ell = d.linking;
    prof.width = width(d);
    prof.r_minus = r_of_t(h, l2 - 1);
    prof.r_center = r_of_t(h, l2);
    prof.r_plus = r_of_t(h, l2 + 1);
    std::int64_t derived = (r_of_t(h, prof.width) - l2).to_int();
    if (g3 && *g3 != derived)
        fail_input("g3-conflict", "supplied g3 = " + std::to_string(*g3) + " but the H-function gives " + std::to_string(derived));
    prof.g3 = derived;
    prof.provenance = {{"ell", Provenance::ComputedFromH},   {"g3", g3 ? Provenance::User : Provenance::ComputedFromH},
                       {"width", Provenance::ComputedFromH}, {"r_minus", Provenance::ComputedFromH},
                       {"r_center", Provenance::ComputedFromH}, {"r_plus", Provenance::ComputedFromH}};
    prof.finalize();
    return prof;
}

LinkAlexData unlink_data() {
    LinkAlexData d;
    return resolve_sign(d);
}

LinkAlexData hopf_data(int sign) {
    if (sign != 1 && sign != -1) fail_input("bad-pattern", "Hopf link sign must be +-1");
    LinkAlexData d;
    d.linking = sign;
    d.delta_tilde = LaurentPoly2::monomial(half(1), half(1), sign);
    return resolve_sign(d);
}

LinkAlexData whitehead_data() {
    LinkAlexData d;
    d.delta_tilde = LaurentPoly2(LaurentPoly2::Terms{{{half(2), half(2)}, -1},
                                                     {{half(2), half(0)}, 1},
                                                     {{half(0), half(2)}, 1},
                                                     {{half(0), half(0)}, -1}});
    return resolve_sign(d);
}

}  // namespace lsat
