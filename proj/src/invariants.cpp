#include "lsat/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "lsat/error.hpp"

namespace lsat {

namespace {

// l(l-1)n/2, always an integer.
std::int64_t framing_term(std::int64_t ell, std::int64_t n) { return ell * (ell - 1) / 2 * n; }

HalfInt need(const std::optional<HalfInt>& v, const PatternProfile& prof, const char* what) {
    if (!v) fail_regime("r-value-unavailable", prof.name + ": " + what + " is not known for this pattern");
    return *v;
}

TauResult finish(HalfInt value, const char* tag) {
    return TauResult{value.to_int(), "closed-form", tag};
}

}  // namespace

std::pair<std::int64_t, std::int64_t> fold_framing(std::int64_t q, std::int64_t p, std::int64_t lo) {
    if (p <= 0) fail_input("bad-pattern", "fold needs p > 0");
    std::int64_t n = q - lo >= 0 ? (q - lo) / p : -((lo - q + p - 1) / p);
    return {q - n * p, n};
}

TauResult tau_closed_form(const PatternProfile& prof, const Companion& k, std::int64_t n) {
    if (prof.ell < 0) fail_input("bad-profile", "linking number must be normalized to >= 0");
    const HalfInt l2 = half(prof.ell);
    const std::int64_t tail = framing_term(prof.ell, n) + prof.ell * k.tau;
    const HalfInt g = HalfInt::from_int(prof.g3);

    if (k.eps == 1) {
        if (n < 2 * k.tau) return finish(need(prof.r_center, prof, "R_{l/2}") - l2 + tail, "eps=1,n<2tau");
        return finish(g + tail, "eps=1,n>=2tau");
    }
    if (k.eps == 0) {
        if (k.tau != 0) fail_input("bad-companion", "epsilon = 0 forces tau = 0");
        if (n >= 0) return finish(g + framing_term(prof.ell, n), "eps=0,n>=0");
        if (!prof.cond_tau) fail_regime("unsupported-regime", prof.name + ": eps=0, n<0 needs R_{l/2-1} >= g3 + l/2 - 1");
        HalfInt rm = need(prof.r_minus, prof, "R_{l/2-1}");
        HalfInt rc = need(prof.r_center, prof, "R_{l/2}");
        return finish(std::max(rm + l2, rc - l2) + framing_term(prof.ell, n), "eps=0,n<0");
    }
    if (k.eps != -1) fail_input("bad-companion", "epsilon must be -1, 0 or 1");
    if (!prof.cond_tau) fail_regime("unsupported-regime", prof.name + ": eps=-1 needs R_{l/2-1} >= g3 + l/2 - 1");
    HalfInt rm = need(prof.r_minus, prof, "R_{l/2-1}");
    if (n < 2 * k.tau) {
        HalfInt rc = need(prof.r_center, prof, "R_{l/2}");
        return finish(std::max(rm + l2, rc - l2) + tail, "eps=-1,n<2tau");
    }
    if (n == 2 * k.tau) {
        HalfInt rp = need(prof.r_plus, prof, "R_{l/2+1}");
        return finish(std::max(rm + l2, rp - l2) + tail, "eps=-1,n=2tau");
    }
    if (n == 2 * k.tau + 1) {
        HalfInt rp = need(prof.r_plus, prof, "R_{l/2+1}");
        return finish(std::min(rm + l2, rp + l2) + tail, "eps=-1,n=2tau+1");
    }
    return finish(std::min(rm + l2, g + prof.ell) + tail, "eps=-1,n>2tau+1");
}

TauResult tau_cable(std::int64_t p, std::int64_t q, const Companion& k) {
    if (p == 1) return TauResult{k.tau, "family-formula", "cable,p=1"};
    if (p <= 0 || q == 0 || std::gcd(p, q) != 1) fail_input("bad-pattern", "cable needs p > 0, q != 0, gcd(p, q) = 1");
    if (k.eps == -1) {
        TauResult mirrored = tau_cable(p, -q, k.mirror());
        return TauResult{-mirrored.value, mirrored.method, "cable,eps=-1,mirror"};
    }
    auto [r, n] = fold_framing(q, p, 1);
    PatternProfile prof = cable_profile(p, r);
    if (k.eps == 0 && n < 0) {
        // Locally trivial companion: the torus knot T(p, q) with q < 0.
        check_internal(q < 0, "cable-fold", "negative framing with positive q");
        return TauResult{(p - 1) * (q + 1) / 2, "family-formula", "cable,eps=0,q<0"};
    }
    TauResult res = tau_closed_form(prof, k, n);
    res.case_tag = "cable," + res.case_tag;
    return res;
}

TauResult tau_bridge_braid(std::int64_t p, std::int64_t q, std::int64_t b, const Companion& k) {
    if (!braid_closure_is_knot(p, q, b) || b <= 0 || b >= p - 1)
        fail_input("bad-pattern", "B(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(b) +
                                      ") is not a 1-bridge braid knot");
    if (k.eps == -1) {
        TauResult mirrored = tau_bridge_braid(p, -q - 1, p - b - 1, k.mirror());
        return TauResult{-mirrored.value, mirrored.method, "braid,eps=-1,mirror"};
    }
    auto [r, n] = fold_framing(q, p, p + 1);
    PatternProfile prof = bridge_braid_profile(p, r, b);
    if (k.eps == 0 && n < 0) {
        if (q > 0) return TauResult{((p - 1) * (q - 1) + b) / 2, "family-formula", "braid,eps=0,q>0"};
        return TauResult{((p - 1) * (q + 1) + b) / 2, "family-formula", "braid,eps=0,q<-1"};
    }
    TauResult res = tau_closed_form(prof, k, n);
    res.case_tag = "braid," + res.case_tag;
    return res;
}

std::string to_string(EpsVerdict v) { return v == EpsVerdict::Guaranteed ? "guaranteed" : "inconclusive"; }

EpsVerdict eps_not_minus_one(const PatternProfile& prof, const Companion& k, std::int64_t n) {
    if (prof.ell < 0) fail_input("bad-profile", "linking number must be normalized to >= 0");
    if (k.eps == 1 || (k.eps == 0 && n >= 0)) return EpsVerdict::Guaranteed;
    return prof.cond_eps ? EpsVerdict::Guaranteed : EpsVerdict::Inconclusive;
}

std::string to_string(OperatorClass c) {
    switch (c) {
        case OperatorClass::Trivial: return "trivial";
        case OperatorClass::Identity: return "identity";
        case OperatorClass::OrientationReversing: return "orientation_reversing";
        case OperatorClass::Obstructed: return "obstructed";
    }
    return "obstructed";
}

Classification classify_operator(const LinkAlexData& data, std::int64_t n) {
    if (n < 0) fail_input("bad-framing", "the classifier is stated for n >= 0");
    Classification out;
    LinkAlexData d = data.sign_resolved ? data : resolve_sign(data);
    if (d.linking < 0) {
        d = reverse_second_orientation(d);
        out.orientation_reversed = true;
    }
    PatternProfile prof = generic_profile(d);
    const std::int64_t ell = prof.ell;
    const HalfInt l2 = half(ell);
    auto obstructed = [&](std::string claim) {
        out.cls = OperatorClass::Obstructed;
        out.failed_claim = std::move(claim);
        return out;
    };

    if (prof.g3 != 0) return obstructed("g3 != 0");
    if (*prof.r_center != l2) return obstructed("R_{l/2} != l/2");
    if (n > 0 && ell > 1) return obstructed("l not in {0,1}");
    if (prof.width != l2) return obstructed("N != l/2");
    if (*prof.r_minus < l2 - 1) return obstructed("R_{l/2-1} < l/2 - 1");
    if (*prof.r_minus != -l2) return obstructed("R_{l/2-1} != -l/2");
    if (ell > 1) return obstructed("l not in {0,1}");

    HFunction h(d);
    HalfInt window = std::max(prof.width + 3, h.stable_bound() + 1);
    for (HalfInt t : lattice_range(ell, -window, window)) {
        for (HalfInt r : lattice_range(ell, -window, window)) {
            std::int64_t ref = ell == 0 ? h_unknot(t) + h_unknot(r) : h_t22l(1, t, r);
            if (h(t, r) != ref)
                return obstructed("H differs from the reference at (" + t.str() + ", " + r.str() + ")");
        }
    }
    if (ell == 0) out.cls = OperatorClass::Trivial;
    else out.cls = out.orientation_reversed ? OperatorClass::OrientationReversing : OperatorClass::Identity;
    return out;
}

InequalityResult tau_inequality_check(const PatternProfile& prof, const Companion& k, std::int64_t n) {
    InequalityResult out;
    try {
        out.lhs = tau_closed_form(prof, k, n).value;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedRegime) throw;
        out.skipped = e.tag();
        return out;
    }
    if (prof.ell == 0) out.rhs = 0;
    else out.rhs = tau_cable(prof.ell, prof.ell * n + 1, k).value;
    out.holds = *out.lhs >= *out.rhs;
    return out;
}

}  // namespace lsat
