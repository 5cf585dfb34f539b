#include "lsat/hfunction.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "lsat/error.hpp"

namespace lsat {

namespace {

std::int64_t to_i64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        fail_input("overflow", "H-function value exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

HalfInt abs(HalfInt h) { return h < HalfInt{} ? -h : h; }

// Smallest lattice point of the given coset that is >= x.
HalfInt ceil_to_coset(HalfInt x, int coset) {
    return x.coset() == coset ? x : x + half(1);
}

std::int64_t sublink_sum(const LinkAlexData& data, HalfInt t, HalfInt r) {
    BigInt s12 = 0;
    for (const auto& [e, c] : data.delta_tilde.terms())
        if (e.first >= t + 1 && e.second >= r + 1) s12 += c;
    return to_i64(s12);
}

std::int64_t gn_value(const KnotChi& chi1, const KnotChi& chi2, const LinkAlexData& data, HalfInt t, HalfInt r) {
    HalfInt shift = half(data.linking);
    BigInt total = chi1.h(t - shift) + chi2.h(r - shift);
    return to_i64(total) - sublink_sum(data, t, r);
}

HalfInt compute_bound(const LinkAlexData& data, const KnotChi& chi1, const KnotChi& chi2) {
    HalfInt m = HalfInt::from_int(1);
    for (const auto& [e, c] : data.delta_tilde.terms()) m = std::max({m, abs(e.first), abs(e.second)});
    HalfInt l = abs(half(data.linking));
    for (const KnotChi* k : {&chi1, &chi2}) m = std::max({m, abs(k->top()) + l, abs(k->bottom()) + l});
    return ceil_to_coset(m + 2, static_cast<int>(((data.linking % 2) + 2) % 2));
}

// Nonnegativity, monotonicity and bounded gap on a square window.
bool passes_basic(const HEvaluator& h, HalfInt bound) {
    auto pts = lattice_range(h.linking(), -bound, bound);
    for (HalfInt t : pts) {
        for (HalfInt r : pts) {
            std::int64_t v = h(t, r);
            if (v < 0) return false;
            std::int64_t vt = h(t + 1, r);
            std::int64_t vr = h(t, r + 1);
            if (vt > v || vt < v - 1 || vr > v || vr < v - 1) return false;
        }
    }
    return true;
}

}  // namespace

// ---- LinkAlexData ----

void LinkAlexData::check() const {
    if (auto c = delta_tilde.coset()) {
        int want = static_cast<int>(((linking % 2) + 2) % 2);
        if (c->first != want || c->second != want)
            fail_input("bad-link-data", "delta_tilde support is not on (linking/2 + Z)^2");
    }
    for (const LaurentPoly1* d : {&delta1, &delta2}) {
        if (d->is_zero() || !d->is_symmetric())
            fail_input("bad-link-data", "component polynomial " + d->str() + " is not symmetric");
        BigInt v = d->value_at_one();
        if (v != 1 && v != -1) fail_input("bad-link-data", "component polynomial " + d->str() + " has Delta(1) != +-1");
    }
}

LinkAlexData normalize_link(const LaurentPoly2& raw_delta, std::int64_t linking, const LaurentPoly1& delta1,
                            const LaurentPoly1& delta2) {
    LinkAlexData data;
    data.linking = linking;
    data.delta1 = delta1;
    data.delta2 = delta2;
    if (!raw_delta.is_zero()) data.delta_tilde = symmetrize(raw_delta).poly.shifted(half(1), half(1));
    data.check();
    return resolve_sign(std::move(data));
}

LinkAlexData reverse_second_orientation(const LinkAlexData& data) {
    LaurentPoly2 raw = data.delta_tilde.shifted(-half(1), -half(1)).inverted_second();
    return normalize_link(raw, -data.linking, data.delta1, data.delta2);
}

// ---- HFunction ----

struct HFunction::Memo {
    struct KeyHash {
        std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const noexcept {
            return std::hash<std::int64_t>{}(k.first * 1000003 + k.second);
        }
    };
    std::mutex mutex;
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::int64_t, KeyHash> table;
};

HFunction::HFunction(LinkAlexData data)
    : data_(std::move(data)), chi1_(data_.delta1), chi2_(data_.delta2), memo_(std::make_shared<Memo>()) {
    if (!data_.sign_resolved) fail_input("unresolved-sign", "call resolve_sign before building an H-function");
    data_.check();
    bound_ = compute_bound(data_, chi1_, chi2_);
}

std::int64_t HFunction::value(HalfInt t, HalfInt r) const {
    int cs = lattice_coset();
    if (t.coset() != cs || r.coset() != cs)
        fail_input("off-lattice", "(" + t.str() + ", " + r.str() + ") is not in (linking/2 + Z)^2");
    std::pair key{t.doubled(), r.doubled()};
    {
        std::lock_guard lock(memo_->mutex);
        if (auto it = memo_->table.find(key); it != memo_->table.end()) return it->second;
    }
    std::int64_t v = gn_value(chi1_, chi2_, data_, t, r);
    std::lock_guard lock(memo_->mutex);
    memo_->table.emplace(key, v);
    return v;
}

std::int64_t HFunction::component(int i, HalfInt s) const {
    const KnotChi& k = (i == 1) ? chi1_ : chi2_;
    return to_i64(k.h(s));
}

std::optional<HalfInt> HFunction::width_hint() const {
    if (!data_.first_component_unknot()) return std::nullopt;
    return width(data_);
}

HOverride::HOverride(const HEvaluator& base, std::map<std::pair<HalfInt, HalfInt>, std::int64_t> entries)
    : base_(base), entries_(std::move(entries)) {}

std::int64_t HOverride::value(HalfInt t, HalfInt r) const {
    if (auto it = entries_.find({t, r}); it != entries_.end()) return it->second;
    return base_.value(t, r);
}

HalfInt HOverride::stable_bound() const {
    HalfInt b = base_.stable_bound();
    for (const auto& [p, v] : entries_) b = std::max({b, abs(p.first) + 2, abs(p.second) + 2});
    return ceil_to_coset(b, lattice_coset());
}

// ---- free functions ----

std::int64_t gn_h(const LinkAlexData& data, HalfInt t, HalfInt r) {
    if (!data.sign_resolved) fail_input("unresolved-sign", "call resolve_sign before evaluating H");
    return gn_value(KnotChi(data.delta1), KnotChi(data.delta2), data, t, r);
}

LinkAlexData resolve_sign(LinkAlexData data) {
    data.check();
    for (int attempt = 0; attempt < 2; ++attempt) {
        LinkAlexData trial = data;
        if (attempt == 1) trial.delta_tilde = -trial.delta_tilde;
        trial.sign_resolved = true;
        HFunction h(trial);
        if (passes_basic(h, h.stable_bound())) return trial;
        if (data.delta_tilde.is_zero()) break;
    }
    fail_input("not-an-lspace-link", "neither sign of " + data.delta_tilde.str() + " gives a valid H-function");
}

std::vector<HalfInt> lattice_range(std::int64_t ell, HalfInt lo, HalfInt hi) {
    std::vector<HalfInt> out;
    int cs = static_cast<int>(((ell % 2) + 2) % 2);
    for (HalfInt x = ceil_to_coset(lo, cs); x <= hi; x = x + 1) out.push_back(x);
    return out;
}

std::vector<HalfInt> column_corners(const HEvaluator& h, HalfInt t) {
    HalfInt b = h.stable_bound() + abs(t);
    std::vector<HalfInt> out;
    for (HalfInt r = ceil_to_coset(b, h.lattice_coset()); r >= -b; r = r - 1) {
        std::int64_t v = h(t, r);
        if (h(t, r + 1) == v && h(t, r - 1) == v + 1) out.push_back(r);
    }
    return out;
}

HalfInt r_of_t(const HEvaluator& h, HalfInt t) {
    if (t.coset() != h.lattice_coset()) fail_input("off-lattice", "t = " + t.str() + " is not in linking/2 + Z");
    HalfInt b = h.stable_bound() + abs(t);
    for (HalfInt r = ceil_to_coset(b, h.lattice_coset()); r >= -b; r = r - 1) {
        std::int64_t v = h(t, r);
        if (h(t, r + 1) == v && h(t, r - 1) == v + 1) return r;
    }
    fail_input("not-an-lspace-link", "column t = " + t.str() + " has no top generator");
}

HalfInt width(const LinkAlexData& data) {
    if (!data.first_component_unknot())
        fail_input("component-not-unknot", "width from delta_tilde needs an unknotted first component");
    return data.delta_tilde.is_zero() ? HalfInt{} : data.delta_tilde.max_exponent1();
}

HalfInt width_from_h(const HEvaluator& h) {
    HalfInt b = h.stable_bound();
    auto rows = lattice_range(h.linking(), -b - 1, b + 1);
    HalfInt t0 = ceil_to_coset(b, h.lattice_coset());
    for (HalfInt t = t0 - 1; t >= -b - 1; t = t - 1) {
        bool same = std::all_of(rows.begin(), rows.end(), [&](HalfInt r) { return h(t, r) == h(t + 1, r); });
        if (!same) break;
        t0 = t;
    }
    return t0;
}

std::int64_t h_unknot(HalfInt s) { return std::max<std::int64_t>(-s.to_int(), 0); }

std::int64_t h_t22l(std::int64_t ell, HalfInt s1, HalfInt s2) {
    HalfInt l2 = half(ell);
    return std::max(h_unknot(s1 - l2), (-s1 - s2).to_int() + h_unknot(-s1 - l2));
}

RTable r_table(const HEvaluator& h, HalfInt window) {
    RTable out;
    for (HalfInt t : lattice_range(h.linking(), -window, window)) out.values.emplace(t, r_of_t(h, t));
    HalfInt n = width_from_h(h);
    out.low_constant = r_of_t(h, -n);
    out.high_constant = r_of_t(h, n);
    return out;
}

std::string ValidationReport::summary() const {
    if (ok()) return "all properties hold";
    const Violation& v = violations.front();
    std::ostringstream out;
    out << v.property << " fails at (" << v.t.str() << ", " << v.r.str() << "): " << v.detail;
    if (violations.size() > 1) out << " (+" << violations.size() - 1 << " more)";
    return out.str();
}

ValidationReport validate(const HEvaluator& h, HalfInt window) {
    ValidationReport rep;
    const std::int64_t ell = h.linking();
    const HalfInt l2 = half(ell);
    rep.width = width_from_h(h);
    if (window == HalfInt{}) window = abs(rep.width) + 3;
    const HalfInt far = h.stable_bound() + window + 2;
    auto pts = lattice_range(ell, -window, window);

    auto fail = [&](const char* prop, HalfInt t, HalfInt r, std::string detail) {
        rep.violations.push_back({prop, t, r, std::move(detail)});
    };

    for (HalfInt t : pts) {
        for (HalfInt r : pts) {
            std::int64_t v = h(t, r);
            if (v < 0) fail("nonnegativity", t, r, "H = " + std::to_string(v));
            std::int64_t vt = h(t + 1, r), vr = h(t, r + 1);
            if (vt > v) fail("monotonicity", t, r, "H(t+1,r) = " + std::to_string(vt) + " > " + std::to_string(v));
            if (vr > v) fail("monotonicity", t, r, "H(t,r+1) = " + std::to_string(vr) + " > " + std::to_string(v));
            if (vt < v - 1) fail("bounded-gap", t, r, "H(t+1,r) = " + std::to_string(vt) + " < H - 1");
            if (vr < v - 1) fail("bounded-gap", t, r, "H(t,r+1) = " + std::to_string(vr) + " < H - 1");
            if (v + (t + r).to_int() != h(-t, -r)) fail("symmetry", t, r, "H(t,r) + t + r != H(-t,-r)");
            if (h.first_component_unknot() && ell >= 0 && v < h_t22l(ell, t, r))
                fail("t22l-lower-bound", t, r, "H < H_T(2,2l) = " + std::to_string(h_t22l(ell, t, r)));
        }
        HalfInt far_c = far.coset() == t.coset() ? far : far + half(1);
        if (h(t, far_c) != h.component(1, t - l2))
            fail("stabilization", t, far_c, "H(t, inf) != H_L1(t - l/2)");
        if (h(far_c, t) != h.component(2, t - l2))
            fail("stabilization", far_c, t, "H(inf, r) != H_L2(r - l/2)");
    }

    if (-rep.width > l2 || l2 > rep.width) fail("width-bound", rep.width, l2, "-N <= l/2 <= N violated");
    if (auto hint = h.width_hint(); hint && *hint != rep.width)
        fail("width-alexander", rep.width, *hint, "top x1-power " + hint->str() + " != width " + rep.width.str());

    if (!h.first_component_unknot()) return rep;

    // Shape of R_t.
    const HalfInt n = rep.width;
    std::map<HalfInt, HalfInt> rt;
    for (HalfInt t : lattice_range(ell, -window - 1, window + 1)) rt.emplace(t, r_of_t(h, t));
    const HalfInt low = r_of_t(h, -n), high = r_of_t(h, n);
    if (high - low != HalfInt::from_int(ell)) fail("r-shape", n, high, "R_N - R_-N != l");
    if (high - l2 < HalfInt{}) fail("r-shape", n, high, "g3 = R_N - l/2 < 0");
    for (const auto& [t, r] : rt) {
        if (t <= -n && r != low) fail("r-shape", t, r, "R_t not constant for t <= -N");
        if (t >= n && r != high) fail("r-shape", t, r, "R_t not constant for t >= N");
        if (auto prev = rt.find(t - 1); prev != rt.end() && t <= l2 && prev->second > r)
            fail("r-shape", t, r, "R_{t-1} > R_t below l/2");
        if (auto next = rt.find(t + 1); next != rt.end() && t >= l2 && next->second > r)
            fail("r-shape", t, r, "R_{t+1} > R_t above l/2");
        if (h(t, r) != h_unknot(t - l2)) fail("r-shape", t, r, "H(t, R_t) != H_U(t - l/2)");
        for (HalfInt s = r; s <= r + 3; s = s + 1)
            if (h(t, s) != h(t, r)) fail("r-shape", t, s, "H(t, r) != H(t, R_t) above R_t");
    }
    HalfInt centre = r_of_t(h, l2);
    for (const auto& [t, r] : rt)
        if (r > centre) fail("r-shape", t, r, "R_t exceeds R_{l/2}");
    return rep;
}

}  // namespace lsat
