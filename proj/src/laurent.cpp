#include "lsat/laurent.hpp"

#include <sstream>

#include "lsat/error.hpp"

namespace lsat {

namespace {

template <class Map>
void drop_zeros(Map& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0) it = m.erase(it);
        else ++it;
    }
}

void append_term(std::ostringstream& out, bool first, const BigInt& c, const std::string& mono) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
        out << mag;
    } else {
        if (mag != 1) out << mag << "*";
        out << mono;
    }
}

std::string power(const char* var, HalfInt e) {
    if (e == HalfInt{}) return {};
    std::string s = var;
    if (e != HalfInt::from_int(1)) s += "^" + e.str();
    return s;
}

}  // namespace

// ---- LaurentPoly1 ----

LaurentPoly1::LaurentPoly1(Terms terms) : terms_(std::move(terms)) { drop_zeros(terms_); }

LaurentPoly1 LaurentPoly1::monomial(HalfInt e, BigInt c) { return LaurentPoly1(Terms{{e, std::move(c)}}); }

BigInt LaurentPoly1::coeff(HalfInt e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

HalfInt LaurentPoly1::min_exponent() const {
    check_internal(!terms_.empty(), "zero-poly", "min_exponent of zero polynomial");
    return terms_.begin()->first;
}

HalfInt LaurentPoly1::max_exponent() const {
    check_internal(!terms_.empty(), "zero-poly", "max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly1::value_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly1 LaurentPoly1::operator-() const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, -c);
    return LaurentPoly1(std::move(t));
}

LaurentPoly1 LaurentPoly1::shifted(HalfInt a) const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e + a, c);
    return LaurentPoly1(std::move(t));
}

bool LaurentPoly1::is_symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

LaurentPoly1 operator+(const LaurentPoly1& p, const LaurentPoly1& q) {
    LaurentPoly1::Terms t = p.terms_;
    for (const auto& [e, c] : q.terms_) t[e] += c;
    return LaurentPoly1(std::move(t));
}

LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q) {
    LaurentPoly1::Terms t;
    for (const auto& [e1, c1] : p.terms_)
        for (const auto& [e2, c2] : q.terms_) t[e1 + e2] += c1 * c2;
    return LaurentPoly1(std::move(t));
}

std::string LaurentPoly1::str(const char* var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(out, first, it->second, power(var, it->first));
        first = false;
    }
    return out.str();
}

// ---- LaurentPoly2 ----

LaurentPoly2::LaurentPoly2(Terms terms) : terms_(std::move(terms)) {
    drop_zeros(terms_);
    if (terms_.empty()) return;
    auto [a0, b0] = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        if (e.first.coset() != a0.coset() || e.second.coset() != b0.coset())
            fail_input("coset-mismatch", "exponents on different cosets of Z^2");
    }
}

LaurentPoly2 LaurentPoly2::monomial(HalfInt a, HalfInt b, BigInt c) {
    return LaurentPoly2(Terms{{{a, b}, std::move(c)}});
}

BigInt LaurentPoly2::coeff(HalfInt a, HalfInt b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<std::pair<int, int>> LaurentPoly2::coset() const {
    if (terms_.empty()) return std::nullopt;
    const auto& e = terms_.begin()->first;
    return std::pair{e.first.coset(), e.second.coset()};
}

HalfInt LaurentPoly2::max_exponent1() const {
    check_internal(!terms_.empty(), "zero-poly", "max_exponent1 of zero polynomial");
    return terms_.rbegin()->first.first;
}

HalfInt LaurentPoly2::min_exponent1() const {
    check_internal(!terms_.empty(), "zero-poly", "min_exponent1 of zero polynomial");
    return terms_.begin()->first.first;
}

HalfInt LaurentPoly2::max_exponent2() const {
    check_internal(!terms_.empty(), "zero-poly", "max_exponent2 of zero polynomial");
    HalfInt m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::max(m, e.second);
    return m;
}

HalfInt LaurentPoly2::min_exponent2() const {
    check_internal(!terms_.empty(), "zero-poly", "min_exponent2 of zero polynomial");
    HalfInt m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::min(m, e.second);
    return m;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, -c);
    return LaurentPoly2(std::move(t));
}

LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q) {
    auto cp = p.coset();
    auto cq = q.coset();
    if (cp && cq && *cp != *cq) fail_input("coset-mismatch", "cannot add " + p.str() + " and " + q.str());
    LaurentPoly2::Terms t = p.terms_;
    for (const auto& [e, c] : q.terms_) t[e] += c;
    return LaurentPoly2(std::move(t));
}

LaurentPoly2 LaurentPoly2::shifted(HalfInt a, HalfInt b) const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(Exp2{e.first + a, e.second + b}, c);
    return LaurentPoly2(std::move(t));
}

LaurentPoly2 LaurentPoly2::inverted_second() const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(Exp2{e.first, -e.second}, c);
    return LaurentPoly2(std::move(t));
}

bool LaurentPoly2::has_inversion_symmetry(int sign) const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e.first, -e.second) != sign * c) return false;
    return true;
}

std::string LaurentPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string m1 = power("x1", it->first.first);
        std::string m2 = power("x2", it->first.second);
        std::string mono = m1.empty() ? m2 : (m2.empty() ? m1 : m1 + "*" + m2);
        append_term(out, first, it->second, mono);
        first = false;
    }
    return out.str();
}

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q) { return p + q; }

LaurentPoly2 shift(const LaurentPoly2& p, HalfInt a, HalfInt b) { return p.shifted(a, b); }

Symmetrized symmetrize(const LaurentPoly2& p) {
    if (p.is_zero()) fail_input("zero-polynomial", "cannot symmetrize 0");
    std::int64_t s1 = p.min_exponent1().doubled() + p.max_exponent1().doubled();
    std::int64_t s2 = p.min_exponent2().doubled() + p.max_exponent2().doubled();
    if (s1 % 2 != 0 || s2 % 2 != 0)
        fail_input("not-alexander-symmetric", "Newton polytope of " + p.str() + " has no centre in (Z/2)^2");
    HalfInt c1 = HalfInt::from_doubled(s1 / 2);
    HalfInt c2 = HalfInt::from_doubled(s2 / 2);
    LaurentPoly2 q = p.shifted(-c1, -c2);
    if (!q.has_inversion_symmetry(1) && !q.has_inversion_symmetry(-1))
        fail_input("not-alexander-symmetric", "coefficients of " + p.str() + " are not symmetric about the centre");
    return Symmetrized{std::move(q), 1, -c1, -c2};
}

// ---- knot chi ----

namespace {

LaurentPoly1 normalized_knot_delta(const LaurentPoly1& delta) {
    if (!delta.is_symmetric()) fail_input("not-alexander-symmetric", "knot polynomial " + delta.str() + " is not symmetric");
    BigInt v = delta.value_at_one();
    if (v == 1) return delta;
    if (v == -1) return -delta;
    fail_input("bad-knot-polynomial", "Delta(1) must be +-1 for " + delta.str());
}

// chi(s) for s in [bottom, top] by summing coefficients from the top.
LaurentPoly1 chi_window(const LaurentPoly1& delta) {
    LaurentPoly1::Terms t;
    BigInt running = 0;
    for (HalfInt s = delta.max_exponent(); s >= delta.min_exponent(); s = s - 1) {
        running += delta.coeff(s);
        t[s] = running;
    }
    return LaurentPoly1(std::move(t));
}

}  // namespace

LaurentPoly1 knot_chi_expansion(const LaurentPoly1& delta, HalfInt depth) {
    LaurentPoly1 d = normalized_knot_delta(delta);
    LaurentPoly1 chi = chi_window(d);
    HalfInt bottom = d.min_exponent();
    if (depth.coset() != bottom.coset()) depth = depth + half(1);
    for (HalfInt s = bottom; s < depth; s = s + 1) {
        if (chi.coeff(s) != 1)
            fail_input("increase-depth", "chi(" + s.str() + ") != 1 below depth " + depth.str());
    }
    LaurentPoly1::Terms out;
    for (const auto& [s, c] : chi.terms())
        if (s >= depth) out.emplace(s, c);
    // Below the bottom exponent chi is identically 1.
    for (HalfInt s = depth; s < bottom; s = s + 1) out.emplace(s, 1);
    return LaurentPoly1(std::move(out));
}

KnotChi::KnotChi(const LaurentPoly1& delta) {
    LaurentPoly1 d = normalized_knot_delta(delta);
    bottom_ = d.min_exponent();
    top_ = d.max_exponent();
    chi_ = chi_window(d);
    unknot_ = (d == LaurentPoly1::one());
}

BigInt KnotChi::chi(HalfInt s) const {
    if (s.coset() != bottom_.coset()) fail_internal("coset-mismatch", "chi queried off the exponent coset");
    if (s < bottom_) return 1;
    if (s > top_) return 0;
    return chi_.coeff(s);
}

BigInt KnotChi::tail_sum(HalfInt a) const {
    if (a.coset() != bottom_.coset()) fail_internal("coset-mismatch", "tail sum queried off the exponent coset");
    if (a > top_) return 0;
    BigInt total = 0;
    HalfInt start = a;
    if (a < bottom_) {
        total += (bottom_ - a).to_int();
        start = bottom_;
    }
    for (HalfInt s = start; s <= top_; s = s + 1) total += chi_.coeff(s);
    return total;
}

}  // namespace lsat
