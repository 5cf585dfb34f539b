#include "lsat/zcomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "lsat/error.hpp"

namespace lsat {

// ---- ZComplex ----

std::size_t ZComplex::add_generator(std::string label, std::int64_t gr_w, std::int64_t gr_z) {
    if (find(label)) fail_internal("duplicate-generator", label);
    gens_.push_back({std::move(label), gr_w, gr_z});
    return gens_.size() - 1;
}

void ZComplex::add_arrow(std::size_t source, std::size_t target, std::int64_t power) {
    const ZGenerator& s = gens_.at(source);
    const ZGenerator& t = gens_.at(target);
    if (power < 0) fail_internal("negative-power", s.label + " -> " + t.label);
    if (t.gr_w != s.gr_w - 1 || t.gr_z - 2 * power != s.gr_z - 1)
        fail_internal("inhomogeneous-arrow", s.label + " -> Z^" + std::to_string(power) + " " + t.label);
    arrows_.push_back({source, target, power});
}

std::optional<std::size_t> ZComplex::find(const std::string& label) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].label == label) return i;
    return std::nullopt;
}

bool ZComplex::d_squared_zero() const {
    std::vector<std::vector<const ZArrow*>> out(gens_.size());
    for (const ZArrow& a : arrows_) out[a.source].push_back(&a);
    for (std::size_t x = 0; x < gens_.size(); ++x) {
        std::map<std::pair<std::size_t, std::int64_t>, int> dd;
        for (const ZArrow* a : out[x])
            for (const ZArrow* b : out[a->target]) dd[{b->target, a->power + b->power}] ^= 1;
        for (const auto& [key, bit] : dd)
            if (bit) return false;
    }
    return true;
}

Json to_json(const ZComplex& c) {
    Json gens = Json::array();
    for (const ZGenerator& g : c.generators())
        gens.push_back({{"label", g.label}, {"gr_w", g.gr_w}, {"gr_z", g.gr_z}, {"A_doubled", g.alexander().doubled()}});
    Json arrows = Json::array();
    for (const ZArrow& a : c.arrows())
        arrows.push_back({{"source", c.generators()[a.source].label},
                          {"target", c.generators()[a.target].label},
                          {"power", a.power}});
    return {{"generators", gens}, {"arrows", arrows}};
}

// ---- staircases ----

Staircase staircase_from_column(const HEvaluator& h, HalfInt t) {
    Staircase st;
    st.t = t;
    std::vector<HalfInt> corners = column_corners(h, t);
    check_internal(!corners.empty(), "empty-column", "column " + t.str() + " has no corners");
    std::vector<Staircase::Generator> even;
    for (HalfInt r : corners) {
        std::int64_t gw = -2 * h(t, r);
        even.push_back({gw, gw - (t + r).doubled(), r});
    }
    for (std::size_t i = 0; i < even.size(); ++i) {
        st.gens.push_back(even[i]);
        if (i + 1 == even.size()) break;
        Staircase::Generator odd{even[i + 1].gr_w + 1, even[i].gr_z + 1, std::nullopt};
        std::int64_t a2 = even[i].gr_w - odd.gr_w + 1;
        std::int64_t b2 = even[i + 1].gr_z - odd.gr_z + 1;
        check_internal(a2 > 0 && b2 > 0 && a2 % 2 == 0 && b2 % 2 == 0, "staircase-step",
                       "column " + t.str() + " gives a non-positive step");
        st.alpha.push_back(a2 / 2);
        st.beta.push_back(b2 / 2);
        st.gens.push_back(odd);
    }
    return st;
}

// ---- summands ----

std::string to_string(SummandCase c) {
    switch (c) {
        case SummandCase::Eps1: return "eps1";
        case SummandCase::Eps0Pos: return "eps0_pos";
        case SummandCase::Eps0Neg: return "eps0_neg";
        case SummandCase::EpsMinus1: return "epsm1";
    }
    return "eps1";
}

SummandCase summand_case(const Companion& k, std::int64_t n) {
    if (k.eps == 1) return SummandCase::Eps1;
    if (k.eps == -1) return SummandCase::EpsMinus1;
    return n >= 0 ? SummandCase::Eps0Pos : SummandCase::Eps0Neg;
}

namespace {

// A bipartite zig-zag: sources map to sinks. Alexander gradings are fixed
// from one anchor and pushed along the arrows.
class ZigZag {
public:
    std::size_t source(std::string label) { return node(std::move(label), true); }
    std::size_t sink(std::string label) { return node(std::move(label), false); }

    void arrow(std::size_t src, std::size_t tgt, HalfInt weight) {
        check_internal(nodes_[src].is_source && !nodes_[tgt].is_source, "zigzag-shape", "arrow must go from source to sink");
        std::int64_t k = weight.to_int();
        if (k < 0) fail_internal("negative-weight", nodes_[src].label + " -> " + nodes_[tgt].label + " has weight " + weight.str());
        edges_.push_back({src, tgt, k});
    }

    ZComplex finish(std::size_t anchor, HalfInt anchor_a) const {
        std::vector<std::optional<HalfInt>> a(nodes_.size());
        a[anchor] = anchor_a;
        std::queue<std::size_t> todo;
        todo.push(anchor);
        while (!todo.empty()) {
            std::size_t v = todo.front();
            todo.pop();
            for (const ZArrow& e : edges_) {
                std::size_t other;
                HalfInt value;
                if (e.source == v) {
                    other = e.target;
                    value = *a[v] - e.power;
                } else if (e.target == v) {
                    other = e.source;
                    value = *a[v] + e.power;
                } else {
                    continue;
                }
                if (!a[other]) {
                    a[other] = value;
                    todo.push(other);
                } else {
                    check_internal(*a[other] == value, "grading-conflict", "zig-zag gradings disagree at " + nodes_[other].label);
                }
            }
        }
        ZComplex c;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            check_internal(a[i].has_value(), "disconnected", nodes_[i].label + " is not reached from the anchor");
            std::int64_t gw = nodes_[i].is_source ? 0 : -1;
            c.add_generator(nodes_[i].label, gw, gw - a[i]->doubled());
        }
        for (const ZArrow& e : edges_) c.add_arrow(e.source, e.target, e.power);
        return c;
    }

private:
    struct Node {
        std::string label;
        bool is_source;
    };

    std::size_t node(std::string label, bool is_source) {
        nodes_.push_back({std::move(label), is_source});
        return nodes_.size() - 1;
    }

    std::vector<Node> nodes_;
    std::vector<ZArrow> edges_;
};

HalfInt need(const std::optional<HalfInt>& v, const PatternProfile& prof, const char* what) {
    if (!v) fail_regime("r-value-unavailable", prof.name + ": " + what + " is not known for this pattern");
    return *v;
}

std::string idx(const char* stem, std::int64_t i) { return std::string(stem) + "_" + std::to_string(i); }

// F sinks F_0..F_k joined by k sources E_i -> F_{i-1} (L_tau), E_i -> F_i (L_sigma).
ZComplex chain_from_left(std::int64_t k, HalfInt w_tau, HalfInt w_sigma, HalfInt anchor_a) {
    ZigZag z;
    std::vector<std::size_t> f{z.sink("x'_0")};
    for (std::int64_t i = 1; i <= k; ++i) {
        std::size_t e = z.source(idx("x^l/2", i));
        f.push_back(z.sink(idx("x'", i)));
        z.arrow(e, f[i - 1], w_tau);
        z.arrow(e, f[i], w_sigma);
    }
    return z.finish(f[0], anchor_a);
}

std::string summand_tag(const Companion& k, std::int64_t n) {
    switch (summand_case(k, n)) {
        case SummandCase::Eps1: return n < 2 * k.tau ? "eps=1,n<2tau" : "eps=1,n>=2tau";
        case SummandCase::Eps0Pos: return "eps=0,n>=0";
        case SummandCase::Eps0Neg: return "eps=0,n<0";
        case SummandCase::EpsMinus1:
            if (n < 2 * k.tau) return "eps=-1,n<2tau";
            if (n == 2 * k.tau) return "eps=-1,n=2tau";
            if (n == 2 * k.tau + 1) return "eps=-1,n=2tau+1";
            return "eps=-1,n>2tau+1";
    }
    return "";
}

}  // namespace

ZComplex build_summand(SummandCase which, const PatternProfile& prof, const Companion& k, std::int64_t n) {
    if (prof.ell < 0) fail_input("bad-profile", "linking number must be normalized to >= 0");
    if (which != summand_case(k, n)) fail_input("bad-summand", "summand case does not match the companion and framing");
    const HalfInt l2 = half(prof.ell);
    const HalfInt g = HalfInt::from_int(prof.g3);
    const std::int64_t c = prof.ell * (prof.ell - 1) / 2 * n;
    const std::int64_t lt = prof.ell * k.tau;
    const HalfInt rc = need(prof.r_center, prof, "R_{l/2}");
    const HalfInt w_tau = rc + l2 - g;    // L_tau on x^{l/2}
    const HalfInt w_sigma = rc - l2 - g;  // L_sigma on x^{l/2}

    switch (which) {
        case SummandCase::Eps1: {
            if (n >= 2 * k.tau) return chain_from_left(n - 2 * k.tau, w_tau, w_sigma, g + c + lt);
            const std::int64_t rungs = 2 * k.tau - n;
            ZigZag z;
            std::size_t ym = z.source("y_m|x'");
            std::vector<std::size_t> m{z.sink("y'|x'_0")};
            z.arrow(ym, m[0], HalfInt{});
            for (std::int64_t i = 1; i <= rungs; ++i) {
                std::size_t j = z.source(idx("y'|x^l/2", i));
                m.push_back(z.sink(idx("y'|x'", i)));
                z.arrow(j, m[i - 1], w_tau);
                z.arrow(j, m[i], w_sigma);
            }
            std::size_t y0 = z.source("y_0|x'");
            z.arrow(y0, m.back(), HalfInt{});
            return z.finish(y0, g + c + lt);
        }
        case SummandCase::Eps0Pos:
            return chain_from_left(n, w_tau, w_sigma, g + c);
        case SummandCase::Eps0Neg:
        case SummandCase::EpsMinus1:
            break;
    }

    if (!prof.cond_tau) fail_regime("unsupported-regime", prof.name + ": needs R_{l/2-1} >= g3 + l/2 - 1");
    const HalfInt rm = need(prof.r_minus, prof, "R_{l/2-1}");
    const HalfInt rp = need(prof.r_plus, prof, "R_{l/2+1}");
    const HalfInt w_tau_minus = rm + l2 - g;  // L_tau on x^{l/2-1}
    const HalfInt w_sigma_plus = rp - l2 - g; // L_sigma on x^{l/2+1}

    if (which == SummandCase::Eps0Neg) {
        const std::int64_t copies = -n;
        ZigZag z;
        std::size_t left = z.source("x^l/2-1");
        std::vector<std::size_t> xs{z.sink("x'_0")};
        z.arrow(left, xs[0], w_tau_minus);
        for (std::int64_t i = 1; i <= copies; ++i) {
            std::size_t mid = z.source(idx("x^l/2", i));
            xs.push_back(z.sink(idx("x'", i)));
            z.arrow(mid, xs[i - 1], w_sigma);
            z.arrow(mid, xs[i], w_tau);
        }
        std::size_t right = z.source("x^l/2+1");
        z.arrow(right, xs.back(), w_sigma_plus);
        return z.finish(left, rm + l2 + c);
    }

    // eps(K) = -1
    const HalfInt anchor_a = rm + l2 + c + lt;
    ZigZag z;
    if (n <= 2 * k.tau) {
        const std::int64_t rungs = 2 * k.tau - n;
        std::size_t ym1 = z.source("y_m-1|x^l/2+1");
        std::vector<std::size_t> xs{z.sink("y'|x'_0")};
        z.arrow(ym1, xs[0], w_sigma_plus);
        for (std::int64_t i = 1; i <= rungs; ++i) {
            std::size_t j = z.source(idx("y'|x^l/2", i));
            xs.push_back(z.sink(idx("y'|x'", i)));
            z.arrow(j, xs[i - 1], w_tau);
            z.arrow(j, xs[i], w_sigma);
        }
        std::size_t y1 = z.source("y_1|x^l/2-1");
        z.arrow(y1, xs.back(), w_tau_minus);
        return z.finish(y1, anchor_a);
    }

    const std::int64_t copies = n - 2 * k.tau;
    std::size_t y1 = z.sink("y_1|x^l/2-1");
    std::size_t ym1 = z.sink("y_m-1|x^l/2+1");
    const HalfInt w_w = rc - rm;  // L_W from x^{l/2}
    const HalfInt w_z = rc - rp;  // L_Z from x^{l/2}
    if (copies == 1) {
        std::size_t y0 = z.source("y_0|x^l/2");
        z.arrow(y0, y1, w_w);
        z.arrow(y0, ym1, w_z);
    } else {
        std::size_t prev_sink = y1;
        for (std::int64_t i = 1; i <= copies; ++i) {
            std::size_t s = z.source(idx("y_0|x^l/2", i));
            z.arrow(s, prev_sink, i == 1 ? w_w : w_tau);
            if (i == copies) {
                z.arrow(s, ym1, w_z);
            } else {
                prev_sink = z.sink(idx("y_0|x'", i));
                z.arrow(s, prev_sink, w_sigma);
            }
        }
    }
    ZComplex out = z.finish(y1, anchor_a);
    if (copies == 1) {
        HalfInt stated = rp + l2 + c + lt;
        check_internal(out.alexander(*out.find("y_m-1|x^l/2+1")) == stated, "endpoint-grading",
                       "propagated grading of y_m-1|x^l/2+1 differs from R_{l/2+1} + l/2 + l(l-1)n/2 + l tau");
    }
    return out;
}

// ---- homology ----

namespace {

using Bits = std::vector<char>;

// Boundary of each generator with Z set to 1, as F2 vectors.
std::vector<Bits> boundary_columns(const ZComplex& c) {
    std::vector<Bits> cols(c.size(), Bits(c.size(), 0));
    for (const ZArrow& a : c.arrows()) cols[a.source][a.target] ^= 1;
    return cols;
}

void xor_into(Bits& dst, const Bits& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

bool is_zero(const Bits& v) {
    return std::all_of(v.begin(), v.end(), [](char b) { return b == 0; });
}

// Reduced row-echelon basis with insertion test.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    // Adds v; returns false when v was already in the span.
    bool insert(Bits v) {
        reduce(v);
        auto lead = std::find(v.begin(), v.end(), 1);
        if (lead == v.end()) return false;
        std::size_t p = static_cast<std::size_t>(lead - v.begin());
        for (auto& [q, row] : rows_)
            if (row[p]) xor_into(row, v);
        rows_.emplace(p, std::move(v));
        return true;
    }

    bool contains(Bits v) const {
        reduce(v);
        return is_zero(v);
    }

    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(Bits& v) const {
        for (const auto& [p, row] : rows_)
            if (v[p]) xor_into(v, row);
    }

    std::size_t dim_;
    std::map<std::size_t, Bits> rows_;
};

}  // namespace

HalfInt tower_alexander_persistence(const ZComplex& c) {
    const std::size_t n = c.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const ZGenerator& ga = c.generators()[a];
        const ZGenerator& gb = c.generators()[b];
        if (ga.alexander() != gb.alexander()) return ga.alexander() < gb.alexander();
        return ga.gr_w < gb.gr_w;
    });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    // Columns indexed by filtration position.
    std::vector<Bits> cols(n, Bits(n, 0));
    for (const ZArrow& a : c.arrows()) {
        check_internal(pos[a.target] < pos[a.source], "filtration-order", "boundary does not precede its source");
        cols[pos[a.source]][pos[a.target]] ^= 1;
    }
    auto low = [&](const Bits& col) -> std::optional<std::size_t> {
        for (std::size_t i = col.size(); i-- > 0;)
            if (col[i]) return i;
        return std::nullopt;
    };
    std::map<std::size_t, std::size_t> pivot_of;  // low row -> column
    std::vector<bool> negative(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        while (auto l = low(cols[j])) {
            auto it = pivot_of.find(*l);
            if (it == pivot_of.end()) {
                pivot_of.emplace(*l, j);
                negative[j] = true;
                break;
            }
            xor_into(cols[j], cols[it->second]);
        }
    }
    std::vector<std::size_t> essential;
    for (std::size_t j = 0; j < n; ++j)
        if (!negative[j] && !pivot_of.count(j)) essential.push_back(j);
    check_internal(essential.size() == 1, "free-rank",
                   "homology after inverting Z has rank " + std::to_string(essential.size()) + ", expected 1");
    return c.alexander(order[essential.front()]);
}

HalfInt tower_alexander_gradewise(const ZComplex& c) {
    const std::size_t n = c.size();
    check_internal(n > 0, "free-rank", "empty complex");
    std::vector<Bits> cols = boundary_columns(c);

    Span boundaries(n);
    for (const Bits& col : cols) boundaries.insert(col);

    // Kernel basis of d restricted to generators with A <= level, by column
    // reduction with a tracked change of basis.
    auto cycles_up_to = [&](HalfInt level) {
        std::vector<Bits> reduced;
        std::vector<Bits> combo;
        for (std::size_t j = 0; j < n; ++j) {
            if (c.alexander(j) > level) continue;
            reduced.push_back(cols[j]);
            Bits e(n, 0);
            e[j] = 1;
            combo.push_back(std::move(e));
        }
        std::vector<Bits> kernel;
        std::map<std::size_t, std::size_t> pivots;
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            for (;;) {
                auto lead = std::find(reduced[j].begin(), reduced[j].end(), 1);
                if (lead == reduced[j].end()) {
                    kernel.push_back(combo[j]);
                    break;
                }
                std::size_t p = static_cast<std::size_t>(lead - reduced[j].begin());
                auto it = pivots.find(p);
                if (it == pivots.end()) {
                    pivots.emplace(p, j);
                    break;
                }
                xor_into(reduced[j], reduced[it->second]);
                xor_into(combo[j], combo[it->second]);
            }
        }
        return kernel;
    };

    std::vector<HalfInt> levels;
    for (std::size_t j = 0; j < n; ++j) levels.push_back(c.alexander(j));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<Bits> all_cycles = cycles_up_to(levels.back());
    const std::size_t free_rank = all_cycles.size() - boundaries.rank();
    check_internal(free_rank == 1, "free-rank",
                   "homology after inverting Z has rank " + std::to_string(free_rank) + ", expected 1");

    for (HalfInt level : levels) {
        for (const Bits& z : cycles_up_to(level))
            if (!boundaries.contains(z)) return level;
    }
    fail_internal("free-rank", "no cycle survives in homology");
}

HalfInt tower_alexander(const ZComplex& c) {
    HalfInt a = tower_alexander_persistence(c);
    HalfInt b = tower_alexander_gradewise(c);
    check_internal(a == b, "oracle-routes-disagree",
                   "column reduction gives " + a.str() + ", gradewise linear algebra gives " + b.str());
    return a;
}

TauResult tau_oracle(const PatternProfile& prof, const Companion& k, std::int64_t n) {
    ZComplex c = build_summand(summand_case(k, n), prof, k, n);
    check_internal(c.d_squared_zero(), "d-squared", "summand fails d^2 = 0");
    HalfInt a = tower_alexander(c);
    if (!a.is_integral()) fail_internal("non-integral-tau", "tower sits at A = " + a.str());
    return TauResult{a.to_int(), "oracle", summand_tag(k, n)};
}

}  // namespace lsat
