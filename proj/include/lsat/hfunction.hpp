#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lsat/halfint.hpp"
#include "lsat/laurent.hpp"

namespace lsat {

// Normalized Alexander data of a two-component L-space link L1 u L2.
// L1 is the meridian-like component whose coordinate is t; L2 carries r.
struct LinkAlexData {
    LaurentPoly2 delta_tilde;
    LaurentPoly1 delta1 = LaurentPoly1::one();
    LaurentPoly1 delta2 = LaurentPoly1::one();
    std::int64_t linking = 0;
    bool sign_resolved = false;

    // Throws on a support off the lattice (linking/2 + Z)^2 or on bad knot polynomials.
    void check() const;
    bool first_component_unknot() const { return delta1 == LaurentPoly1::one(); }
};

// Builds link data from an unnormalized two-variable Alexander polynomial:
// recentre, multiply by (x1 x2)^(1/2), then resolve the sign.
LinkAlexData normalize_link(const LaurentPoly2& raw_delta, std::int64_t linking,
                            const LaurentPoly1& delta1 = LaurentPoly1::one(),
                            const LaurentPoly1& delta2 = LaurentPoly1::one());

// The same link with the orientation of L2 reversed (linking number negated).
LinkAlexData reverse_second_orientation(const LinkAlexData& data);

// Read-only access to an H-function on the lattice (linking/2 + Z)^2.
class HEvaluator {
public:
    virtual ~HEvaluator() = default;
    virtual std::int64_t value(HalfInt t, HalfInt r) const = 0;
    virtual std::int64_t linking() const = 0;
    // H of component i in {1, 2}, a knot H-function on Z.
    virtual std::int64_t component(int i, HalfInt s) const = 0;
    virtual bool first_component_unknot() const = 0;
    // Outside [-B, B] in either coordinate the function is governed by
    // stabilization and symmetry.
    virtual HalfInt stable_bound() const = 0;
    // Width read off the Alexander data when that shortcut is available.
    virtual std::optional<HalfInt> width_hint() const { return std::nullopt; }

    std::int64_t operator()(HalfInt t, HalfInt r) const { return value(t, r); }
    int lattice_coset() const { return static_cast<int>(((linking() % 2) + 2) % 2); }
};

// H-function computed from Alexander data by inclusion-exclusion over sublinks.
class HFunction final : public HEvaluator {
public:
    explicit HFunction(LinkAlexData data);  // data must have a resolved sign

    std::int64_t value(HalfInt t, HalfInt r) const override;
    std::int64_t linking() const override { return data_.linking; }
    std::int64_t component(int i, HalfInt s) const override;
    bool first_component_unknot() const override { return data_.first_component_unknot(); }
    HalfInt stable_bound() const override { return bound_; }
    std::optional<HalfInt> width_hint() const override;

    const LinkAlexData& data() const { return data_; }

private:
    struct Memo;
    LinkAlexData data_;
    KnotChi chi1_;
    KnotChi chi2_;
    HalfInt bound_;
    std::shared_ptr<Memo> memo_;
};

// An evaluator with a few entries overwritten; used for fault injection.
class HOverride final : public HEvaluator {
public:
    HOverride(const HEvaluator& base, std::map<std::pair<HalfInt, HalfInt>, std::int64_t> entries);

    std::int64_t value(HalfInt t, HalfInt r) const override;
    std::int64_t linking() const override { return base_.linking(); }
    std::int64_t component(int i, HalfInt s) const override { return base_.component(i, s); }
    bool first_component_unknot() const override { return base_.first_component_unknot(); }
    HalfInt stable_bound() const override;
    std::optional<HalfInt> width_hint() const override { return base_.width_hint(); }

private:
    const HEvaluator& base_;
    std::map<std::pair<HalfInt, HalfInt>, std::int64_t> entries_;
};

// Direct evaluation of the inclusion-exclusion formula (no memo).
std::int64_t gn_h(const LinkAlexData& data, HalfInt t, HalfInt r);

// Fixes the global sign of delta_tilde so that the H-function is
// nonnegative with bounded gaps; keeps the given sign when both work.
LinkAlexData resolve_sign(LinkAlexData data);

// Largest r with H(t,r+1) = H(t,r) and H(t,r-1) = H(t,r) + 1.
HalfInt r_of_t(const HEvaluator& h, HalfInt t);

// All r satisfying the condition above, in decreasing order.
std::vector<HalfInt> column_corners(const HEvaluator& h, HalfInt t);

// Width from the top x1-power of delta_tilde (0 for delta_tilde = 0).
// Requires the first component to be an unknot.
HalfInt width(const LinkAlexData& data);

// Width from the H-function: least t0 with H(t,r) = H(t+1,r) for all t >= t0.
HalfInt width_from_h(const HEvaluator& h);

std::int64_t h_unknot(HalfInt s);
std::int64_t h_t22l(std::int64_t ell, HalfInt s1, HalfInt s2);

// Lattice points linking/2 + Z inside [lo, hi].
std::vector<HalfInt> lattice_range(std::int64_t ell, HalfInt lo, HalfInt hi);

struct RTable {
    std::map<HalfInt, HalfInt> values;
    HalfInt low_constant;   // R_t for t <= -N
    HalfInt high_constant;  // R_t for t >= N
};

RTable r_table(const HEvaluator& h, HalfInt window);

struct Violation {
    std::string property;
    HalfInt t;
    HalfInt r;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    HalfInt width;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Checks the structural properties of an L-space link H-function on
// [-window, window]^2. A zero window means width + 3.
ValidationReport validate(const HEvaluator& h, HalfInt window = HalfInt{});

}  // namespace lsat
