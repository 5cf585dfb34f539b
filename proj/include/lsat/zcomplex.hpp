#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsat/halfint.hpp"
#include "lsat/hfunction.hpp"
#include "lsat/invariants.hpp"
#include "lsat/json_io.hpp"
#include "lsat/patterns.hpp"

namespace lsat {

struct ZGenerator {
    std::string label;
    std::int64_t gr_w = 0;
    std::int64_t gr_z = 0;
    // A = (gr_w - gr_z) / 2.
    HalfInt alexander() const { return HalfInt::from_doubled(gr_w - gr_z); }
};

// d(source) contains Z^power * target.
struct ZArrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::int64_t power = 0;
};

// Free bigraded chain complex over F2[Z] with (gr_w, gr_z)(Z) = (0, -2).
class ZComplex {
public:
    std::size_t add_generator(std::string label, std::int64_t gr_w, std::int64_t gr_z);
    // Throws unless the arrow is homogeneous of degree (-1, -1).
    void add_arrow(std::size_t source, std::size_t target, std::int64_t power);

    const std::vector<ZGenerator>& generators() const { return gens_; }
    const std::vector<ZArrow>& arrows() const { return arrows_; }
    std::size_t size() const { return gens_.size(); }
    HalfInt alexander(std::size_t i) const { return gens_.at(i).alexander(); }
    std::optional<std::size_t> find(const std::string& label) const;

    // d o d = 0 over F2[Z].
    bool d_squared_zero() const;

private:
    std::vector<ZGenerator> gens_;
    std::vector<ZArrow> arrows_;
};

Json to_json(const ZComplex& c);

// The staircase C_t read off one column of an H-function.
struct Staircase {
    struct Generator {
        std::int64_t gr_w = 0;
        std::int64_t gr_z = 0;
        std::optional<HalfInt> r;  // set on even generators
    };
    HalfInt t;
    std::vector<Generator> gens;  // x_0, x_1, ..., x_{2m}
    std::vector<std::int64_t> alpha;  // d x_{2i+1} = W^alpha_i x_{2i} + Z^beta_i x_{2i+2}
    std::vector<std::int64_t> beta;
};

Staircase staircase_from_column(const HEvaluator& h, HalfInt t);

enum class SummandCase { Eps1, Eps0Pos, Eps0Neg, EpsMinus1 };
std::string to_string(SummandCase c);
SummandCase summand_case(const Companion& k, std::int64_t n);

// The free direct summand of the satellite complex that carries the tower.
ZComplex build_summand(SummandCase which, const PatternProfile& prof, const Companion& k, std::int64_t n);

// Tower grading by persistence-style column reduction over the A-filtration.
HalfInt tower_alexander_persistence(const ZComplex& c);
// Tower grading by gradewise F2 linear algebra: the least A whose cycles
// are not all boundaries.
HalfInt tower_alexander_gradewise(const ZComplex& c);
// Runs both and requires agreement.
HalfInt tower_alexander(const ZComplex& c);

TauResult tau_oracle(const PatternProfile& prof, const Companion& k, std::int64_t n);

}  // namespace lsat
