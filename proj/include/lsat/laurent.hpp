#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lsat/halfint.hpp"

namespace lsat {

using BigInt = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in one variable with exponents in (1/2)Z.
class LaurentPoly1 {
public:
    using Terms = std::map<HalfInt, BigInt>;

    LaurentPoly1() = default;
    explicit LaurentPoly1(Terms terms);  // zero coefficients are dropped

    static LaurentPoly1 monomial(HalfInt e, BigInt c = 1);
    static LaurentPoly1 one() { return monomial(HalfInt{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(HalfInt e) const;
    HalfInt min_exponent() const;  // requires nonzero
    HalfInt max_exponent() const;
    BigInt value_at_one() const;

    LaurentPoly1 operator-() const;
    LaurentPoly1 shifted(HalfInt a) const;
    bool is_symmetric() const;  // p(x^-1) = p(x)

    friend LaurentPoly1 operator+(const LaurentPoly1& p, const LaurentPoly1& q);
    friend LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q);
    friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

    std::string str(const char* var = "x") const;

private:
    Terms terms_;
};

using Exp2 = std::pair<HalfInt, HalfInt>;

// Sparse Laurent polynomial in two variables; all exponent pairs share one
// coset of Z^2 in ((1/2)Z)^2.
class LaurentPoly2 {
public:
    using Terms = std::map<Exp2, BigInt>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(Terms terms);  // throws "coset-mismatch"

    static LaurentPoly2 monomial(HalfInt a, HalfInt b, BigInt c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(HalfInt a, HalfInt b) const;
    // Coset parities (a mod Z, b mod Z); empty for the zero polynomial.
    std::optional<std::pair<int, int>> coset() const;

    HalfInt max_exponent1() const;  // requires nonzero
    HalfInt min_exponent1() const;
    HalfInt max_exponent2() const;
    HalfInt min_exponent2() const;

    LaurentPoly2 operator-() const;
    friend LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q);
    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

    LaurentPoly2 shifted(HalfInt a, HalfInt b) const;
    // Substitutes x2 -> x2^-1.
    LaurentPoly2 inverted_second() const;
    // p(x1^-1, x2^-1) equals sign * p(x1, x2).
    bool has_inversion_symmetry(int sign) const;

    std::string str() const;

private:
    Terms terms_;
};

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 shift(const LaurentPoly2& p, HalfInt a, HalfInt b);

// Result of recentering a polynomial at the midpoint of its Newton polytope:
// poly = sign * x1^shift1 * x2^shift2 * input.
struct Symmetrized {
    LaurentPoly2 poly;
    int sign = 1;
    HalfInt shift1;
    HalfInt shift2;
};

// Recentres p so that its support is symmetric about the origin. The overall
// sign is left at +1; inputs whose coefficients are neither symmetric nor
// antisymmetric under inversion raise "not-alexander-symmetric".
Symmetrized symmetrize(const LaurentPoly2& p);

// Coefficients of delta / (1 - x^-1) expanded in x^-1. The returned polynomial
// holds chi(s) for s >= depth; chi(s) = 1 for every s < depth is guaranteed.
LaurentPoly1 knot_chi_expansion(const LaurentPoly1& delta, HalfInt depth);

// Finite-tail view of a knot's chi(HFL^-) sequence: chi(s) = 1 below the
// bottom exponent, 0 above the top.
class KnotChi {
public:
    explicit KnotChi(const LaurentPoly1& delta);

    BigInt chi(HalfInt s) const;
    // Sum of chi(s') over s' >= a with s' - a integral.
    BigInt tail_sum(HalfInt a) const;
    // H_K(s) = tail_sum(s + 1).
    BigInt h(HalfInt s) const { return tail_sum(s + 1); }
    bool is_unknot() const { return unknot_; }
    HalfInt bottom() const { return bottom_; }
    HalfInt top() const { return top_; }

private:
    LaurentPoly1 chi_;  // chi on [bottom_, top_]
    HalfInt bottom_;
    HalfInt top_;
    bool unknot_ = false;
};

}  // namespace lsat
