#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace lsat {

// An element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
    static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integral() const { return doubled_ % 2 == 0; }
    // Parity class of the value modulo Z: 0 for integers, 1 for half-odd values.
    constexpr int coset() const { return doubled_ % 2 == 0 ? 0 : 1; }

    // Throws if the value is not an integer.
    std::int64_t to_int() const;
    std::string str() const;  // "3", "-1/2", "5/2"

    constexpr HalfInt operator-() const { return HalfInt(-doubled_); }
    constexpr HalfInt& operator+=(HalfInt o) { doubled_ += o.doubled_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { doubled_ -= o.doubled_; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr HalfInt operator+(HalfInt a, std::int64_t b) { return a + from_int(b); }
    friend constexpr HalfInt operator-(HalfInt a, std::int64_t b) { return a - from_int(b); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt(k * a.doubled_); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr bool operator==(HalfInt, HalfInt) = default;

private:
    constexpr explicit HalfInt(std::int64_t d) : doubled_(d) {}
    std::int64_t doubled_ = 0;
};

// Half of an integer, e.g. half(ell) for ell/2.
constexpr HalfInt half(std::int64_t n) { return HalfInt::from_doubled(n); }

// Parses "7", "-3/2" etc.
HalfInt parse_halfint(const std::string& text);

}  // namespace lsat

template <>
struct std::hash<lsat::HalfInt> {
    std::size_t operator()(lsat::HalfInt h) const noexcept {
        return std::hash<std::int64_t>{}(h.doubled());
    }
};
