#include "lsat/halfint.hpp"

#include <charconv>

#include "lsat/error.hpp"

namespace lsat {

std::int64_t HalfInt::to_int() const {
    if (!is_integral()) fail_internal("non-integral", "expected an integer, got " + str());
    return doubled_ / 2;
}

std::string HalfInt::str() const {
    if (is_integral()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        fail_input("bad-halfint", "cannot parse '" + whole + "'");
    return v;
}

}  // namespace

HalfInt parse_halfint(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return HalfInt::from_int(parse_int(text, text));
    std::string_view sv(text);
    if (parse_int(sv.substr(slash + 1), text) != 2)
        fail_input("bad-halfint", "denominator must be 2 in '" + text + "'");
    return HalfInt::from_doubled(parse_int(sv.substr(0, slash), text));
}

}  // namespace lsat
