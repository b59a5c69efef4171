#include "strata/rational.hpp"

#include <cctype>

#include "strata/error.hpp"

namespace strata {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        return Error(ErrorKind::InputFormat, "bad rational '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num, true) || !is_integer_text(den, false)) throw fail();
    std::string num_text(num);
    if (num_text.front() == '+') num_text.erase(0, 1);
    const boost::multiprecision::cpp_int p(num_text);
    const boost::multiprecision::cpp_int q{std::string(den)};
    if (q == 0) throw fail();
    return Rational(p, q);
}

std::string format_rational(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace strata
