#include "nb/rational.hpp"

#include "nb/errors.hpp"

#include <cctype>

namespace nb {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text))
            throw ParseError("invalid rational literal: '" + std::string(text) + "'");
        return Rat(Int(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    Int d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    return Rat(Int(std::string(num)), d);
}

std::string format_rational(const Rat& value) {
    Int n = rat_num(value), d = rat_den(value);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

} // namespace nb
