#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "embedcheck/rings/laurent_poly.hpp"

namespace embedcheck {

class PolyParseError : public std::runtime_error {
public:
    PolyParseError(const std::string& what, std::size_t pos)
        : std::runtime_error("polynomial text, offset " + std::to_string(pos) + ": " + what), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Recursive descent over the polynomial grammar in docs/polynomial_text.md.
class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> names) : s_(text), names_(names) {}
    QPoly parse();

private:
    QPoly expr();
    QPoly term();
    QPoly factor();
    QPoly atom();
    Rational number();
    std::int64_t exponent();
    void skip();
    bool at_atom_start();
    [[noreturn]] void fail(const std::string& what) const { throw PolyParseError(what, i_); }

    std::string_view s_;
    std::span<const std::string> names_;
    std::size_t i_ = 0;
};

} // namespace embedcheck
