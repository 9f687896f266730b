#include "embedcheck/rings/poly_text.hpp"

#include <cctype>
#include <charconv>

namespace embedcheck {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

QPoly PolyParser::parse()
{
    skip();
    QPoly p = expr();
    skip();
    if (i_ != s_.size())
        fail(std::string("unexpected '") + s_[i_] + "'");
    return p;
}

void PolyParser::skip()
{
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
        ++i_;
}

bool PolyParser::at_atom_start()
{
    skip();
    if (i_ >= s_.size())
        return false;
    char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '(';
}

QPoly PolyParser::expr()
{
    QPoly acc(RationalField{}, names_.size());
    bool first = true;
    for (;;) {
        skip();
        bool neg = false;
        if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
            neg = s_[i_] == '-';
            ++i_;
        } else if (!first) {
            break;
        }
        QPoly t = term();
        acc += neg ? -t : t;
        first = false;
    }
    return acc;
}

QPoly PolyParser::term()
{
    QPoly acc = factor();
    for (;;) {
        skip();
        if (i_ < s_.size() && s_[i_] == '*') {
            ++i_;
            acc = acc * factor();
        } else if (at_atom_start()) {
            acc = acc * factor();
        } else {
            return acc;
        }
    }
}

QPoly PolyParser::factor()
{
    QPoly base = atom();
    skip();
    if (i_ >= s_.size() || s_[i_] != '^')
        return base;
    ++i_;
    std::int64_t e = exponent();
    if (e < 0) {
        if (base.term_count() != 1)
            fail("negative power of a non-monomial");
        auto [ex, c] = base.leading_term();
        for (auto& v : ex)
            v *= e;
        Rational inv = 1 / c;
        Rational cp = 1;
        for (std::int64_t k = 0; k < -e; ++k)
            cp *= inv;
        return QPoly::monomial(RationalField{}, ex, cp);
    }
    QPoly r = QPoly::one(RationalField{}, names_.size());
    for (std::int64_t k = 0; k < e; ++k)
        r = r * base;
    return r;
}

std::int64_t PolyParser::exponent()
{
    skip();
    bool braces = false;
    if (i_ < s_.size() && s_[i_] == '{') {
        braces = true;
        ++i_;
        skip();
    }
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
        neg = s_[i_] == '-';
        ++i_;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        ++i_;
    if (start == i_)
        fail("expected an integer exponent");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + i_, v);
    if (ec != std::errc())
        fail("exponent out of range");
    if (braces) {
        skip();
        if (i_ >= s_.size() || s_[i_] != '}')
            fail("expected '}'");
        ++i_;
    }
    return neg ? -v : v;
}

Rational PolyParser::number()
{
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        ++i_;
    Rational r(Integer(std::string(s_.substr(start, i_ - start))));
    if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        std::size_t ds = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (ds == i_)
            fail("expected a denominator");
        Integer den(std::string(s_.substr(ds, i_ - ds)));
        if (den == 0)
            fail("zero denominator");
        r /= Rational(den);
        r.canonicalize();
    }
    return r;
}

QPoly PolyParser::atom()
{
    skip();
    if (i_ >= s_.size())
        fail("unexpected end of input");
    char c = s_[i_];
    const std::size_t n = names_.size();
    if (c == '(') {
        ++i_;
        QPoly p = expr();
        skip();
        if (i_ >= s_.size() || s_[i_] != ')')
            fail("expected ')'");
        ++i_;
        return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
        return QPoly::constant(RationalField{}, n, number());
    if (ident_start(c)) {
        std::size_t end = i_;
        while (end < s_.size() && ident_char(s_[end]))
            ++end;
        std::string_view word = s_.substr(i_, end - i_);
        // Exact identifier first, then the longest variable name it starts with
        // (so "xy" reads as x*y).
        std::size_t best = n, best_len = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (word == names_[k]) {
                best = k;
                best_len = word.size();
                break;
            }
            if (word.starts_with(names_[k]) && names_[k].size() > best_len) {
                best = k;
                best_len = names_[k].size();
            }
        }
        if (best == n)
            fail("unknown variable '" + std::string(word) + "'");
        i_ += best_len;
        return QPoly::variable(RationalField{}, n, best);
    }
    fail(std::string("unexpected '") + c + "'");
}

} // namespace embedcheck
