#include "embedcheck/group/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace embedcheck {

void Word::push(Letter l)
{
    if (l.exp == 0)
        return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0)
            letters_.pop_back();
        return;
    }
    letters_.push_back(l);
}

std::int64_t Word::length() const
{
    std::int64_t n = 0;
    for (const auto& l : letters_)
        n += std::abs(l.exp);
    return n;
}

std::size_t Word::max_generator() const
{
    std::size_t m = 0;
    for (const auto& l : letters_)
        m = std::max(m, l.gen);
    return m;
}

Word Word::inverse() const
{
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::power(std::int64_t n) const
{
    Word base = n < 0 ? inverse() : *this;
    Word r;
    for (std::int64_t i = 0; i < std::abs(n); ++i)
        r = r * base;
    return r;
}

Word operator*(const Word& u, const Word& v)
{
    Word r = u;
    for (const auto& l : v.letters_)
        r.push(l);
    return r;
}

std::int64_t Word::exponent_sum(std::size_t g) const
{
    std::int64_t s = 0;
    for (const auto& l : letters_)
        if (l.gen == g)
            s += l.exp;
    return s;
}

std::vector<std::int64_t> Word::exponent_sums(std::size_t ngens) const
{
    std::vector<std::int64_t> s(ngens, 0);
    for (const auto& l : letters_)
        s.at(l.gen) += l.exp;
    return s;
}

std::string Word::to_string(std::span<const std::string> names) const
{
    if (letters_.empty())
        return "1";
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty())
            out += '*';
        if (l.gen >= names.size())
            throw std::out_of_range("Word::to_string: generator without a name");
        out += names[l.gen];
        if (l.exp != 1)
            out += '^' + std::to_string(l.exp);
    }
    return out;
}

Word free_multiply(const Word& u, const Word& v) { return u * v; }

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

} // namespace embedcheck
