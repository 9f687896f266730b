#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace embedcheck {

struct Letter {
    std::size_t gen = 0;
    std::int64_t exp = 1;
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in a free group, stored as syllables g^e.
class Word {
public:
    Word() = default;
    explicit Word(std::span<const Letter> letters)
    {
        for (const auto& l : letters)
            push(l);
    }
    static Word generator(std::size_t g, std::int64_t e = 1)
    {
        Word w;
        w.push({g, e});
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t syllables() const { return letters_.size(); }
    /// Length as a word in the generators and their inverses.
    std::int64_t length() const;
    std::size_t max_generator() const;

    /// Append g^e, cancelling against the tail.
    void push(Letter l);

    Word inverse() const;
    Word power(std::int64_t n) const;
    friend Word operator*(const Word& u, const Word& v);
    Word& operator*=(const Word& v) { return *this = *this * v; }
    friend bool operator==(const Word&, const Word&) = default;

    std::int64_t exponent_sum(std::size_t g) const;
    std::vector<std::int64_t> exponent_sums(std::size_t ngens) const;

    /// e.g. "x^2*t*y^-1"; the identity prints as "1".
    std::string to_string(std::span<const std::string> names) const;

private:
    std::vector<Letter> letters_;
};

Word free_multiply(const Word& u, const Word& v);
/// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

} // namespace embedcheck
