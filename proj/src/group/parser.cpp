#include "embedcheck/group/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace embedcheck {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      msg_(msg), line_(line), column_(column)
{
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
public:
    WordParser(std::string_view s, std::span<const std::string> names, std::size_t line, std::size_t col0)
        : s_(s), names_(names), line_(line), col0_(col0)
    {
    }

    std::vector<Word> relation()
    {
        std::vector<Word> sides{word()};
        skip();
        while (i_ < s_.size() && s_[i_] == '=') {
            ++i_;
            sides.push_back(word());
            skip();
        }
        if (i_ != s_.size())
            fail(std::string("unexpected '") + s_[i_] + "'");
        if (sides.size() == 1)
            return sides;
        std::vector<Word> rels;
        for (std::size_t k = 0; k + 1 < sides.size(); ++k)
            rels.push_back(sides[k] * sides[k + 1].inverse());
        return rels;
    }

    Word whole()
    {
        Word w = word();
        skip();
        if (i_ != s_.size())
            fail(std::string("unexpected '") + s_[i_] + "'");
        return w;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + i_ + 1); }

    bool at_primary()
    {
        skip();
        if (i_ >= s_.size())
            return false;
        char c = s_[i_];
        return ident_start(c) || c == '(' || c == '[' || c == '1';
    }

    Word word()
    {
        if (!at_primary())
            fail(i_ < s_.size() ? std::string("unexpected '") + s_[i_] + "'" : "unexpected end of input");
        Word w = factor();
        for (;;) {
            skip();
            if (i_ < s_.size() && s_[i_] == '*') {
                ++i_;
                if (!at_primary())
                    fail("expected a factor after '*'");
                w *= factor();
            } else if (at_primary()) {
                w *= factor();
            } else {
                return w;
            }
        }
    }

    Word factor()
    {
        Word w = primary();
        for (;;) {
            skip();
            if (i_ >= s_.size() || s_[i_] != '^')
                return w;
            ++i_;
            w = w.power(exponent());
        }
    }

    std::int64_t exponent()
    {
        skip();
        bool braces = i_ < s_.size() && s_[i_] == '{';
        if (braces) {
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
        auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + i_, v);
        if (ec != std::errc() || v > 1'000'000)
            fail("exponent out of range");
        if (braces) {
            skip();
            if (i_ >= s_.size() || s_[i_] != '}')
                fail("expected '}'");
            ++i_;
        }
        return neg ? -v : v;
    }

    Word primary()
    {
        skip();
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Word w = word();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')')
                fail("expected ')'");
            ++i_;
            return w;
        }
        if (c == '[') {
            ++i_;
            Word u = word();
            skip();
            if (i_ >= s_.size() || s_[i_] != ',')
                fail("expected ',' in commutator");
            ++i_;
            Word v = word();
            skip();
            if (i_ >= s_.size() || s_[i_] != ']')
                fail("expected ']'");
            ++i_;
            return commutator(u, v);
        }
        if (c == '1') {
            ++i_;
            if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                fail("only '1' may appear as a literal");
            return {};
        }
        // Longest generator name starting here.
        std::size_t best = names_.size(), best_len = 0;
        for (std::size_t k = 0; k < names_.size(); ++k) {
            const auto& n = names_[k];
            if (n.size() > best_len && s_.substr(i_, n.size()) == n) {
                best = k;
                best_len = n.size();
            }
        }
        if (best == names_.size()) {
            std::size_t end = i_;
            while (end < s_.size() && ident_char(s_[end]))
                ++end;
            fail("unknown generator '" + std::string(s_.substr(i_, end - i_)) + "'");
        }
        i_ += best_len;
        return Word::generator(best);
    }

    std::string_view s_;
    std::span<const std::string> names_;
    std::size_t line_, col0_;
    std::size_t i_ = 0;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Word parse_word(std::string_view text, std::span<const std::string> names)
{
    return WordParser(text, names, 1, 0).whole();
}

std::vector<Word> parse_relation(std::string_view text, std::span<const std::string> names)
{
    return WordParser(text, names, 1, 0).relation();
}

std::vector<std::string> parse_generator_list(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        if (!ident_start(c))
            throw ParseError(std::string("bad character '") + c + "' in generator list", 1, i + 1);
        std::size_t start = i;
        while (i < text.size() && ident_char(text[i]))
            ++i;
        out.emplace_back(text.substr(start, i - start));
    }
    return out;
}

GroupPresentation parse_presentation(std::string_view text)
{
    std::vector<std::string> names;
    bool have_gens = false;
    std::vector<Word> rels;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::string_view body = trim(line);
        if (body.empty())
            continue;
        std::size_t colon = body.find(':');
        std::size_t indent = static_cast<std::size_t>(body.data() - line.data());
        if (colon == std::string_view::npos)
            throw ParseError("expected 'gens:' or 'rel:'", lineno, indent + 1);
        std::string_view key = trim(body.substr(0, colon));
        std::string_view rest = body.substr(colon + 1);
        std::size_t rest_col = indent + colon + 1;
        if (key == "gens") {
            if (have_gens)
                throw ParseError("duplicate 'gens:' line", lineno, indent + 1);
            try {
                names = parse_generator_list(rest);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), lineno, rest_col + e.column());
            }
            if (names.empty())
                throw ParseError("no generators", lineno, indent + 1);
            have_gens = true;
        } else if (key == "rel") {
            if (!have_gens)
                throw ParseError("'rel:' before 'gens:'", lineno, indent + 1);
            auto r = WordParser(rest, names, lineno, rest_col).relation();
            rels.insert(rels.end(), r.begin(), r.end());
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", lineno, indent + 1);
        }
    }
    if (!have_gens)
        throw ParseError("missing 'gens:' line", lineno, 1);
    try {
        return GroupPresentation(std::move(names), std::move(rels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

GroupPresentation load_presentation(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

} // namespace embedcheck
