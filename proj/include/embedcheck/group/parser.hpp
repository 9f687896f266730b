#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "embedcheck/group/presentation.hpp"

namespace embedcheck {

/// Syntax or name error in the presentation DSL. line/column are 1-based;
/// for single-expression parses line is 1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return msg_; }

private:
    std::string msg_;
    std::size_t line_, column_;
};

/// Parse one word. Grammar (docs/presentation_dsl.md):
///   word    := factor { ['*'] factor }
///   factor  := primary { '^' exponent }
///   primary := name | '1' | '(' word ')' | '[' word ',' word ']'
Word parse_word(std::string_view text, std::span<const std::string> names);

/// A relator line: a word, or an equation chain w0 = w1 = ... = wk giving the
/// relators w0 w1^-1, w1 w2^-1, ...
std::vector<Word> parse_relation(std::string_view text, std::span<const std::string> names);

/// Split a generator list "a, b c" into names; validates identifiers.
std::vector<std::string> parse_generator_list(std::string_view text);

/// Whole presentation file: a `gens:` line, then `rel:` lines; '#' comments.
GroupPresentation parse_presentation(std::string_view text);
GroupPresentation load_presentation(const std::string& path);

} // namespace embedcheck
