#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedcheck/group/word.hpp"

namespace embedcheck {

/// Finite presentation <names | relators>. Names are distinct and nonempty;
/// relators only mention existing generators (checked on construction).
class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(std::vector<std::string> names, std::vector<Word> relators);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Word>& relators() const { return relators_; }
    std::size_t generator_count() const { return names_.size(); }
    std::size_t relator_count() const { return relators_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    GroupPresentation with_relators(const std::vector<Word>& extra) const;

    /// Exponent-sum matrix: rows = relators, cols = generators.
    std::vector<std::vector<std::int64_t>> exponent_sum_rows() const;

    /// Presentation DSL text that parses back to this presentation.
    std::string to_text() const;

    bool operator==(const GroupPresentation&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<Word> relators_;
};

} // namespace embedcheck
