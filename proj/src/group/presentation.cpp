#include "embedcheck/group/presentation.hpp"

#include <set>

namespace embedcheck {

GroupPresentation::GroupPresentation(std::vector<std::string> names, std::vector<Word> relators)
    : names_(std::move(names)), relators_(std::move(relators))
{
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("empty generator name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate generator name '" + n + "'");
    }
    for (std::size_t i = 0; i < relators_.size(); ++i)
        if (!relators_[i].empty() && relators_[i].max_generator() >= names_.size())
            throw std::invalid_argument("relator " + std::to_string(i + 1) + " uses an unknown generator");
}

std::optional<std::size_t> GroupPresentation::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

GroupPresentation GroupPresentation::with_relators(const std::vector<Word>& extra) const
{
    auto rels = relators_;
    rels.insert(rels.end(), extra.begin(), extra.end());
    return GroupPresentation(names_, std::move(rels));
}

std::vector<std::vector<std::int64_t>> GroupPresentation::exponent_sum_rows() const
{
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : relators_)
        rows.push_back(r.exponent_sums(names_.size()));
    return rows;
}

std::string GroupPresentation::to_text() const
{
    std::string s = "gens: ";
    for (std::size_t i = 0; i < names_.size(); ++i)
        s += (i ? ", " : "") + names_[i];
    s += '\n';
    for (const auto& r : relators_)
        s += "rel: " + r.to_string(names_) + '\n';
    return s;
}

} // namespace embedcheck
