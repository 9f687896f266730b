#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "embedcheck/surgery/surgery.hpp"

namespace embedcheck {

/// Syntax error or invariant violation in a catalog file. line is 1-based.
class CatalogError : public std::runtime_error {
public:
    CatalogError(const std::string& msg, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Line-oriented catalog format, see docs/catalog_format.md. Every entry is
/// validated while loading; the first violation is reported.
std::vector<SurgeryDescription> parse_catalog(std::string_view text);
std::vector<SurgeryDescription> load_catalog(const std::string& path);

/// Canonical text: parse_catalog(serialize_catalog(c)) == c.
std::string serialize_catalog(const std::vector<SurgeryDescription>& entries);

const SurgeryDescription* find_entry(const std::vector<SurgeryDescription>& entries, std::string_view name);

} // namespace embedcheck
