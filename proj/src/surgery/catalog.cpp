#include "embedcheck/surgery/catalog.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "embedcheck/group/parser.hpp"

namespace embedcheck {

CatalogError::CatalogError(const std::string& msg, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line)
{
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// split on commas outside brackets and parentheses; offsets are kept so that
// word errors can point at the right column
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view s)
{
    std::vector<std::pair<std::string_view, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.emplace_back(s.substr(start, i - start), start);
            start = i + 1;
        } else if (s[i] == '(' || s[i] == '[') {
            ++depth;
        } else if (s[i] == ')' || s[i] == ']') {
            --depth;
        }
    }
    return out;
}

struct Pending {
    SurgeryDescription entry;
    std::size_t line = 0;
    bool have_name = false, have_kind = false, have_gens = false, have_framing = false;
    std::vector<std::string> names;
    std::vector<Word> relators;
};

class CatalogParser {
public:
    explicit CatalogParser(std::string_view text) : text_(text) {}

    std::vector<SurgeryDescription> run()
    {
        std::size_t pos = 0, lineno = 0;
        while (pos <= text_.size()) {
            std::size_t nl = text_.find('\n', pos);
            if (nl == std::string_view::npos)
                nl = text_.size();
            ++lineno;
            line(text_.substr(pos, nl - pos), lineno);
            pos = nl + 1;
        }
        finish();
        return out_;
    }

private:
    void line(std::string_view raw, std::size_t lineno)
    {
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::string_view s = trim(raw);
        if (s.empty())
            return;
        if (s == "[entry]") {
            finish();
            cur_ = Pending{};
            cur_->line = lineno;
            return;
        }
        if (!cur_)
            throw CatalogError("expected [entry]", lineno);
        auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw CatalogError("expected 'key = value'", lineno);
        std::string key(trim(s.substr(0, eq)));
        std::string_view value = trim(s.substr(eq + 1));
        // column (0-based) of value within the raw line
        std::size_t vcol = static_cast<std::size_t>(value.data() - raw.data());
        field(key, value, lineno, vcol);
    }

    Word word(std::string_view v, std::size_t lineno, std::size_t col)
    {
        try {
            return parse_word(v, cur_->names);
        } catch (const ParseError& e) {
            throw CatalogError(e.message() + " (column " + std::to_string(col + e.column()) + ")", lineno);
        }
    }

    void need_gens(const std::string& key, std::size_t lineno)
    {
        if (!cur_->have_gens)
            throw CatalogError("'" + key + "' before 'gens'", lineno);
    }

    void field(const std::string& key, std::string_view v, std::size_t lineno, std::size_t vcol)
    {
        auto& e = cur_->entry;
        if (key == "name") {
            if (cur_->have_name)
                throw CatalogError("duplicate 'name'", lineno);
            if (v.empty())
                throw CatalogError("empty name", lineno);
            e.name = std::string(v);
            cur_->have_name = true;
        } else if (key == "kind") {
            if (v == "link")
                e.kind = EntryKind::link;
            else if (v == "direct")
                e.kind = EntryKind::direct;
            else
                throw CatalogError("kind must be 'link' or 'direct'", lineno);
            cur_->have_kind = true;
        } else if (key == "known") {
            if (v == "abelian")
                e.known = KnownStatus::embeds_abelian;
            else if (v == "none")
                e.known = KnownStatus::no_abelian_embedding;
            else if (v == "unknown")
                e.known = KnownStatus::unknown;
            else
                throw CatalogError("known must be 'abelian', 'none' or 'unknown'", lineno);
        } else if (key == "note") {
            e.note = std::string(v);
        } else if (key == "gens") {
            if (cur_->have_gens)
                throw CatalogError("duplicate 'gens'", lineno);
            try {
                cur_->names = parse_generator_list(v);
            } catch (const std::exception& ex) {
                throw CatalogError(ex.what(), lineno);
            }
            std::set<std::string> seen(cur_->names.begin(), cur_->names.end());
            if (cur_->names.empty())
                throw CatalogError("no generators", lineno);
            if (seen.size() != cur_->names.size())
                throw CatalogError("repeated generator name", lineno);
            cur_->have_gens = true;
        } else if (key == "rel") {
            need_gens(key, lineno);
            try {
                for (auto& r : parse_relation(v, cur_->names))
                    cur_->relators.push_back(r);
            } catch (const ParseError& ex) {
                throw CatalogError(ex.message() + " (column " + std::to_string(vcol + ex.column()) + ")", lineno);
            }
        } else if (key == "meridian") {
            need_gens(key, lineno);
            e.meridians.push_back(word(v, lineno, vcol));
        } else if (key == "longitude") {
            need_gens(key, lineno);
            e.longitudes.push_back(word(v, lineno, vcol));
        } else if (key == "basis") {
            need_gens(key, lineno);
            for (auto [part, off] : split_top_level(v)) {
                auto t = trim(part);
                std::size_t lead = static_cast<std::size_t>(t.data() - part.data());
                e.basis.push_back(word(t, lineno, vcol + off + lead));
            }
        } else if (key == "framing") {
            if (cur_->have_framing)
                throw CatalogError("duplicate 'framing'", lineno);
            cur_->have_framing = true;
            if (!v.empty())
                for (auto [part, off] : split_top_level(v)) {
                    auto t = trim(part);
                    std::int64_t x = 0;
                    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
                    if (ec != std::errc{} || p != t.data() + t.size() || t.empty()) {
                        if (t.find('/') != std::string_view::npos)
                            throw CatalogError("rational framing '" + std::string(t) + "' not supported", lineno);
                        throw CatalogError("bad framing '" + std::string(t) + "'", lineno);
                    }
                    e.framings.push_back(x);
                }
        } else {
            throw CatalogError("unknown key '" + key + "'", lineno);
        }
    }

    void finish()
    {
        if (!cur_)
            return;
        auto& p = *cur_;
        if (!p.have_name)
            throw CatalogError("entry without name", p.line);
        if (!p.have_kind)
            throw CatalogError("entry '" + p.entry.name + "' without kind", p.line);
        if (!p.have_gens)
            throw CatalogError("entry '" + p.entry.name + "' without gens", p.line);
        if (names_.count(p.entry.name))
            throw CatalogError("duplicate entry name '" + p.entry.name + "'", p.line);
        p.entry.group = GroupPresentation(p.names, p.relators);
        auto bad = validate_entry(p.entry);
        if (!bad.empty())
            throw CatalogError("entry '" + p.entry.name + "': " + bad.front(), p.line);
        names_.insert(p.entry.name);
        out_.push_back(std::move(p.entry));
        cur_.reset();
    }

    std::string_view text_;
    std::optional<Pending> cur_;
    std::set<std::string> names_;
    std::vector<SurgeryDescription> out_;
};

} // namespace

std::vector<SurgeryDescription> parse_catalog(std::string_view text) { return CatalogParser(text).run(); }

std::vector<SurgeryDescription> load_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open catalog '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

std::string serialize_catalog(const std::vector<SurgeryDescription>& entries)
{
    std::ostringstream o;
    bool first = true;
    for (const auto& e : entries) {
        if (!first)
            o << "\n";
        first = false;
        const auto& names = e.group.names();
        o << "[entry]\n";
        o << "name = " << e.name << "\n";
        o << "kind = " << to_string(e.kind) << "\n";
        o << "known = " << to_string(e.known) << "\n";
        if (!e.note.empty())
            o << "note = " << e.note << "\n";
        o << "gens = ";
        for (std::size_t i = 0; i < names.size(); ++i)
            o << (i ? ", " : "") << names[i];
        o << "\n";
        for (const auto& r : e.group.relators())
            o << "rel = " << r.to_string(names) << "\n";
        for (const auto& m : e.meridians)
            o << "meridian = " << m.to_string(names) << "\n";
        for (const auto& l : e.longitudes)
            o << "longitude = " << l.to_string(names) << "\n";
        if (e.kind == EntryKind::link) {
            o << "framing = ";
            for (std::size_t i = 0; i < e.framings.size(); ++i)
                o << (i ? ", " : "") << e.framings[i];
            o << "\n";
        }
        if (!e.basis.empty()) {
            o << "basis = ";
            for (std::size_t i = 0; i < e.basis.size(); ++i)
                o << (i ? ", " : "") << e.basis[i].to_string(names);
            o << "\n";
        }
    }
    return o.str();
}

const SurgeryDescription* find_entry(const std::vector<SurgeryDescription>& entries, std::string_view name)
{
    for (const auto& e : entries)
        if (e.name == name)
            return &e;
    return nullptr;
}

} // namespace embedcheck
