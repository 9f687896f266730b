#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "embedcheck/engine/gk.hpp"
#include "embedcheck/engine/run.hpp"
#include "embedcheck/group/parser.hpp"
#include "embedcheck/surgery/catalog.hpp"

using namespace embedcheck;

namespace {

// bad input of any kind; exit code 2
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_catalog(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t");
        if (b != std::string::npos && line.compare(b, 7, "[entry]") == 0)
            return true;
    }
    return false;
}

// catalog entry name, catalog file, or presentation file
std::vector<SurgeryDescription> resolve(const std::string& target, const std::string& catalog_path)
{
    if (!std::filesystem::exists(target)) {
        auto cat = load_catalog(catalog_path);
        if (auto* e = find_entry(cat, target))
            return {*e};
        throw InputError("'" + target + "' is neither a file nor an entry of " + catalog_path);
    }
    auto text = read_file(target);
    if (looks_like_catalog(text))
        return parse_catalog(text);
    SurgeryDescription d;
    d.name = std::filesystem::path(target).stem().string();
    d.kind = EntryKind::direct;
    d.group = parse_presentation(text);
    auto bad = validate_entry(d);
    if (!bad.empty())
        throw InputError(bad.front());
    return {d};
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty())
        out.push_back(cur);
    return out;
}

std::int64_t to_int(const std::string& s)
{
    try {
        std::size_t pos = 0;
        auto v = std::stoll(s, &pos);
        if (pos != s.size())
            throw InputError("bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw InputError("bad integer '" + s + "'");
    }
}

std::string mod_str(std::int64_t v, std::int64_t l) { return std::to_string(((v % l) + l) % l); }

int cmd_report(const std::string& target, const std::string& catalog_path, const ReportConfig& cfg,
               const std::string& format)
{
    auto entries = resolve(target, catalog_path);
    std::vector<ObstructionReport> reports;
    for (const auto& e : entries)
        reports.push_back(run_report(e, cfg));
    if (format == "text") {
        for (std::size_t i = 0; i < reports.size(); ++i)
            std::cout << (i ? "\n" : "") << to_text(reports[i]);
    } else if (reports.size() == 1) {
        std::cout << to_json(reports[0]).dump(2) << "\n";
    } else {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

int cmd_abelianize(const std::string& target, const std::string& catalog_path, const std::string& format)
{
    auto entries = resolve(target, catalog_path);
    for (const auto& e : entries) {
        auto P = surgered_group(e);
        auto A = abelianize(P);
        if (format == "json") {
            Json j;
            j["name"] = e.name;
            j["h1"] = A.to_string();
            j["free_rank"] = A.free_rank;
            j["torsion"] = Json::array();
            for (const auto& d : A.torsion)
                j["torsion"].push_back(d.get_str());
            Json imgs = Json::object();
            for (std::size_t g = 0; g < P.generator_count(); ++g) {
                Json row = Json::array();
                for (std::size_t c = 0; c < A.coordinate_count(); ++c)
                    row.push_back(A.generator_images(g, c).get_str());
                imgs[P.names()[g]] = row;
            }
            j["generator_images"] = imgs;
            std::cout << j.dump(2) << "\n";
            continue;
        }
        if (entries.size() > 1)
            std::cout << e.name << ": ";
        std::cout << "H_1 = " << A.to_string() << "\n";
        for (std::size_t g = 0; g < P.generator_count(); ++g) {
            std::cout << "  " << P.names()[g] << " -> (";
            for (std::size_t c = 0; c < A.coordinate_count(); ++c)
                std::cout << (c ? ", " : "") << A.generator_images(g, c).get_str();
            std::cout << ")\n";
        }
    }
    return 0;
}

int cmd_cover(const std::string& target, const std::string& catalog_path, std::int64_t l, const std::string& map,
              const std::string& format)
{
    auto entries = resolve(target, catalog_path);
    if (entries.size() != 1)
        throw InputError("cover needs a single entry");
    auto ctx = EntryContext::from(entries[0]);
    const auto& P = ctx.group;
    auto tokens = split_commas(map);
    Json out;
    out["name"] = ctx.name;
    out["modulus"] = l;

    if (l == 0) {
        // covector on the designated basis
        if (tokens.size() != ctx.beta())
            throw InputError("--map needs " + std::to_string(ctx.beta()) + " values on the designated basis");
        IVec v;
        for (const auto& t : tokens)
            v.push_back(to_int(t));
        if (!is_primitive(v))
            throw InputError("--map is not onto Z");
        auto f = ctx.values(v);
        auto q = infinite_cyclic_cover_homology(P, f, RationalField{});
        out["covector"] = v;
        out["on_generators"] = f;
        auto structure = [](const auto& m) {
            Json j;
            j["free_rank"] = m.free_rank;
            j["factors"] = Json::array();
            for (const auto& d : m.factors)
                j["factors"].push_back(d.to_string("t"));
            return j;
        };
        out["h1_Q"] = structure(q.h1);
        out["alexander_Q"] = structure(q.alexander);
        out["h1_F2"] = structure(infinite_cyclic_cover_homology(P, f, PrimeField(2)).h1);
        out["h1_F3"] = structure(infinite_cyclic_cover_homology(P, f, PrimeField(3)).h1);
    } else {
        if (l < 2)
            throw InputError("--mod must be 0 or at least 2");
        // full list of generator values, or name=value for some generators
        std::vector<std::optional<std::int64_t>> want(P.generator_count());
        bool named = !tokens.empty() && tokens[0].find('=') != std::string::npos;
        if (named) {
            for (const auto& t : tokens) {
                auto eq = t.find('=');
                if (eq == std::string::npos)
                    throw InputError("mix of plain and name=value in --map");
                auto idx = P.index_of(t.substr(0, eq));
                if (!idx)
                    throw InputError("unknown generator '" + t.substr(0, eq) + "'");
                want[*idx] = to_int(t.substr(eq + 1));
            }
        } else {
            if (tokens.size() != P.generator_count())
                throw InputError("--map needs " + std::to_string(P.generator_count()) +
                                 " values (one per generator) or name=value pairs");
            for (std::size_t i = 0; i < tokens.size(); ++i)
                want[i] = to_int(tokens[i]);
        }
        std::vector<CyclicMap> hits;
        for (const auto& f : epimorphisms_to_cyclic(ctx.h1, l)) {
            bool ok = true;
            for (std::size_t i = 0; i < want.size() && ok; ++i)
                ok = !want[i] || mod_str(*want[i], l) == mod_str(f.on_generators[i], l);
            if (ok)
                hits.push_back(f);
        }
        if (hits.empty())
            throw InputError("no epimorphism onto Z/" + std::to_string(l) + " matches --map");
        if (hits.size() > 1)
            throw InputError(std::to_string(hits.size()) + " epimorphisms match --map; give more values");
        const auto& f = hits[0];
        auto C = rs_cover(P, f);
        auto ch = cover_h1(C);
        out["on_generators"] = f.on_generators;
        out["cover_generators"] = C.group.generator_count();
        out["cover_relators"] = C.group.relator_count();
        out["h1"] = ch.h1.to_string();
        Json deck = Json::array();
        for (std::size_t i = 0; i < ch.deck_action.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < ch.deck_action.cols(); ++j)
                row.push_back(ch.deck_action(i, j).get_str());
            deck.push_back(row);
        }
        out["deck_action"] = deck;
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : out.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return 0;
}

int cmd_gk(std::int64_t k, std::int64_t n, const std::string& format)
{
    CriterionRecord r;
    try {
        r = verify_gk_complex(k, n);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (format == "json") {
        std::cout << to_json(r).dump(2) << "\n";
    } else {
        std::cout << "C(" << k << ", " << n << "): " << to_string(r.verdict) << "\n";
        for (const auto& [key, v] : r.invariants.items())
            std::cout << "  " << key << ": " << v.dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"embedcheck: obstructions to abelian embeddings of 3-manifolds in S^4"};
    app.require_subcommand(1);
    std::string catalog_path = EMBEDCHECK_DEFAULT_CATALOG;
    std::string format = "json";
    app.add_option("--catalog", catalog_path, "catalog file used to resolve entry names");

    ReportConfig cfg;
    std::string target;
    auto* rep = app.add_subcommand("report", "run the applicable battery");
    rep->add_option("target", target, "entry name, catalog file or presentation file")->required();
    rep->add_option("--bound", cfg.basis_bound, "basis entry bound")->check(CLI::Range(1, 20));
    rep->add_option("--primes", cfg.prime_bound, "prime bound for the beta = 1 battery")->check(CLI::Range(2, 100000));
    rep->add_option("--split-bound", cfg.split_bound, "entry bound for beta = 4, 6 summands")->check(CLI::Range(1, 3));
    rep->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    rep->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    rep->add_option("--catalog", catalog_path, "catalog file");

    auto* ab = app.add_subcommand("abelianize", "H_1 and the images of the generators");
    ab->add_option("target", target, "presentation file, catalog file or entry name")->required();
    std::string text_format = "text";
    ab->add_option("--format", text_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    ab->add_option("--catalog", catalog_path, "catalog file");

    std::int64_t modulus = 0;
    std::string map;
    auto* cov = app.add_subcommand("cover", "homology of a cyclic cover");
    cov->add_option("target", target, "entry name or file")->required();
    cov->add_option("--mod", modulus, "order of the cover, 0 for the infinite cyclic cover")->required();
    cov->add_option("--map", map,
                    "values on the generators (or name=value) for --mod l; on the designated basis for --mod 0")
        ->required();
    cov->add_option("--format", text_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cov->add_option("--catalog", catalog_path, "catalog file");

    std::int64_t k = 0, n = 0;
    auto* gk = app.add_subcommand("gk", "check the chain complex C(k, n) over Z[Z + Z/k]");
    gk->add_option("--k", k, "order of the torsion")->required();
    gk->add_option("--n", n, "twisting exponent")->required();
    gk->add_option("--format", text_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*rep)
            return cmd_report(target, catalog_path, cfg, format);
        if (*ab)
            return cmd_abelianize(target, catalog_path, text_format);
        if (*cov)
            return cmd_cover(target, catalog_path, modulus, map, text_format);
        if (*gk)
            return cmd_gk(k, n, text_format);
    } catch (const InputError& e) {
        std::cerr << "embedcheck: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        std::cerr << "embedcheck: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "embedcheck: " << e.what() << "\n";
        return 2;
    } catch (const SurgeryError& e) {
        std::cerr << "embedcheck: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "embedcheck: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
