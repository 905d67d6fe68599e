#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "indeco/catalog.hpp"
#include "indeco/covers.hpp"
#include "indeco/decomposition.hpp"
#include "indeco/enumeration.hpp"
#include "indeco/poset_io.hpp"
#include "indeco/verify.hpp"

namespace {

using namespace indeco;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PosetError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int capped_max_n(int requested) {
    if (const char* env = std::getenv("INDECO_MAX_N")) {
        int cap = std::atoi(env);
        if (cap > 0 && requested > cap) return cap;
    }
    return requested;
}

void print_subset(std::ostream& out, Subset s) {
    out << "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out << ", ";
        out << e;
        first = false;
    }
    out << "}";
}

std::string identify(const Poset& ambient, Subset subset, int a, int b) {
    auto [sub, map] = ambient.induced(subset);
    auto idx = [&](int orig) {
        return int(std::lower_bound(map.begin(), map.end(), orig) - map.begin());
    };
    PinnedTriple triple{sub, idx(a), idx(b)};
    std::vector<std::string> names;
    if (triple.pins_chain()) {
        if (auto e = figure2_recognize(triple)) names.push_back(e->describe());
        if (x_recognize(triple)) names.push_back("X-member");
    } else if (triple.pins_antichain()) {
        if (fence_recognize(triple))
            names.push_back("fence len=" + std::to_string(sub.size()));
        if (auto e = v_cover_recognize(triple)) names.push_back(e->describe());
    }
    if (names.empty()) return "unrecognized";
    std::string out = names[0];
    for (size_t i = 1; i < names.size(); ++i) out += " / " + names[i];
    return out;
}

int cmd_check(const std::string& path) {
    PosetFile f = parse_poset_file(read_file(path));
    DecompositionVerdict v = decomposition_verdict(f.poset);
    std::cout << verdict_kind_name(v.kind) << "\n";
    switch (v.kind) {
        case VerdictKind::indecomposable:
            break;
        case VerdictKind::disconnected:
            std::cout << "component: ";
            print_subset(std::cout, v.witness);
            std::cout << "\n";
            break;
        case VerdictKind::series_decomposable:
            std::cout << "lower: ";
            print_subset(std::cout, v.witness);
            std::cout << "\nupper: ";
            print_subset(std::cout, v.witness2);
            std::cout << "\n";
            break;
        case VerdictKind::has_nontrivial_autonomous:
            std::cout << "autonomous: ";
            print_subset(std::cout, v.witness);
            std::cout << "\n";
            break;
    }
    return 0;
}

int cmd_covers(const std::string& path) {
    PosetFile f = parse_poset_file(read_file(path));
    if (!f.pin_a || !f.pin_b) throw PosetError("covers requires both pins");
    Subset seed = (Subset{1} << *f.pin_a) | (Subset{1} << *f.pin_b);
    CoverResult res = upper_covers(f.poset, seed);
    std::cout << "upper covers: " << res.covers.size() << "\n";
    for (Subset c : res.covers) {
        std::cout << "  ";
        print_subset(std::cout, c);
        std::cout << " size " << subset_size(c) << " : "
                  << identify(f.poset, c, *f.pin_a, *f.pin_b) << "\n";
    }
    std::cout << "smallest supersets: " << res.smallest.size() << "\n";
    for (Subset c : res.smallest) {
        std::cout << "  ";
        print_subset(std::cout, c);
        std::cout << " size " << subset_size(c) << " : "
                  << identify(f.poset, c, *f.pin_a, *f.pin_b) << "\n";
    }
    return 0;
}

int cmd_recognize(const std::string& path, const std::string& family) {
    PosetFile f = parse_poset_file(read_file(path));
    if (!f.pin_a || !f.pin_b) throw PosetError("recognize requires both pins");
    PinnedTriple t{f.poset, *f.pin_a, *f.pin_b};
    if (family == "x") {
        std::vector<XEnd> peel;
        if (x_recognize(t, &peel)) {
            std::cout << "X-member, peel:";
            for (XEnd e : peel) std::cout << (e == XEnd::bottom ? " bottom" : " top");
            std::cout << "\n";
            return 0;
        }
    } else if (family == "v-cover") {
        if (auto e = v_cover_recognize(t)) {
            std::cout << e->describe() << " l=" << e->l_elem << " d=" << e->d_elem
                      << " h=" << e->h_elem << "\n";
            return 0;
        }
    } else if (family == "figure2") {
        if (auto e = figure2_recognize(t)) {
            std::cout << e->describe() << "\n";
            return 0;
        }
    } else if (family == "fence") {
        if (fence_recognize(t)) {
            std::cout << "fence len=" << f.poset.size() << "\n";
            return 0;
        }
    } else {
        throw PosetError("unknown family '" + family + "'");
    }
    std::cout << "not recognized\n";
    return 0;
}

int cmd_enumerate(int n, bool indecomposable_only) {
    n = capped_max_n(n);
    for (const Poset& p : all_posets(n)) {
        if (indecomposable_only && !is_indecomposable(p)) continue;
        std::cout << serialize_poset(p) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& claim, int max_n, const std::string& format, int jobs) {
    max_n = capped_max_n(max_n);
    std::ostringstream out;
    bool any_violation = false;
    auto emit = [&](const VerificationReport& rep) {
        any_violation = any_violation || !rep.passed();
        out << (format == "json" ? report_to_json(rep) : report_to_text(rep));
    };
    if (claim == "all") {
        for (const ClaimSpec& c : known_claims()) emit(run_claim(c.name, max_n, jobs));
    } else {
        emit(run_claim(claim, max_n, jobs));
    }
    std::cout << out.str();
    return any_violation ? 1 : 0;
}

int cmd_catalog() {
    std::cout << "# Catalog of characterized pinned triples\n";
    for (const CatalogEntry& e : figure2_all()) {
        std::cout << "\n## " << e.describe() << "\n";
        std::cout << serialize_poset(e.triple.poset, e.triple.a, e.triple.b);
    }
    for (const CatalogEntry& e : x_generate(7)) {
        std::cout << "\n## X-member size " << e.triple.poset.size();
        for (XEnd x : e.peel) std::cout << (x == XEnd::bottom ? " bottom" : " top");
        std::cout << "\n" << serialize_poset(e.triple.poset, e.triple.a, e.triple.b);
    }
    for (int fl = 1; fl <= 4; ++fl) {
        const CatalogEntry e = v_cover_make(fl);
        std::cout << "\n## " << e.describe() << " (l=" << e.l_elem << " d=" << e.d_elem
                  << " h=" << e.h_elem << ")\n"
                  << serialize_poset(e.triple.poset, e.triple.a, e.triple.b);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"indecomposable-subset toolkit"};
    app.require_subcommand(1);

    std::string path, family, claim, format = "text";
    int n = 0, max_n = 0, jobs = 1;
    bool indec_only = false;

    auto* check = app.add_subcommand("check", "decomposition verdict for a poset file");
    check->add_option("file", path)->required();

    auto* covers = app.add_subcommand("covers", "upper covers and smallest supersets of the pins");
    covers->add_option("file", path)->required();

    auto* recognize = app.add_subcommand("recognize", "test membership in a catalog family");
    recognize->add_option("file", path)->required();
    recognize->add_option("--family", family, "x|v-cover|figure2|fence")->required();

    auto* enumerate = app.add_subcommand("enumerate", "stream all posets up to isomorphism");
    enumerate->add_option("--n", n)->required();
    enumerate->add_flag("--indecomposable", indec_only);

    auto* verify = app.add_subcommand("verify", "exhaustively check a claim");
    verify->add_option("--claim", claim, "2chfinal|2aclem|corollary|st-growth|rigidity|all")
        ->required();
    verify->add_option("--max-n", max_n)->default_val(7);
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* catalog = app.add_subcommand("catalog", "dump the catalog as relation lists");

    try {
        app.parse(argc, argv);
        if (check->parsed()) return cmd_check(path);
        if (covers->parsed()) return cmd_covers(path);
        if (recognize->parsed()) return cmd_recognize(path, family);
        if (enumerate->parsed()) return cmd_enumerate(n, indec_only);
        if (verify->parsed()) return cmd_verify(claim, max_n, format, jobs);
        if (catalog->parsed()) return cmd_catalog();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
