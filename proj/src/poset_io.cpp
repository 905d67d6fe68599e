#include "indeco/poset_io.hpp"

#include <sstream>
#include <vector>

namespace indeco {

PosetFile parse_poset_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::vector<std::pair<int, int>> rels;
    std::optional<int> pin_a, pin_b;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "poset") {
            if (n) throw ParseError(lineno, "duplicate poset declaration");
            int v;
            if (!(ls >> v) || v < 1) throw ParseError(lineno, "poset needs a positive count");
            n = v;
        } else if (tok == "rel") {
            if (!n) throw ParseError(lineno, "rel before poset declaration");
            int i, j;
            if (!(ls >> i >> j)) throw ParseError(lineno, "rel needs two indices");
            if (i < 0 || i >= *n || j < 0 || j >= *n)
                throw ParseError(lineno, "rel index out of range");
            rels.emplace_back(i, j);
        } else if (tok == "pin") {
            if (!n) throw ParseError(lineno, "pin before poset declaration");
            std::string which;
            int i;
            if (!(ls >> which >> i) || (which != "a" && which != "b"))
                throw ParseError(lineno, "pin needs 'a' or 'b' and an index");
            if (i < 0 || i >= *n) throw ParseError(lineno, "pin index out of range");
            auto& slot = which == "a" ? pin_a : pin_b;
            if (slot) throw DuplicatePin("pin " + which + " declared twice");
            slot = i;
        } else {
            throw ParseError(lineno, "unknown statement '" + tok + "'");
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#') throw ParseError(lineno, "trailing tokens");
    }
    if (!n) throw ParseError(lineno, "missing poset declaration");
    return {Poset::from_relations(*n, std::span<const std::pair<int, int>>(rels)), pin_a, pin_b};
}

std::string serialize_poset(const Poset& p, std::optional<int> pin_a, std::optional<int> pin_b) {
    std::ostringstream out;
    out << "poset " << p.size() << "\n";
    for (auto [x, y] : p.hasse_covers()) out << "rel " << x << " " << y << "\n";
    if (pin_a) out << "pin a " << *pin_a << "\n";
    if (pin_b) out << "pin b " << *pin_b << "\n";
    return out.str();
}

}  // namespace indeco
