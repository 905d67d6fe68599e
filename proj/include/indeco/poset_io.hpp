#pragma once

#include <optional>
#include <string>

#include "indeco/poset.hpp"

namespace indeco {

struct PosetFile {
    Poset poset;
    std::optional<int> pin_a;
    std::optional<int> pin_b;
};

/// Text grammar, one statement per line:
///   # comment
///   poset <n>        (first non-comment line)
///   rel <i> <j>      (i < j; transitive closure taken on load)
///   pin a <i> / pin b <i>
/// Throws ParseError (with line number), CycleError, DuplicatePin.
PosetFile parse_poset_file(const std::string& text);

/// Hasse covers plus pins; parse(serialize(x)) reproduces x.
std::string serialize_poset(const Poset& p, std::optional<int> pin_a = std::nullopt,
                            std::optional<int> pin_b = std::nullopt);

}  // namespace indeco
