#pragma once

#include <stdexcept>
#include <string>

namespace indeco {

struct PosetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// from_relations: adding the given pairs would create x < x.
struct CycleError : PosetError {
    using PosetError::PosetError;
};

struct IndexError : PosetError {
    using PosetError::PosetError;
};

struct EmptySelection : PosetError {
    using PosetError::PosetError;
};

// longest_chain_between requires a < b.
struct NotAChain : PosetError {
    using PosetError::PosetError;
};

struct SizeBoundError : PosetError {
    using PosetError::PosetError;
};

struct KindMismatch : PosetError {
    using PosetError::PosetError;
};

struct UnknownName : PosetError {
    using PosetError::PosetError;
};

struct BadLength : PosetError {
    using PosetError::PosetError;
};

struct SeedNotIndecomposable : PosetError {
    using PosetError::PosetError;
};

struct NoSuperset : PosetError {
    using PosetError::PosetError;
};

struct PreconditionViolated : PosetError {
    using PosetError::PosetError;
};

// st_gap2_witness found no +2-size indecomposable intermediate.  This is a
// first-class result (it would falsify the growth theorem), not a panic.
struct WitnessNotFound : PosetError {
    using PosetError::PosetError;
};

struct ParseError : PosetError {
    int line;
    ParseError(int line_, const std::string& what_)
        : PosetError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct DuplicatePin : PosetError {
    using PosetError::PosetError;
};

}  // namespace indeco
