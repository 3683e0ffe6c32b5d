#pragma once

#include <string>

#include "hallforest/hall.hpp"

namespace hallforest::expr {

using hall::Basis;
using hall::CategoryBackend;
using hall::HallElement;

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t column)
        : std::runtime_error(msg + " at column " + std::to_string(column)), column(column) {}
    std::size_t column;  // 1-based
};

/// Parses a linear combination of class literals:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := rational ['*' literal] | literal
///   rational:= integer ['/' integer]
///   literal := forest | tree | graph-key | builtin-name | '@'path
/// Forest literals use the tree grammar ('{...}', bare trees allowed);
/// graph literals are builtin names (B2, T3, X, Y, ...), canonical keys
/// (g[...]), or @file references to the JSON document. '{}' is δ_∅.
HallElement parse_element(const std::string& text, const CategoryBackend& backend,
                          Basis basis = Basis::delta);

/// Canonical text form: terms ordered by (weight, key), printed as
/// "c*key" and joined with " + " / " - "; the zero element prints "0".
/// parse_element(print_element(e)) == e.
std::string print_element(const HallElement& e);

/// {"basis":"delta"|"phi","terms":[{"key":K,"num":n,"den":d}...]}
std::string element_to_json(const HallElement& e);
HallElement element_from_json(const std::string& text, const CategoryBackend& backend);

}  // namespace hallforest::expr
