#pragma once

#include <stdexcept>
#include <string>

#include "psym/combinat.hpp"

namespace psym {

// Block-exponent expressions: "(3,2)^1(2,2)^2", "0" for the empty object.
// All integers are >= 1; whitespace between tokens is ignored.

struct ParseError : std::runtime_error {
    size_t position;  // 0-based offset into the input text
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Entries within a group may come unsorted; groups with equal multiplicities merge.
TypeIndex parse_type(const std::string& text);

// Strict: entry order preserved, multiplicities must be weakly increasing
// (equal multiplicities concatenate in order).
Polycomposition parse_pcom(const std::string& text);

std::string render_expr(const TypeIndex& tau);
std::string render_expr(const Polycomposition& delta);

}  // namespace psym
