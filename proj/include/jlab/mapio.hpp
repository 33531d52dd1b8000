#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "jlab/bipoly.hpp"
#include "jlab/tagpoly.hpp"
#include "jlab/unipoly.hpp"

namespace jlab {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column),
          message(message) {}
    int line;
    int column;
    std::string message;
};

/// Parses a polynomial expression in x, y over Q(i).
/// Grammar: integer and p/q rational literals, the imaginary unit `i`,
/// variables `x` and `y`, operators + - * ^ and parentheses; `*` is
/// mandatory between factors.
BiPoly parse_poly(const std::string& text);

/// Contents of a map file: two assignments `f = ...`, `g = ...` plus an
/// optional `name = ...`; `#` starts a comment.
struct MapFile {
    PolyMap map;
    std::string name;
};

MapFile parse_map(const std::string& text);
MapFile load_map_file(const std::string& path);

/// Canonical text form: graded lexicographic order, x major, highest first.
/// parse_poly(render(p)) == p for every BiPoly.
std::string render(const BiPoly& p);

/// Tag polynomials print with U0, U1, ... (same conventions otherwise).
std::string render(const TagPoly& p);

/// Univariate polynomials print in the given variable name.
std::string render(const UniPoly& p, const std::string& var);

std::string render_coeff(const GaussRat& c);

}  // namespace jlab
