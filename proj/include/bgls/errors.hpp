#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bgls {

// An integral that provably diverges (or fails a finiteness precondition).
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature budget exhausted before reaching the requested tolerance.
class ToleranceError : public std::runtime_error {
public:
    ToleranceError(const std::string& what, double partial, double err)
        : std::runtime_error(what), partial_value(partial), est_error(err) {}
    double partial_value;
    double est_error;
};

// An operation that would break the product structure of a function.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Expression / config text that does not parse. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ")"),
          line(line),
          col(col) {}
    std::size_t line;
    std::size_t col;
};

}  // namespace bgls
