#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "normlap/digraph.hpp"

namespace normlap {

/// Parse failure for the digraph text format; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text format: first non-comment line "n m", then m lines "u v" (0-indexed).
// Lines starting with '#' are comments and may appear anywhere.
Digraph read_digraph(std::istream& in);
Digraph read_digraph_string(const std::string& text);
Digraph read_digraph_file(const std::string& path);

std::string write_digraph(const Digraph& g, const std::string& header_comment = "");

}  // namespace normlap
