#pragma once

#include <stdexcept>
#include <string>

#include "rrg/graph.hpp"

namespace rrg {

/// Parse failure for the text codecs, with a coarse reason so callers can
/// tell malformed headers, bad bytes and trailing garbage apart.
class ParseError : public std::runtime_error {
public:
    enum class Kind { BadHeader, BadLength, BadByte, TrailingGarbage, BadJson };

    ParseError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// graph6 / digraph6 (the standard 6-bit encodings; an optional
// ">>graph6<<" / ">>digraph6<<" prefix is accepted when parsing).
std::string emit_g6(const Graph& g);
Graph parse_g6(const std::string& text);

std::string emit_d6(const Digraph& d);
Digraph parse_d6(const std::string& text);

// JSON relational-system format:
//   {"n": int, "colours": [string...], "arcs": {"<colour>": [[u,v],...]}}
// Arc lists are emitted lexicographically sorted, object keys sorted.
std::string emit_system(const RelSystem& s);
RelSystem parse_system(const std::string& text);

} // namespace rrg
