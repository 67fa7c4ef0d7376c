#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "ebu/graph.hpp"

namespace ebu {

/// Parse one graph6 line (the optional ">>graph6<<" header is tolerated).
/// Throws std::invalid_argument on malformed input: bad length prefix,
/// non-printable bytes, or trailing garbage.
Graph parse_graph6(std::string_view bytes);

/// Standard graph6 encoding: N(n) followed by the upper-triangle bit vector
/// in column order, zero-padded to a multiple of 6 bits. Bit-exact.
std::string write_graph6(const Graph& g);

/// Next graph6 line from a stream, skipping blank lines and a leading
/// ">>graph6<<" header. Returns nullopt at end of input.
std::optional<std::string> next_graph6_line(std::istream& in);

}  // namespace ebu
