#pragma once

#include <string>
#include <string_view>

#include "copwin/graph.hpp"

namespace copwin {

// graph6 codec for 1 <= n <= 62 (single length byte). Byte layout:
// n+63, then the upper triangle in column-major order a(0,1), a(0,2),
// a(1,2), a(0,3), ..., packed big-endian six bits per byte, zero padded,
// each payload byte offset by 63. The optional ">>graph6<<" header is
// accepted on decode and never produced on encode.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

} // namespace copwin
