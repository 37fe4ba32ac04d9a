#pragma once

#include <string>

#include "turan/digraph.hpp"

namespace turan {

enum class TextFormat { matrix, digraph6 };

TextFormat parse_format_name(const std::string& name);

// Matrix format: first line the order n, then n lines of n characters from
// {0,1}; character j of line i is the arc i->j. Lines end with '\n', no
// trailing whitespace.
//
// digraph6 format: '&', then the order as one byte 63+n (n <= 62), then the
// n*n row-major adjacency bits packed 6 per byte big-endian, each byte
// offset by 63 and the final group zero-padded.
//
// Both parsers reject loops and malformed input; parse(serialize(d)) == d.
Digraph parse_digraph(const std::string& text, TextFormat format);
std::string serialize_digraph(const Digraph& d, TextFormat format);

// DOT export for visualization with external tools.
std::string to_dot(const Digraph& d);

}  // namespace turan
