#include "turan/io.hpp"

#include <sstream>

namespace turan {

namespace {

constexpr int kSixBitOffset = 63;
constexpr int kDigraph6MaxOrder = 62;

Digraph parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("matrix: missing order line");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line, &used);
    if (used != line.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix: bad order line '" + line + "'");
  }
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("matrix: order out of range");
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    if (!std::getline(in, line))
      throw std::invalid_argument("matrix: missing row " + std::to_string(u));
    if (static_cast<int>(line.size()) != n)
      throw std::invalid_argument("matrix: row " + std::to_string(u) +
                                  " has wrong length");
    for (int v = 0; v < n; ++v) {
      char c = line[v];
      if (c != '0' && c != '1')
        throw std::invalid_argument("matrix: illegal character in row " +
                                    std::to_string(u));
      if (c == '1') {
        if (u == v)
          throw std::invalid_argument("matrix: loop at vertex " +
                                      std::to_string(u));
        d.set_arc(u, v);
      }
    }
  }
  while (std::getline(in, line))
    if (!line.empty())
      throw std::invalid_argument("matrix: trailing content after last row");
  return d;
}

std::string serialize_matrix(const Digraph& d) {
  std::string out = std::to_string(d.order());
  out.push_back('\n');
  for (int u = 0; u < d.order(); ++u) {
    for (int v = 0; v < d.order(); ++v)
      out.push_back(d.has_arc(u, v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Digraph parse_digraph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty() || s[0] != '&')
    throw std::invalid_argument("digraph6: missing '&' header");
  if (s.size() < 2) throw std::invalid_argument("digraph6: truncated header");
  int n = static_cast<unsigned char>(s[1]) - kSixBitOffset;
  if (n < 1 || n > kDigraph6MaxOrder)
    throw std::invalid_argument("digraph6: unsupported order byte");
  const long long bits = static_cast<long long>(n) * n;
  const long long groups = (bits + 5) / 6;
  if (static_cast<long long>(s.size()) != 2 + groups)
    throw std::invalid_argument("digraph6: wrong payload length");
  Digraph d(n);
  for (long long i = 0; i < groups * 6; ++i) {
    int byte = static_cast<unsigned char>(s[2 + i / 6]) - kSixBitOffset;
    if (byte < 0 || byte > 63)
      throw std::invalid_argument("digraph6: byte out of range");
    int bit = (byte >> (5 - i % 6)) & 1;
    if (i >= bits) {
      if (bit) throw std::invalid_argument("digraph6: nonzero padding");
      continue;
    }
    if (bit) {
      int u = static_cast<int>(i / n);
      int v = static_cast<int>(i % n);
      if (u == v)
        throw std::invalid_argument("digraph6: loop at vertex " +
                                    std::to_string(u));
      d.set_arc(u, v);
    }
  }
  return d;
}

std::string serialize_digraph6(const Digraph& d) {
  const int n = d.order();
  if (n > kDigraph6MaxOrder)
    throw std::invalid_argument(
        "digraph6: order above 62 unsupported, emit matrix format instead");
  std::string out = "&";
  out.push_back(static_cast<char>(kSixBitOffset + n));
  const long long bits = static_cast<long long>(n) * n;
  int group = 0;
  int filled = 0;
  for (long long i = 0; i < bits; ++i) {
    int u = static_cast<int>(i / n);
    int v = static_cast<int>(i % n);
    group = (group << 1) | (u != v && d.has_arc(u, v) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(kSixBitOffset + group));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>(kSixBitOffset + (group << (6 - filled))));
  return out;
}

}  // namespace

TextFormat parse_format_name(const std::string& name) {
  if (name == "matrix") return TextFormat::matrix;
  if (name == "digraph6") return TextFormat::digraph6;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Digraph parse_digraph(const std::string& text, TextFormat format) {
  switch (format) {
    case TextFormat::matrix: return parse_matrix(text);
    case TextFormat::digraph6: return parse_digraph6(text);
  }
  throw std::logic_error("parse_digraph: bad format");
}

std::string serialize_digraph(const Digraph& d, TextFormat format) {
  switch (format) {
    case TextFormat::matrix: return serialize_matrix(d);
    case TextFormat::digraph6: return serialize_digraph6(d);
  }
  throw std::logic_error("serialize_digraph: bad format");
}

std::string to_dot(const Digraph& d) {
  std::string out = "digraph G {\n";
  for (int v = 0; v < d.order(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (int u = 0; u < d.order(); ++u)
    for (int v = 0; v < d.order(); ++v)
      if (d.has_arc(u, v))
        out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace turan
