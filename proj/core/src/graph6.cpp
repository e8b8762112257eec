// graph6 encoding and decoding.
//
// Layout: the order n is one byte chr(n+63) for n <= 62, or chr(126)
// followed by three bytes carrying an 18-bit big-endian n for n <= 258047.
// Then the strict upper triangle is emitted column by column — bits
// (0,1), (0,2), (1,2), (0,3), ... — packed six bits per byte, most
// significant bit first, each byte offset by 63 into the printable range.

#include "spex/graph6.hpp"

#include <string>

namespace spex {
namespace {

constexpr int kOffset = 63;
constexpr int kMaxLongOrder = 258047;  // 2^18 - 1

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
  throw ParseError("graph6: " + what + " at byte " + std::to_string(offset));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kMaxLongOrder) {
    throw CapacityError("graph6 order limit is " + std::to_string(kMaxLongOrder));
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int bits = 0, value = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0) {
    value <<= (6 - bits);  // pad the final byte with zero bits
    out.push_back(static_cast<char>(value + kOffset));
  }
  return out;
}

Graph graph6_decode(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) fail("empty input", 0);

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) fail("truncated input", pos);
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kOffset || c > 126) fail("byte outside printable range", pos);
    ++pos;
    return c - kOffset;
  };

  long long n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    ++pos;
    const long long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
    if (n <= 62) fail("long order form used for small order", 0);
  } else {
    n = next();
  }
  if (n > Graph::kGeneralCapacity) {
    throw CapacityError("graph6 order " + std::to_string(n) +
                        " exceeds library capacity");
  }

  Graph g(static_cast<int>(n));
  int bits = 0, value = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        value = next();
        bits = 6;
      }
      if ((value >> 5) & 1) g.add_edge(u, v);
      value = (value << 1) & 63;
      --bits;
    }
  }
  if (bits > 0 && value != 0) fail("nonzero padding bits", pos - 1);
  if (pos != s.size()) fail("trailing bytes", pos);
  return g;
}

}  // namespace spex
