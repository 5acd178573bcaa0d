#include "powerhg/graph6.hpp"

#include <string>
#include <vector>

namespace powerhg {

namespace {

constexpr int kBias = 63;   // printable offset, '?'
constexpr int kMaxG6 = 62;  // largest order with a one-byte header

}  // namespace

Graph parse_graph6(std::string_view text) {
  // Tolerate one trailing newline so callers can pass raw lines.
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 line", 0);

  unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    throw CapacityError("multi-byte graph6 order field not supported (order > 62)");
  }
  if (head < kBias || head > kBias + kMaxG6) {
    throw ParseError("malformed graph6 header byte", 0);
  }
  int n = head - kBias;

  int bits_needed = n * (n - 1) / 2;
  std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
  if (text.size() - 1 < bytes_needed) {
    throw ParseError("truncated graph6 bit vector", text.size());
  }
  if (text.size() - 1 > bytes_needed) {
    throw ParseError("trailing garbage after graph6 bit vector", 1 + bytes_needed);
  }

  std::vector<Edge> edges;
  int bit = 0;
  int acc = 0, acc_len = 0;
  std::size_t pos = 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (acc_len == 0) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > kBias + 63) {
          throw ParseError("invalid graph6 data byte", pos);
        }
        acc = c - kBias;
        acc_len = 6;
        ++pos;
      }
      --acc_len;
      if ((acc >> acc_len) & 1) edges.emplace_back(i, j);
      ++bit;
    }
  }
  // Padding bits of the final byte must be zero.
  if (acc_len > 0 && (acc & ((1 << acc_len) - 1)) != 0) {
    throw ParseError("nonzero graph6 padding bits", pos - 1);
  }
  return Graph(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxG6) {
    throw CapacityError("graph6 writer supports order <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0, acc_len = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++acc_len == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        acc_len = 0;
      }
    }
  }
  if (acc_len > 0) {
    acc <<= (6 - acc_len);
    out.push_back(static_cast<char>(acc + kBias));
  }
  return out;
}

}  // namespace powerhg
