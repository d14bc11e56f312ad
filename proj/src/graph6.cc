// Copyright 2026 The Cyclobound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graph6: a size field, then the upper triangle of the adjacency matrix read
// column by column, packed six bits per printable character (value + 63).

#include <string>
#include <vector>

#include "cyclobound/graph.h"

namespace cyclobound {
namespace {

constexpr int kOffset = 63;
constexpr int kLongSize = 126;

int sextet(char c, std::size_t at) {
  const int v = static_cast<unsigned char>(c);
  if (v < kOffset || v > kLongSize) {
    throw Graph6Error("graph6: byte " + std::to_string(v) + " at offset " +
                      std::to_string(at) + " is outside 63..126");
  }
  return v - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("graph6: empty input");
  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text[0]) != kLongSize) {
    n = sextet(text[0], 0);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated size field");
    if (static_cast<unsigned char>(text[1]) == kLongSize) {
      throw Graph6Error("graph6: order too large (limit 64)");
    }
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i], i);
    pos = 4;
  }
  if (n == 0) throw Graph6Error("graph6: graph has no vertices");
  if (n > Graph::kMaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) +
                      " exceeds limit 64");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars) {
    throw Graph6Error("graph6: payload truncated (expected " +
                      std::to_string(chars) + " bytes, got " +
                      std::to_string(text.size() - pos) + ")");
  }
  if (text.size() - pos > chars) {
    throw Graph6Error("graph6: trailing bytes after payload");
  }

  std::vector<VertexSet> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6], pos + k / 6);
      if (byte >> (5 - k % 6) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  for (; k < chars * 6; ++k) {
    const int byte = sextet(text[pos + k / 6], pos + k / 6);
    if (byte >> (5 - k % 6) & 1) throw Graph6Error("graph6: nonzero padding bits");
  }
  return Graph::from_rows(n, rows);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(kLongSize));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace cyclobound
