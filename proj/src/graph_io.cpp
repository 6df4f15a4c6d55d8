#include "dbr/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace dbr {

namespace {

constexpr int kBias = 63;
constexpr char kBig = 126;  // '~'

void append_bits(std::string& out, uint64_t value, int bits) {
  for (int shift = bits - 6; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((value >> shift) & 0x3f) + kBias));
}

int chunk_at(std::string_view s, size_t i) {
  if (i >= s.size())
    throw Error(ErrorCode::ParseError, "graph6 record truncated");
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < kBias || c > kBias + kBias)
    throw Error(ErrorCode::ParseError,
                "graph6 byte out of range at position " + std::to_string(i));
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kBig);
    append_bits(out, static_cast<uint64_t>(n), 18);
  } else {
    out.push_back(kBig);
    out.push_back(kBig);
    append_bits(out, static_cast<uint64_t>(n), 36);
  }
  long long nbits = n * (n - 1) / 2;
  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  (void)nbits;
  return out;
}

Graph decode_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw Error(ErrorCode::ParseError, "empty graph6 record");

  size_t pos = 0;
  uint64_t n = 0;
  if (static_cast<unsigned char>(line[0]) != static_cast<unsigned char>(kBig)) {
    n = chunk_at(line, pos++);
  } else if (line.size() > 1 &&
             static_cast<unsigned char>(line[1]) != static_cast<unsigned char>(kBig)) {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | chunk_at(line, pos++);
  } else {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | chunk_at(line, pos++);
  }
  if (n > 5'000'000)
    throw Error(ErrorCode::ParseError, "graph6 order too large: " + std::to_string(n));

  uint64_t nbits = n * (n - 1) / 2;
  size_t expect = pos + (nbits + 5) / 6;
  if (line.size() != expect)
    throw Error(ErrorCode::ParseError,
                "graph6 record has " + std::to_string(line.size()) +
                    " bytes, expected " + std::to_string(expect));

  std::vector<Edge> edges;
  int row = 0, col = 1;
  int acc = 0, avail = 0;
  for (uint64_t b = 0; b < nbits; ++b) {
    if (avail == 0) {
      acc = chunk_at(line, pos++);
      avail = 6;
    }
    if (acc & (1 << (avail - 1))) edges.emplace_back(row, col);
    --avail;
    if (++row == col) {
      row = 0;
      ++col;
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph decode_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Edge> edges;
  long long u, v;
  int max_id = -1;
  while (in >> u) {
    if (!(in >> v))
      throw Error(ErrorCode::ParseError, "edge list has an unpaired endpoint");
    if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000)
      throw Error(ErrorCode::ParseError, "edge endpoint out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
  }
  if (!in.eof())
    throw Error(ErrorCode::ParseError, "edge list contains a non-integer token");
  return Graph(max_id + 1, std::move(edges));
}

GraphFormat format_from_extension(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::Graph6;
  return GraphFormat::EdgeList;
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  if (format == GraphFormat::Graph6) {
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return decode_graph6(line);
    throw Error(ErrorCode::ParseError, "no graph6 record in " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_edge_list(buf.str());
}

Graph read_graph_file(const std::string& path) {
  return read_graph_file(path, format_from_extension(path));
}

}  // namespace dbr
