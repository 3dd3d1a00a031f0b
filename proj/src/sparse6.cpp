// sparse6 codec. Edge order, vertex-skip records and the padding special case
// follow the nauty reference encoder so output is byte-identical to it.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "normcol/graph.hpp"

namespace normcol {
namespace {

constexpr char kHeader[] = ">>sparse6<<";

int bits_for(int n) {
  int k = 1;
  while ((1LL << k) < n) ++k;
  return k;
}

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

class BitReader {
 public:
  explicit BitReader(std::string_view data) : data_(data) {}

  // Reads `count` bits MSB-first; false once the data is exhausted.
  bool read(int count, long long& value) {
    value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos_ >= data_.size() * 6) return false;
      const int byte = static_cast<unsigned char>(data_[pos_ / 6]) - 63;
      const int bit = (byte >> (5 - static_cast<int>(pos_ % 6))) & 1;
      value = (value << 1) | bit;
      ++pos_;
    }
    return true;
  }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string encode_sparse6(int vertex_count, std::span<const Edge> edges) {
  const int n = vertex_count;
  const int k = bits_for(n);
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) sorted.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::uint8_t> bits;
  auto put = [&](long long x, int width) {
    for (int i = width - 1; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((x >> i) & 1));
  };
  int current = 0;
  for (const auto& [v, u] : sorted) {
    if (v == current) {
      bits.push_back(0);
      put(u, k);
    } else if (v == current + 1) {
      current = v;
      bits.push_back(1);
      put(u, k);
    } else {
      current = v;
      bits.push_back(1);
      put(v, k);
      bits.push_back(0);
      put(u, k);
    }
  }
  const auto pad = [&] { return static_cast<int>((6 - bits.size() % 6) % 6); };
  // Padding with ones must not be decodable as an extra edge ending at n-1.
  if (k < 6 && n == (1 << k) && pad() >= k && current < n - 1) bits.push_back(0);
  bits.insert(bits.end(), static_cast<std::size_t>(pad()), 1);

  std::string out(1, ':');
  append_size(out, n);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t j = 0; j < 6; ++j) value = (value << 1) | bits[i + j];
    out.push_back(static_cast<char>(value + 63));
  }
  out.push_back('\n');
  return out;
}

RawGraph decode_sparse6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && (text.front() == '\n' || text.front() == '\r' || text.front() == ' ')) text.remove_prefix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(sizeof(kHeader) - 1);
  if (!text.starts_with(':')) fail(ErrorKind::Parse, "sparse6 text must start with ':'");
  text.remove_prefix(1);
  if (text.find('\n') != std::string_view::npos) fail(ErrorKind::Parse, "sparse6 input holds more than one graph");
  for (char ch : text) {
    if (ch < 63 || ch > 126) fail(ErrorKind::Parse, "sparse6 character out of range");
  }
  if (text.empty()) fail(ErrorKind::Parse, "sparse6 text is missing the vertex count");

  long long n = 0;
  std::size_t used = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    used = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) fail(ErrorKind::Parse, "truncated sparse6 vertex count");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (text[i] - 63);
    used = 4;
  } else {
    if (text.size() < 8) fail(ErrorKind::Parse, "truncated sparse6 vertex count");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (text[i] - 63);
    used = 8;
  }
  if (n > 1'000'000) fail(ErrorKind::Parse, "sparse6 vertex count too large");

  RawGraph g;
  g.vertex_count = static_cast<int>(n);
  const int k = bits_for(g.vertex_count);
  BitReader reader(text.substr(used));
  long long v = 0;
  while (true) {
    long long b = 0, x = 0;
    if (!reader.read(1, b) || !reader.read(k, x)) break;
    if (b == 1) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else {
      g.edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(v)});
    }
  }
  return g;
}

}  // namespace normcol
