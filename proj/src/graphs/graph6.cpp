#include <goldenflow/graph6.hpp>

#include <algorithm>

namespace gf {

namespace {

struct Reader {
  std::string_view s;
  std::size_t base;  // offset of s within the caller's line
  std::size_t pos = 0;

  int byte() {
    if (pos >= s.size()) throw ParseError("unexpected end of input", base + pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside the printable range 63..126", base + pos);
    ++pos;
    return c - 63;
  }

  long long size_field() {
    if (pos >= s.size()) throw ParseError("missing vertex count", base + pos);
    if (s[pos] != 126) return byte();
    ++pos;
    long long n = 0;
    int groups = 3;
    if (pos < s.size() && s[pos] == 126) {
      ++pos;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | byte();
    return n;
  }
};

void put_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

void put_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t j = i; j < i + 6; ++j) v = (v << 1) | (j < bits.size() && bits[j] ? 1 : 0);
    out.push_back(static_cast<char>(v + 63));
  }
}

constexpr long long kMaxVertices = 1 << 20;

std::string_view strip(std::string_view line, std::size_t& offset) {
  offset = 0;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  for (std::string_view h : {">>graph6<<", ">>sparse6<<"}) {
    if (line.substr(0, h.size()) == h) {
      line.remove_prefix(h.size());
      offset = h.size();
    }
  }
  return line;
}

}  // namespace

MultiGraph parse_graph6(std::string_view line) {
  std::size_t off = 0;
  line = strip(line, off);
  if (line.empty()) throw ParseError("empty graph6 line", off);
  Reader r{line, off};
  long long n = r.size_field();
  if (n > kMaxVertices) throw ParseError("vertex count too large", off);
  const long long nbits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - r.pos < need) throw ParseError("adjacency data truncated", off + line.size());
  if (line.size() - r.pos > need) throw ParseError("trailing bytes after adjacency data", off + r.pos + need);
  MultiGraph g(static_cast<int>(n));
  long long k = 0;
  int cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) cur = r.byte();
      if ((cur >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string write_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("graph6 requires a simple graph");
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : g.edges()) adj[a][b] = adj[b][a] = 1;
  std::string out;
  put_size(out, n);
  std::vector<bool> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(adj[i][j]);
  }
  put_bits(out, bits);
  return out;
}

MultiGraph parse_sparse6(std::string_view line) {
  std::size_t off = 0;
  line = strip(line, off);
  if (line.empty() || line[0] != ':') throw ParseError("sparse6 line must start with ':'", off);
  Reader r{line.substr(1), off + 1};
  long long n = r.size_field();
  if (n > kMaxVertices) throw ParseError("vertex count too large", off);
  int k = 0;
  while ((1LL << k) < n) ++k;
  MultiGraph g(static_cast<int>(n));
  std::vector<int> bits;
  while (r.pos < r.s.size()) {
    int v = r.byte();
    for (int s = 5; s >= 0; --s) bits.push_back((v >> s) & 1);
  }
  std::size_t i = 0;
  long long v = 0;
  while (i + 1 + k <= bits.size()) {
    int b = bits[i++];
    long long x = 0;
    for (int t = 0; t < k; ++t) x = (x << 1) | bits[i++];
    if (b) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else {
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return g;
}

std::string write_sparse6(const MultiGraph& g) {
  const int n = g.vertex_count();
  int k = 0;
  while ((1LL << k) < n) ++k;
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [](auto& a, auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::vector<bool> bits;
  auto put = [&](int b, long long x) {
    bits.push_back(b);
    for (int t = k - 1; t >= 0; --t) bits.push_back((x >> t) & 1);
  };
  long long lastv = 0;
  for (auto [u, v] : edges) {
    if (v == lastv) {
      put(0, u);
    } else if (v == lastv + 1) {
      put(1, u);
      lastv = v;
    } else {
      put(1, v);
      put(0, u);
      lastv = v;
    }
  }
  std::size_t rem = bits.size() % 6;
  if (rem) {
    std::size_t pad = 6 - rem;
    bool special = k < 6 && n == (1 << k) && lastv == n - 2 && pad >= static_cast<std::size_t>(k + 1);
    bool has_last = !edges.empty() && edges.back().second == n - 1;
    if (special && !has_last) {
      bits.push_back(false);
      --pad;
    }
    while (pad--) bits.push_back(true);
  }
  std::string out = ":";
  put_size(out, n);
  put_bits(out, bits);
  return out;
}

MultiGraph parse_graph_line(std::string_view line) {
  std::size_t off = 0;
  std::string_view body = strip(line, off);
  if (!body.empty() && body[0] == ':') return parse_sparse6(line);
  return parse_graph6(line);
}

}  // namespace gf
