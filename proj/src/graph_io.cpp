#include "snark/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace snark {

namespace {

constexpr std::string_view kG6Header = ">>graph6<<";
constexpr std::string_view kS6Header = ">>sparse6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view first_line(std::string_view s) {
  s = trim(s);
  const auto nl = s.find('\n');
  return trim(nl == std::string_view::npos ? s : s.substr(0, nl));
}

void check_printable(std::string_view s, std::size_t base) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside the 63..126 range", base + i);
  }
}

// Decodes N(n); returns n and advances pos.
int decode_size(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw ParseError("missing vertex count", pos);
  auto at = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size()) throw ParseError("truncated vertex count", i);
    return static_cast<std::uint64_t>(s[i] - 63);
  };
  if (s[pos] != '~') return static_cast<int>(at(pos++));
  if (pos + 1 < s.size() && s[pos + 1] == '~') {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | at(pos + 2 + i);
    pos += 8;
    if (n > 100'000'000) throw ParseError("vertex count too large", pos);
    return static_cast<int>(n);
  }
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | at(pos + 1 + i);
  pos += 4;
  return static_cast<int>(n);
}

void encode_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  } else {
    out += "~~";
    const auto v = static_cast<std::uint64_t>(n);
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((v >> sh) & 63) + 63));
  }
}

class BitReader {
 public:
  BitReader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}
  bool has(int k) const { return (s_.size() - pos_) * 6 - static_cast<std::size_t>(bit_) >= static_cast<std::size_t>(k); }
  std::uint64_t read(int k) {
    std::uint64_t x = 0;
    for (int i = 0; i < k; ++i) {
      const int v = s_[pos_] - 63;
      x = (x << 1) | static_cast<std::uint64_t>((v >> (5 - bit_)) & 1);
      if (++bit_ == 6) {
        bit_ = 0;
        ++pos_;
      }
    }
    return x;
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_;
  int bit_ = 0;
};

class BitWriter {
 public:
  void put(std::uint64_t x, int k) {
    for (int i = k - 1; i >= 0; --i) bits_.push_back(static_cast<char>((x >> i) & 1));
  }
  std::size_t size() const { return bits_.size(); }
  void flush(std::string& out, int pad_bit) {
    while (bits_.size() % 6 != 0) bits_.push_back(static_cast<char>(pad_bit));
    for (std::size_t i = 0; i < bits_.size(); i += 6) {
      int v = 0;
      for (std::size_t j = 0; j < 6; ++j) v = (v << 1) | bits_[i + j];
      out.push_back(static_cast<char>(v + 63));
    }
  }

 private:
  std::vector<char> bits_;
};

int bits_for(int n) {
  int k = 1;
  while ((1LL << k) < n) ++k;
  return k;
}

int parse_int(std::string_view tok, std::size_t line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = first_line(text);
  std::size_t base = 0;
  if (s.starts_with(kG6Header)) {
    s.remove_prefix(kG6Header.size());
    base = kG6Header.size();
  }
  check_printable(s, base);
  std::size_t pos = 0;
  const int n = decode_size(s, pos);
  const std::uint64_t need = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = static_cast<std::size_t>((need + 5) / 6);
  if (s.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " + std::to_string(bytes),
                     base + std::min(s.size(), pos + bytes));
  }
  BitReader r(s, pos);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (r.read(1)) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw MultipoleError("graph6 cannot encode loops or parallel edges");
  const int n = g.num_vertices();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.ends[0])][static_cast<std::size_t>(e.ends[1])] = 1;
  }
  std::string out;
  encode_size(out, n);
  BitWriter w;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) w.put(adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1);
  }
  w.flush(out, 0);
  return out;
}

Graph parse_sparse6(std::string_view text) {
  std::string_view s = first_line(text);
  std::size_t base = 0;
  if (s.starts_with(kS6Header)) {
    s.remove_prefix(kS6Header.size());
    base = kS6Header.size();
  }
  if (s.empty() || s.front() != ':') throw ParseError("sparse6 must start with ':'", base);
  s.remove_prefix(1);
  ++base;
  check_printable(s, base);
  std::size_t pos = 0;
  const int n = decode_size(s, pos);
  const int k = bits_for(n);
  BitReader r(s, pos);
  std::vector<std::pair<int, int>> edges;
  std::uint64_t v = 0;
  while (r.has(1 + k)) {
    const std::uint64_t b = r.read(1);
    const std::uint64_t x = r.read(k);
    if (b) ++v;
    if (x >= static_cast<std::uint64_t>(n) || v >= static_cast<std::uint64_t>(n)) break;
    if (x > v) {
      v = x;
    } else {
      edges.emplace_back(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return make_graph(n, edges);
}

std::string to_sparse6(const Graph& g) {
  const int n = g.num_vertices();
  const int k = bits_for(n);
  std::vector<std::pair<int, int>> es;  // (larger, smaller)
  for (const Edge& e : g.edges()) es.emplace_back(std::max(e.ends[0], e.ends[1]), std::min(e.ends[0], e.ends[1]));
  std::sort(es.begin(), es.end());
  BitWriter w;
  int cur = 0;
  for (const auto& [v, u] : es) {
    if (v == cur) {
      w.put(0, 1);
      w.put(static_cast<std::uint64_t>(u), k);
    } else if (v == cur + 1) {
      cur = v;
      w.put(1, 1);
      w.put(static_cast<std::uint64_t>(u), k);
    } else {
      cur = v;
      w.put(1, 1);
      w.put(static_cast<std::uint64_t>(v), k);
      w.put(0, 1);
      w.put(static_cast<std::uint64_t>(u), k);
    }
  }
  // A trailing partial group could otherwise decode as an extra edge to n-1.
  const std::size_t fill = (6 - w.size() % 6) % 6;
  if (k < 6 && n == (1 << k) && fill >= static_cast<std::size_t>(k) && cur < n - 1) w.put(0, 1);
  std::string out = ":";
  encode_size(out, n);
  w.flush(out, 1);
  return out;
}

Multipole parse_multipole(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
  }
  std::size_t i = 0;
  auto header = [&](std::string_view name) -> int {
    if (i >= lines.size()) throw ParseError("missing " + std::string(name) + " section", lineno + 1);
    const auto& [ln, toks] = lines[i];
    if (toks.size() != 2 || toks[0] != name) throw ParseError("expected '" + std::string(name) + " <count>'", ln);
    ++i;
    const int c = parse_int(toks[1], ln);
    if (c < 0) throw ParseError("negative count", ln);
    return c;
  };
  const int n = header("VERTICES");
  const int m = header("EDGES");
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    if (i >= lines.size()) throw ParseError("expected " + std::to_string(m) + " edge lines", lineno + 1);
    const auto& [ln, toks] = lines[i++];
    if (toks.size() != 2) throw ParseError("edge line needs two ends", ln);
    Edge ed;
    for (std::size_t s = 0; s < 2; ++s) {
      if (toks[s] == "-") continue;
      const int v = parse_int(toks[s], ln);
      if (v < 0 || v >= n) throw ParseError("vertex " + toks[s] + " out of range", ln);
      ed.ends[s] = v;
    }
    edges.push_back(ed);
  }
  std::vector<Connector> conns;
  if (i < lines.size()) {
    const int k = header("CONNECTORS");
    for (int c = 0; c < k; ++c) {
      if (i >= lines.size()) throw ParseError("expected " + std::to_string(k) + " connector lines", lineno + 1);
      const auto& [ln, toks] = lines[i++];
      Connector con;
      for (const std::string& t : toks) {
        const auto colon = t.find(':');
        if (colon == std::string::npos) throw ParseError("connector entry must be edge:side", ln);
        EndRef r{parse_int(std::string_view(t).substr(0, colon), ln), parse_int(std::string_view(t).substr(colon + 1), ln)};
        if (r.edge < 0 || r.edge >= m || (r.side != 0 && r.side != 1)) throw ParseError("connector entry " + t + " refers to no edge end", ln);
        if (edges[static_cast<std::size_t>(r.edge)].ends[static_cast<std::size_t>(r.side)] != kFree) {
          throw ParseError("connector entry " + t + " is not a free end", ln);
        }
        con.push_back(r);
      }
      conns.push_back(std::move(con));
    }
  }
  if (i < lines.size()) throw ParseError("trailing content", lines[i].first);
  return Multipole(n, std::move(edges), std::move(conns));
}

std::string to_multipole_text(const Multipole& m) {
  std::ostringstream out;
  out << "VERTICES " << m.num_vertices() << "\nEDGES " << m.num_edges() << "\n";
  for (const Edge& e : m.edges()) {
    for (int s = 0; s < 2; ++s) {
      if (s) out << ' ';
      if (e.ends[static_cast<std::size_t>(s)] == kFree) {
        out << '-';
      } else {
        out << e.ends[static_cast<std::size_t>(s)];
      }
    }
    out << "\n";
  }
  out << "CONNECTORS " << m.connectors().size() << "\n";
  for (const Connector& c : m.connectors()) {
    for (std::size_t j = 0; j < c.size(); ++j) out << (j ? " " : "") << c[j].edge << ':' << c[j].side;
    out << "\n";
  }
  return out.str();
}

Multipole parse_any(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.starts_with("VERTICES")) return parse_multipole(text);
  if (t.starts_with(":") || t.starts_with(kS6Header)) return parse_sparse6(text).multipole();
  return parse_graph6(text).multipole();
}

Graph parse_graph(std::string_view text) { return Graph(parse_any(text)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::uint64_t checksum(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : to_sparse6(g)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string checksum_hex(const Graph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum(g)));
  return buf;
}

}  // namespace snark
