#include "tsw/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "text_reader.hpp"
#include "tsw/error.hpp"

namespace tsw {
namespace {

using detail::TextReader;

constexpr long long kMaxVertices = 1 << 22;

Instance read_instance(TextReader& in) {
  const auto& header = in.expect("tsw", 2);
  if (header.words[1] != "v1") TextReader::fail(header, "unsupported format version");
  const std::string_view variant = header.words[2];
  if (variant != "ts" && variant != "cts" && variant != "sts")
    TextReader::fail(header, "unknown variant '" + std::string(variant) + "'");

  const auto& size = in.expect("n", 3);
  if (size.words[2] != "m") TextReader::fail(size, "expected 'n <count> m <count>'");
  const long long n = TextReader::integer(size, 1);
  const long long m = TextReader::integer(size, 3);
  if (n < 0 || n > kMaxVertices) TextReader::fail(size, "bad vertex count");
  if (m < 0 || m > n * (n - 1) / 2) TextReader::fail(size, "bad edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const auto& line = in.expect("e", 2);
    edges.emplace_back(TextReader::index_in(line, 1, n, "vertex"),
                       TextReader::index_in(line, 2, n, "vertex"));
  }
  Graph graph(static_cast<int>(n), std::move(edges));

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  auto claim = [&](const TextReader::Line& line, int id) {
    if (seen[id]) TextReader::fail(line, "repeated entry " + std::to_string(id));
    seen[id] = 1;
  };

  if (variant == "ts") {
    std::vector<int> target(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
      const auto& line = in.expect("t", 2);
      int t = TextReader::index_in(line, 1, n, "token");
      claim(line, t);
      target[t] = TextReader::index_in(line, 2, n, "destination");
    }
    return Instance::token_swapping(std::move(graph), std::move(target));
  }
  if (variant == "cts") {
    std::vector<int> vcolor(static_cast<std::size_t>(n));
    std::vector<int> tcolor(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
      const auto& line = in.expect("c", 3);
      int v = TextReader::index_in(line, 1, n, "vertex");
      claim(line, v);
      vcolor[v] = TextReader::index_in(line, 2, kMaxVertices, "color");
      tcolor[v] = TextReader::index_in(line, 3, kMaxVertices, "color");
    }
    return Instance::colored(std::move(graph), std::move(vcolor), std::move(tcolor));
  }
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const auto& line = in.expect("d", -1);
    if (line.words.size() < 3) TextReader::fail(line, "'d' needs token and count");
    int t = TextReader::index_in(line, 1, n, "token");
    claim(line, t);
    long long k = TextReader::integer(line, 2);
    if (k < 1 || static_cast<std::size_t>(k) + 3 != line.words.size())
      TextReader::fail(line, "destination count does not match");
    for (long long j = 0; j < k; ++j)
      sets[t].push_back(TextReader::index_in(line, 3 + static_cast<std::size_t>(j), n, "destination"));
  }
  return Instance::subset(std::move(graph), std::move(sets));
}

SwapSequence read_solution(TextReader& in) {
  const auto& header = in.expect("sol", 1);
  const long long length = TextReader::integer(header, 1);
  if (length < 0) TextReader::fail(header, "negative length");
  SwapSequence s;
  for (long long i = 0; i < length; ++i) {
    const auto& line = in.expect("s", 2);
    long long u = TextReader::integer(line, 1);
    long long v = TextReader::integer(line, 2);
    if (u < 0 || v < 0 || u > kMaxVertices || v > kMaxVertices)
      TextReader::fail(line, "vertex out of range");
    s.swaps.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return s;
}

void expect_end(const TextReader& in) {
  if (!in.done()) TextReader::fail(in.peek(), "unexpected trailing content");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  TextReader in(text);
  Instance inst = read_instance(in);
  expect_end(in);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const Graph& g = inst.graph();
  out << "tsw v1 " << to_string(inst.variant()) << '\n';
  out << "n " << g.vertex_count() << " m " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  switch (inst.variant()) {
    case Variant::ts:
      for (int t = 0; t < inst.size(); ++t)
        out << "t " << t << ' ' << inst.destinations(t)[0] << '\n';
      break;
    case Variant::cts: {
      const Coloring& c = *inst.coloring();
      for (int v = 0; v < inst.size(); ++v)
        out << "c " << v << ' ' << c.vertex_colors[v] << ' ' << c.token_colors[v] << '\n';
      break;
    }
    case Variant::sts:
      for (int t = 0; t < inst.size(); ++t) {
        auto d = inst.destinations(t);
        out << "d " << t << ' ' << d.size();
        for (int v : d) out << ' ' << v;
        out << '\n';
      }
      break;
  }
  return out.str();
}

SwapSequence parse_solution(std::string_view text) {
  TextReader in(text);
  SwapSequence s = read_solution(in);
  expect_end(in);
  return s;
}

std::string serialize_solution(const SwapSequence& s) {
  std::ostringstream out;
  out << "sol " << s.size() << '\n';
  for (const Edge& e : s.swaps) out << "s " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Bundle parse_bundle(std::string_view text) {
  TextReader in(text);
  Bundle b{read_instance(in), std::nullopt, std::nullopt};
  if (in.next_is("budget")) {
    const auto& line = in.expect("budget", 1);
    b.budget = TextReader::integer(line, 1);
  }
  if (in.next_is("sol")) b.solution = read_solution(in);
  expect_end(in);
  return b;
}

std::string serialize_bundle(const Bundle& b) {
  std::string out = serialize_instance(b.instance);
  if (b.budget) out += "budget " + std::to_string(*b.budget) + "\n";
  if (b.solution) out += serialize_solution(*b.solution);
  return out;
}

std::string read_text(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << stdin_stream.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace tsw
