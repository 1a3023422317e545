#include <algorithm>
#include <sstream>

#include "text_reader.hpp"
#include "tsw/error.hpp"
#include "tsw/generators.hpp"

namespace tsw::gen {
namespace {

using detail::TextReader;

constexpr long long kMaxItems = 1 << 22;

void header(TextReader& in, std::string_view keyword) {
  const auto& line = in.expect(keyword, 1);
  if (line.words[1] != "v1") TextReader::fail(line, "unsupported format version");
}

void finish(const TextReader& in) {
  if (!in.done()) TextReader::fail(in.peek(), "unexpected trailing content");
}

// Reads `keyword a x b y` and returns (a, b).
std::pair<int, int> counts(TextReader& in, std::string_view keyword, std::string_view second) {
  const auto& line = in.expect(keyword, 3);
  if (line.words[2] != second)
    TextReader::fail(line, "expected '" + std::string(keyword) + " <count> " +
                               std::string(second) + " <count>'");
  return {TextReader::index_in(line, 1, kMaxItems, "count"),
          TextReader::index_in(line, 3, kMaxItems, "count")};
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  TextReader in(text);
  header(in, "digraph");
  auto [nodes, arcs] = counts(in, "nodes", "arcs");
  Digraph h{nodes, {}};
  for (int i = 0; i < arcs; ++i) {
    const auto& line = in.expect("a", 2);
    h.arcs.push_back({TextReader::index_in(line, 1, nodes, "node"),
                      TextReader::index_in(line, 2, nodes, "node")});
  }
  finish(in);
  return h;
}

std::string serialize_digraph(const Digraph& h) {
  std::ostringstream out;
  out << "digraph v1\nnodes " << h.nodes << " arcs " << h.arcs.size() << "\n";
  for (const Arc& a : h.arcs) out << "a " << a.from << " " << a.to << "\n";
  return out.str();
}

std::vector<int> parse_hamcycle(std::string_view text) {
  TextReader in(text);
  header(in, "hamcycle");
  const auto& line = in.expect("order", -1);
  std::vector<int> order;
  for (std::size_t i = 1; i < line.words.size(); ++i)
    order.push_back(TextReader::index_in(line, i, kMaxItems, "node"));
  finish(in);
  return order;
}

std::string serialize_hamcycle(const std::vector<int>& cycle) {
  std::ostringstream out;
  out << "hamcycle v1\norder";
  for (int v : cycle) out << " " << v;
  out << "\n";
  return out.str();
}

TriangleDecomposition parse_triangles(std::string_view text) {
  TextReader in(text);
  header(in, "triangles");
  TriangleDecomposition t;
  while (!in.done()) {
    const auto& line = in.expect("tri", 3);
    t.push_back({TextReader::index_in(line, 1, kMaxItems, "arc"),
                 TextReader::index_in(line, 2, kMaxItems, "arc"),
                 TextReader::index_in(line, 3, kMaxItems, "arc")});
  }
  return t;
}

std::string serialize_triangles(const TriangleDecomposition& t) {
  std::ostringstream out;
  out << "triangles v1\n";
  for (const auto& tri : t) out << "tri " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
  return out.str();
}

X3cInstance parse_x3c(std::string_view text) {
  TextReader in(text);
  header(in, "x3c");
  auto [universe, sets] = counts(in, "universe", "sets");
  X3cInstance x{universe, {}};
  for (int j = 0; j < sets; ++j) {
    const auto& line = in.expect("set", 3);
    x.sets.push_back({TextReader::index_in(line, 1, universe, "element"),
                      TextReader::index_in(line, 2, universe, "element"),
                      TextReader::index_in(line, 3, universe, "element")});
  }
  finish(in);
  return x;
}

std::string serialize_x3c(const X3cInstance& x) {
  std::ostringstream out;
  out << "x3c v1\nuniverse " << x.universe << " sets " << x.sets.size() << "\n";
  for (const auto& s : x.sets) out << "set " << s[0] << " " << s[1] << " " << s[2] << "\n";
  return out.str();
}

X3cCover parse_x3c_cover(std::string_view text) {
  TextReader in(text);
  header(in, "x3c-cover");
  X3cCover c;
  while (!in.done()) c.push_back(TextReader::index_in(in.expect("use", 1), 1, kMaxItems, "set"));
  return c;
}

std::string serialize_x3c_cover(const X3cCover& c) {
  std::ostringstream out;
  out << "x3c-cover v1\n";
  for (int j : c) out << "use " << j << "\n";
  return out.str();
}

MsiInstance parse_msi(std::string_view text) {
  TextReader in(text);
  header(in, "msi");
  auto [k, pe] = counts(in, "pattern", "edges");
  std::vector<Edge> pattern_edges;
  for (int i = 0; i < pe; ++i) {
    const auto& line = in.expect("p", 2);
    pattern_edges.emplace_back(TextReader::index_in(line, 1, k, "pattern vertex"),
                               TextReader::index_in(line, 2, k, "pattern vertex"));
  }
  auto [hn, he] = counts(in, "host", "edges");
  std::vector<int> cls(hn, -1);
  for (int i = 0; i < hn; ++i) {
    const auto& line = in.expect("class", 2);
    const int v = TextReader::index_in(line, 1, hn, "host vertex");
    if (cls[v] != -1) TextReader::fail(line, "repeated entry " + std::to_string(v));
    cls[v] = TextReader::index_in(line, 2, k, "class");
  }
  std::vector<Edge> host_edges;
  for (int i = 0; i < he; ++i) {
    const auto& line = in.expect("h", 2);
    host_edges.emplace_back(TextReader::index_in(line, 1, hn, "host vertex"),
                            TextReader::index_in(line, 2, hn, "host vertex"));
  }
  finish(in);
  return {Graph(k, std::move(pattern_edges)), Graph(hn, std::move(host_edges)), std::move(cls)};
}

std::string serialize_msi(const MsiInstance& m) {
  std::ostringstream out;
  out << "msi v1\npattern " << m.pattern.vertex_count() << " edges " << m.pattern.edge_count()
      << "\n";
  for (const Edge& e : m.pattern.edges()) out << "p " << e.u << " " << e.v << "\n";
  out << "host " << m.host.vertex_count() << " edges " << m.host.edge_count() << "\n";
  for (int v = 0; v < m.host.vertex_count(); ++v) out << "class " << v << " " << m.host_class[v] << "\n";
  for (const Edge& e : m.host.edges()) out << "h " << e.u << " " << e.v << "\n";
  return out.str();
}

MsiSolution parse_msi_solution(std::string_view text) {
  TextReader in(text);
  header(in, "msi-solution");
  std::vector<std::pair<int, int>> entries;
  while (!in.done()) {
    const auto& line = in.expect("map", 2);
    entries.emplace_back(TextReader::index_in(line, 1, kMaxItems, "pattern vertex"),
                         TextReader::index_in(line, 2, kMaxItems, "host vertex"));
  }
  MsiSolution s(entries.size(), -1);
  for (auto [i, v] : entries) {
    if (i >= static_cast<int>(s.size()) || s[i] != -1)
      throw InvalidInput("msi solution must map pattern vertices 0..k-1 exactly once");
    s[i] = v;
  }
  return s;
}

std::string serialize_msi_solution(const MsiSolution& s) {
  std::ostringstream out;
  out << "msi-solution v1\n";
  for (std::size_t i = 0; i < s.size(); ++i) out << "map " << i << " " << s[i] << "\n";
  return out.str();
}

}  // namespace tsw::gen
