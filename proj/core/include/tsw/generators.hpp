#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsw/colored.hpp"
#include "tsw/configuration.hpp"
#include "tsw/instance.hpp"
#include "tsw/swaps.hpp"

namespace tsw::gen {

// A labeled group of certificate swaps, by index into the certificate.
struct Segment {
  std::string label;
  std::vector<std::size_t> swaps;
};

struct Provenance {
  std::string source;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<Segment> segments;

  std::optional<long long> param(std::string_view key) const;
};

// When the certificate is present it verifies and has length `budget`.
struct GeneratedInstance {
  Instance instance;
  Configuration start;
  long long budget = 0;
  std::optional<SwapSequence> certificate;
  Provenance provenance;
  std::vector<std::string> roles;  // one short description per vertex
};

// Vertex ids inside one linker copy, relative to `base`: finishing set first,
// then the starting path, then private path h at 2a + h*a.
struct LinkerLayout {
  int a = 0;
  int b = 0;
  int base = 0;

  int size() const { return a * (b + 2); }
  int finishing(int p) const { return base + p; }
  int starting(int p) const { return base + a + p; }
  int private_vertex(int h, int p) const { return base + 2 * a + h * a + p; }
};

// Edges of one linker copy.
std::vector<Edge> linker_edges(const LinkerLayout& layout);

// Self-contained linker: local tokens go to the starting path, global tokens
// to the finishing set. The certificate routes everything through private
// path 0 and its length a(a+2) is the budget.
GeneratedInstance gen_linker(int a, int b);

// Multicolored subgraph isomorphism: host vertex v has color class
// host_class[v] in [0, k), k = pattern vertex count.
struct MsiInstance {
  Graph pattern;
  Graph host;
  std::vector<int> host_class;
};
// mapping[i] = host vertex chosen for pattern vertex i.
using MsiSolution = std::vector<int>;

GeneratedInstance gen_w1_instance(const MsiInstance& msi,
                                  const std::optional<MsiSolution>& solution = std::nullopt);

// Exact cover by 3-sets with every element in exactly three sets.
struct X3cInstance {
  int universe = 0;
  std::vector<std::array<int, 3>> sets;
};
using X3cCover = std::vector<int>;  // indices of the chosen sets

GeneratedInstance gen_almost_tree(const X3cInstance& x3c,
                                  const std::optional<X3cCover>& cover = std::nullopt);

// `cycle` lists every node once in Hamiltonian order.
GeneratedInstance gen_star_sts(const Digraph& h,
                               const std::optional<std::vector<int>>& cycle = std::nullopt);

// Each triangle names three arc indices of h.
using TriangleDecomposition = std::vector<std::array<int, 3>>;

GeneratedInstance gen_clique_cts(const Digraph& h,
                                 const std::optional<TriangleDecomposition>& triangles = std::nullopt);

// Companion text formats for the source problems. See README for the
// grammar; all use '#' comments like the instance format.
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& h);
std::vector<int> parse_hamcycle(std::string_view text);
std::string serialize_hamcycle(const std::vector<int>& cycle);
TriangleDecomposition parse_triangles(std::string_view text);
std::string serialize_triangles(const TriangleDecomposition& t);
X3cInstance parse_x3c(std::string_view text);
std::string serialize_x3c(const X3cInstance& x);
X3cCover parse_x3c_cover(std::string_view text);
std::string serialize_x3c_cover(const X3cCover& c);
MsiInstance parse_msi(std::string_view text);
std::string serialize_msi(const MsiInstance& m);
MsiSolution parse_msi_solution(std::string_view text);
std::string serialize_msi_solution(const MsiSolution& s);

}  // namespace tsw::gen
