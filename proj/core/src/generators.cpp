#include "tsw/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tsw/error.hpp"

namespace tsw::gen {

std::optional<long long> Provenance::param(std::string_view key) const {
  for (const auto& [name, value] : params)
    if (name == key) return value;
  return std::nullopt;
}

namespace {

std::string str(int v) { return std::to_string(v); }

// Appends swaps to a certificate while tracking the configuration, so
// that data-dependent steps can look at where tokens currently are.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(int n) : config_(Configuration::identity(n)) {}

  void swap(int u, int v, Segment& seg) {
    seg.swaps.push_back(seq_.swaps.size());
    seq_.swaps.emplace_back(u, v);
    config_.exchange(u, v);
  }
  int token_at(int v) const { return config_.token_at(v); }
  SwapSequence take() { return std::move(seq_); }

 private:
  Configuration config_;
  SwapSequence seq_;
};

// Internal consistency check: a generator must never hand out a
// certificate that fails verification or misses the budget.
void check_certificate(const GeneratedInstance& g) {
  if (!g.certificate) return;
  const VerificationReport r = verify_solution(g.instance, g.start, *g.certificate);
  if (!r.valid || static_cast<long long>(r.length) != g.budget)
    throw Error("internal error: generated certificate is invalid (" + r.reason + ")");
}

}  // namespace

std::vector<Edge> linker_edges(const LinkerLayout& L) {
  std::vector<Edge> edges;
  for (int p = 0; p + 1 < L.a; ++p) edges.emplace_back(L.starting(p), L.starting(p + 1));
  for (int h = 0; h < L.b; ++h) {
    for (int p = 0; p + 1 < L.a; ++p)
      edges.emplace_back(L.private_vertex(h, p), L.private_vertex(h, p + 1));
    for (int p = 0; p < L.a; ++p) edges.emplace_back(L.finishing(p), L.private_vertex(h, p));
    edges.emplace_back(L.starting(0), L.private_vertex(h, L.a - 1));
  }
  return edges;
}

namespace {

// Routes every local token of one linker through private path h, last
// finishing vertex first. Afterwards the global token of starting(p) sits
// on private_vertex(h, p). a(a+1) swaps.
void route_locals(const LinkerLayout& L, int h, CertificateBuilder& cb, Segment& seg) {
  for (int p = L.a - 1; p >= 0; --p) {
    cb.swap(L.finishing(p), L.private_vertex(h, p), seg);
    for (int q = p; q + 1 < L.a; ++q) cb.swap(L.private_vertex(h, q), L.private_vertex(h, q + 1), seg);
    cb.swap(L.private_vertex(h, L.a - 1), L.starting(0), seg);
    for (int q = 0; q < p; ++q) cb.swap(L.starting(q), L.starting(q + 1), seg);
  }
}

}  // namespace

GeneratedInstance gen_linker(int a, int b) {
  if (a < 1 || b < 1) throw InvalidInput("linker needs a >= 1 and b >= 1");
  const LinkerLayout L{a, b, 0};
  const int n = L.size();
  std::vector<int> target(n);
  for (int v = 0; v < n; ++v) target[v] = v;
  for (int p = 0; p < a; ++p) {
    target[L.finishing(p)] = L.starting(p);
    target[L.starting(p)] = L.finishing(p);
  }
  GeneratedInstance out{Instance::token_swapping(Graph(n, linker_edges(L)), std::move(target)),
                        Configuration::identity(n), static_cast<long long>(a) * (a + 2),
                        std::nullopt, {}, std::vector<std::string>(n)};
  for (int p = 0; p < a; ++p) {
    out.roles[L.finishing(p)] = "finishing " + str(p) + " (local token -> starting " + str(p) + ")";
    out.roles[L.starting(p)] = "starting " + str(p) + " (global token -> finishing " + str(p) + ")";
    for (int h = 0; h < b; ++h)
      out.roles[L.private_vertex(h, p)] = "private path " + str(h) + " position " + str(p);
  }

  CertificateBuilder cb(n);
  Segment routing{"route locals via private path 0", {}};
  Segment placing{"place globals", {}};
  route_locals(L, 0, cb, routing);
  for (int p = 0; p < a; ++p) cb.swap(L.private_vertex(0, p), L.finishing(p), placing);
  out.certificate = cb.take();
  out.provenance = {"linker", {{"a", a}, {"b", b}}, {routing, placing}};
  check_certificate(out);
  return out;
}

GeneratedInstance gen_w1_instance(const MsiInstance& msi, const std::optional<MsiSolution>& solution) {
  const Graph& P = msi.pattern;
  const Graph& H = msi.host;
  const int k = P.vertex_count();
  if (k == 0) throw InvalidInput("pattern graph is empty");
  for (int i = 0; i < k; ++i)
    if (P.degree(i) != 3)
      throw InvalidInput("pattern is not 3-regular: vertex " + str(i) + " has degree " +
                         str(P.degree(i)));
  if (k % 2 != 0) throw InvalidInput("k must be even so that the budget 16.5k is an integer");
  if (static_cast<int>(msi.host_class.size()) != H.vertex_count())
    throw InvalidInput("host class list does not cover every host vertex");

  std::vector<std::vector<int>> members(k);
  std::vector<int> rank(H.vertex_count());
  for (int v = 0; v < H.vertex_count(); ++v) {
    const int c = msi.host_class[v];
    if (c < 0 || c >= k) throw InvalidInput("host vertex " + str(v) + " has class out of range");
    rank[v] = static_cast<int>(members[c].size());
    members[c].push_back(v);
  }
  int t = 1;
  for (const auto& m : members) t = std::max(t, static_cast<int>(m.size()));

  // slot(i, j): position of j among the sorted pattern neighbours of i.
  auto slot = [&](int i, int j) {
    auto nb = P.neighbors(i);
    return static_cast<int>(std::find(nb.begin(), nb.end(), j) - nb.begin());
  };
  std::vector<LinkerLayout> gadget;
  for (int i = 0; i < k; ++i) gadget.push_back({3, t, i * 3 * (t + 2)});
  const int n = 3 * (t + 2) * k;

  std::vector<Edge> edges;
  for (const auto& L : gadget) {
    auto e = linker_edges(L);
    edges.insert(edges.end(), e.begin(), e.end());
  }
  std::vector<int> pattern_edge_hits(P.edge_count(), 0);
  long long ignored = 0;
  for (const Edge& e : H.edges()) {
    const int i = msi.host_class[e.u];
    const int j = msi.host_class[e.v];
    const int idx = i == j ? -1 : P.edge_index(i, j);
    if (idx < 0) {
      ++ignored;
      continue;
    }
    ++pattern_edge_hits[idx];
    edges.emplace_back(gadget[i].private_vertex(rank[e.u], slot(i, j)),
                       gadget[j].private_vertex(rank[e.v], slot(j, i)));
  }
  for (std::size_t idx = 0; idx < P.edge_count(); ++idx)
    if (pattern_edge_hits[idx] == 0)
      throw InvalidInput("no host edge between classes " + str(P.edges()[idx].u) + " and " +
                         str(P.edges()[idx].v));

  std::vector<int> target(n);
  for (int v = 0; v < n; ++v) target[v] = v;
  std::vector<std::string> roles(n);
  for (int i = 0; i < k; ++i) {
    const auto& L = gadget[i];
    auto nb = P.neighbors(i);
    for (int p = 0; p < 3; ++p) {
      const int j = nb[p];
      target[L.finishing(p)] = L.starting(p);
      target[L.starting(p)] = gadget[j].finishing(slot(j, i));
      roles[L.finishing(p)] = "gadget " + str(i) + " a(" + str(i) + "," + str(j) + ")";
      roles[L.starting(p)] = "gadget " + str(i) + " b(" + str(i) + "," + str(j) + ")";
      for (int h = 0; h < t; ++h) {
        const bool real = h < static_cast<int>(members[i].size());
        roles[L.private_vertex(h, p)] =
            "gadget " + str(i) + " u(" + str(i) + "," + str(h) + "," + str(j) + ")" +
            (real ? " host " + str(members[i][h]) : " padding");
      }
    }
  }

  GeneratedInstance out{Instance::token_swapping(Graph(n, std::move(edges)), std::move(target)),
                        Configuration::identity(n), 33LL * k / 2, std::nullopt, {}, std::move(roles)};
  out.provenance.source = "msi";
  out.provenance.params = {{"k", k},
                           {"t", t},
                           {"host_vertices", H.vertex_count()},
                           {"host_edges", static_cast<long long>(H.edge_count())},
                           {"ignored_host_edges", ignored}};

  if (solution) {
    const MsiSolution& phi = *solution;
    if (static_cast<int>(phi.size()) != k)
      throw InvalidInput("solution must map each of the " + str(k) + " pattern vertices");
    for (int i = 0; i < k; ++i)
      if (phi[i] < 0 || phi[i] >= H.vertex_count() || msi.host_class[phi[i]] != i)
        throw InvalidInput("solution maps pattern vertex " + str(i) + " outside its class");
    for (const Edge& e : P.edges())
      if (!H.has_edge(phi[e.u], phi[e.v]))
        throw InvalidInput("solution misses host edge for pattern edge " + str(e.u) + "-" +
                           str(e.v));

    CertificateBuilder cb(n);
    for (int i = 0; i < k; ++i) {
      Segment seg{"gadget " + str(i) + " routing", {}};
      route_locals(gadget[i], rank[phi[i]], cb, seg);
      out.provenance.segments.push_back(std::move(seg));
    }
    Segment cross{"cross swaps", {}};
    for (const Edge& e : P.edges())
      cb.swap(gadget[e.u].private_vertex(rank[phi[e.u]], slot(e.u, e.v)),
              gadget[e.v].private_vertex(rank[phi[e.v]], slot(e.v, e.u)), cross);
    Segment place{"placement swaps", {}};
    for (int i = 0; i < k; ++i)
      for (int p = 0; p < 3; ++p)
        cb.swap(gadget[i].private_vertex(rank[phi[i]], p), gadget[i].finishing(p), place);
    out.provenance.segments.push_back(std::move(cross));
    out.provenance.segments.push_back(std::move(place));
    out.certificate = cb.take();
    check_certificate(out);
  }
  return out;
}

namespace {

// Per-gadget vertex offsets: spine g0 b1 g1 b2 g2 b3 g3, then the element
// leaves e1 e2 e3 hanging off g1 g2 g3.
constexpr int kGadget = 10;
int spine(int j, int pos) { return kGadget * j + pos; }
int gray(int j, int i) { return spine(j, 2 * i); }
int element(int j, int i) { return kGadget * j + 6 + i; }  // i in 1..3

}  // namespace

GeneratedInstance gen_almost_tree(const X3cInstance& x3c, const std::optional<X3cCover>& cover) {
  const int n = x3c.universe;
  if (n <= 0 || n % 3 != 0) throw InvalidInput("universe size must be a positive multiple of 3");
  if (static_cast<int>(x3c.sets.size()) != n)
    throw InvalidInput("need exactly as many sets as elements");
  // occurrences[x] = element vertices of x, by set index then position.
  std::vector<std::vector<int>> occurrences(n);
  for (int j = 0; j < n; ++j) {
    const auto& s = x3c.sets[j];
    for (int i = 0; i < 3; ++i) {
      if (s[i] < 0 || s[i] >= n) throw InvalidInput("set " + str(j) + " has element out of range");
      for (int q = 0; q < i; ++q)
        if (s[q] == s[i]) throw InvalidInput("set " + str(j) + " repeats an element");
      occurrences[s[i]].push_back(element(j, i + 1));
    }
  }
  for (int x = 0; x < n; ++x)
    if (occurrences[x].size() != 3)
      throw InvalidInput("element " + str(x) + " occurs " + str(static_cast<int>(occurrences[x].size())) +
                         " times, expected 3");

  const int apex = kGadget * n;
  const int total = apex + 1;
  std::vector<Edge> edges;
  std::vector<int> target(total);
  for (int v = 0; v < total; ++v) target[v] = v;
  std::vector<std::string> roles(total);
  roles[apex] = "apex c";
  static const char* kSpine[] = {"g0", "b1", "g1", "b2", "g2", "b3", "g3"};
  for (int j = 0; j < n; ++j) {
    for (int pos = 0; pos + 1 < 7; ++pos) edges.emplace_back(spine(j, pos), spine(j, pos + 1));
    for (int i = 1; i <= 3; ++i) {
      edges.emplace_back(element(j, i), gray(j, i));
      edges.emplace_back(element(j, i), apex);
      roles[element(j, i)] = "set " + str(j) + " element " + str(x3c.sets[j][i - 1]);
    }
    edges.emplace_back(gray(j, 0), apex);
    for (int i = 0; i < 4; ++i) target[gray(j, i)] = gray(j, (i + 1) % 4);
    for (int pos = 0; pos < 7; ++pos) roles[spine(j, pos)] = "set " + str(j) + " " + kSpine[pos];
  }
  for (const auto& occ : occurrences)
    for (int q = 0; q < 3; ++q) target[occ[q]] = occ[(q + 1) % 3];

  GeneratedInstance out{Instance::token_swapping(Graph(total, std::move(edges)), std::move(target)),
                        Configuration::identity(total), 35LL * n / 3, std::nullopt, {},
                        std::move(roles)};
  out.provenance.source = "x3c";
  out.provenance.params = {{"n", n}, {"sets", n}};
  if (!cover) return out;

  std::vector<char> chosen(n, 0);
  std::vector<int> covered(n, 0);
  if (static_cast<int>(cover->size()) != n / 3)
    throw InvalidInput("an exact cover uses exactly n/3 sets");
  for (int j : *cover) {
    if (j < 0 || j >= n || chosen[j]) throw InvalidInput("cover lists an invalid or repeated set");
    chosen[j] = 1;
    for (int x : x3c.sets[j]) ++covered[x];
  }
  for (int x = 0; x < n; ++x)
    if (covered[x] != 1) throw InvalidInput("cover does not cover element " + str(x) + " exactly once");

  CertificateBuilder cb(total);
  auto& segs = out.provenance.segments;
  // The token on the apex is an element token; two happy swaps send it
  // and the next occurrence's token home.
  auto happy_pair = [&](int x) {
    Segment seg{"element " + str(x) + " happy swaps", {}};
    for (int r = 0; r < 2; ++r) cb.swap(apex, out.instance.destinations(cb.token_at(apex))[0], seg);
    segs.push_back(std::move(seg));
  };
  for (int j = 0; j < n; ++j) {
    if (!chosen[j]) continue;
    Segment rot{"set " + str(j) + " rotation via apex", {}};
    const std::size_t at = segs.size();
    segs.push_back({});
    cb.swap(apex, gray(j, 0), rot);
    for (int i = 1; i <= 3; ++i) {
      if (i > 1) cb.swap(element(j, i - 1), apex, rot);
      cb.swap(apex, element(j, i), rot);
      cb.swap(element(j, i), gray(j, i), rot);
      happy_pair(x3c.sets[j][i - 1]);
    }
    cb.swap(element(j, 3), apex, rot);
    cb.swap(apex, gray(j, 0), rot);
    segs[at] = std::move(rot);
  }
  for (int j = 0; j < n; ++j) {
    if (chosen[j]) continue;
    Segment rot{"set " + str(j) + " internal rotation", {}};
    for (int pos = 6; pos > 0; --pos) cb.swap(spine(j, pos - 1), spine(j, pos), rot);
    for (int pos = 1; pos < 7; pos += 2) cb.swap(spine(j, pos), spine(j, pos + 1), rot);
    segs.push_back(std::move(rot));
  }
  out.certificate = cb.take();
  check_certificate(out);
  return out;
}

GeneratedInstance gen_star_sts(const Digraph& h, const std::optional<std::vector<int>>& cycle) {
  const int n = h.nodes;
  if (n < 1) throw InvalidInput("digraph has no nodes");
  std::set<Arc> seen;
  std::vector<std::vector<int>> sets(n + 1);
  sets[0] = {0};
  for (const Arc& a : h.arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) throw InvalidInput("arc out of range");
    if (a.from == a.to) throw InvalidInput("loop at node " + str(a.from));
    if (!seen.insert(a).second) throw InvalidInput("parallel arcs are not allowed");
    sets[a.from + 1].push_back(a.to + 1);
  }
  for (int v = 0; v < n; ++v) {
    if (sets[v + 1].empty()) throw InvalidInput("node " + str(v) + " has no out-arc");
    if (sets[v + 1].size() > 2) throw InvalidInput("node " + str(v) + " has out-degree above 2");
  }
  std::vector<std::string> roles(n + 1);
  roles[0] = "center";
  for (int v = 0; v < n; ++v) roles[v + 1] = "node " + str(v);
  GeneratedInstance out{Instance::subset(Graph::star(n), std::move(sets)),
                        Configuration::identity(n + 1), n + 1LL, std::nullopt,
                        {"digraph", {{"nodes", n}, {"arcs", static_cast<long long>(h.arcs.size())}}, {}},
                        std::move(roles)};
  if (!cycle) return out;

  const auto& c = *cycle;
  if (static_cast<int>(c.size()) != n) throw InvalidInput("cycle must visit every node once");
  std::vector<char> visited(n, 0);
  for (int v : c) {
    if (v < 0 || v >= n || visited[v]) throw InvalidInput("cycle repeats or leaves the node range");
    visited[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!seen.count(Arc{c[i], c[(i + 1) % n]}))
      throw InvalidInput("cycle uses missing arc " + str(c[i]) + "->" + str(c[(i + 1) % n]));
  CertificateBuilder cb(n + 1);
  Segment seg{"tour", {}};
  for (int v : c) cb.swap(0, v + 1, seg);
  cb.swap(0, c[0] + 1, seg);
  out.certificate = cb.take();
  out.provenance.segments.push_back(std::move(seg));
  check_certificate(out);
  return out;
}

GeneratedInstance gen_clique_cts(const Digraph& h, const std::optional<TriangleDecomposition>& triangles) {
  const int n = static_cast<int>(h.arcs.size());
  if (!is_eulerian(h)) throw InvalidInput("digraph is not Eulerian");
  std::set<Arc> arcs(h.arcs.begin(), h.arcs.end());
  for (const Arc& a : h.arcs)
    if (a.from != a.to && arcs.count(Arc{a.to, a.from}))
      throw InvalidInput("digraph has a 2-cycle between " + str(a.from) + " and " + str(a.to));
  if (n == 0 || n % 3 != 0) throw InvalidInput("arc count must be a positive multiple of 3");

  std::vector<std::string> roles(n);
  for (int i = 0; i < n; ++i)
    roles[i] = "arc " + str(i) + ": " + str(h.arcs[i].from) + "->" + str(h.arcs[i].to);
  GeneratedInstance out{realize_color_digraph(h, Graph::complete(n)), Configuration::identity(n),
                        2LL * n / 3, std::nullopt,
                        {"digraph", {{"nodes", h.nodes}, {"arcs", n}}, {}}, std::move(roles)};
  if (!triangles) return out;

  if (static_cast<int>(triangles->size()) * 3 != n)
    throw InvalidInput("decomposition must use every arc exactly once");
  std::vector<char> used(n, 0);
  CertificateBuilder cb(n);
  int index = 0;
  for (auto tri : *triangles) {
    for (int id : tri) {
      if (id < 0 || id >= n || used[id]) throw InvalidInput("decomposition repeats or misses an arc");
      used[id] = 1;
    }
    // Cyclic order x->y, y->z, z->x starting from the first listed arc.
    if (h.arcs[tri[1]].from != h.arcs[tri[0]].to) std::swap(tri[1], tri[2]);
    const Arc& a = h.arcs[tri[0]];
    const Arc& b = h.arcs[tri[1]];
    const Arc& c = h.arcs[tri[2]];
    if (b.from != a.to || c.from != b.to || c.to != a.from || a.from == a.to || a.from == b.to)
      throw InvalidInput("arcs " + str(tri[0]) + " " + str(tri[1]) + " " + str(tri[2]) +
                         " do not form a directed triangle");
    Segment seg{"triangle " + str(index++), {}};
    cb.swap(tri[0], tri[1], seg);
    cb.swap(tri[0], tri[2], seg);
    out.provenance.segments.push_back(std::move(seg));
  }
  out.certificate = cb.take();
  check_certificate(out);
  return out;
}

}  // namespace tsw::gen
