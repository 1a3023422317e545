#include "tsw/fo.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tsw/configuration.hpp"
#include "tsw/error.hpp"

namespace tsw::fo {
namespace {

Formula atom(Kind kind, int x, int y) {
  Formula f;
  f.kind = kind;
  f.x = x;
  f.y = y;
  return f;
}
Formula eq(int x, int y) { return atom(Kind::eq, x, y); }

Formula node(Kind kind, std::vector<Formula> kids) {
  Formula f;
  f.kind = kind;
  f.kids = std::move(kids);
  return f;
}
Formula conj(std::vector<Formula> kids) { return node(Kind::conj, std::move(kids)); }
Formula disj(std::vector<Formula> kids) { return node(Kind::disj, std::move(kids)); }
Formula neg(Formula a) { return node(Kind::neg, {std::move(a)}); }
Formula implies(Formula a, Formula b) { return node(Kind::implies, {std::move(a), std::move(b)}); }

Formula quantify(Kind kind, std::vector<int> vars, Formula body) {
  Formula f = node(kind, {std::move(body)});
  f.vars = std::move(vars);
  return f;
}

// Variable ids of one exactly-i-swap disjunct; m = 2i traced tokens.
struct Layout {
  int swaps = 0;
  std::vector<int> t, dest, s1, s2, st1, st2;
  std::vector<std::vector<int>> pos;  // pos[j][r], r = 0..swaps
  int x = -1;
};

class Builder {
 public:
  int var(std::string name) {
    names.push_back(std::move(name));
    return static_cast<int>(names.size()) - 1;
  }

  Layout layout(int i) {
    Layout L;
    L.swaps = i;
    const int m = 2 * i;
    for (int j = 1; j <= m; ++j) L.t.push_back(var("t_" + std::to_string(j)));
    for (int j = 1; j <= m; ++j) L.dest.push_back(var("dest_" + std::to_string(j)));
    for (int r = 1; r <= i; ++r) {
      L.st1.push_back(var("st_" + std::to_string(r) + "^1"));
      L.st2.push_back(var("st_" + std::to_string(r) + "^2"));
    }
    for (int r = 1; r <= i; ++r) {
      L.s1.push_back(var("s_" + std::to_string(r) + "^1"));
      L.s2.push_back(var("s_" + std::to_string(r) + "^2"));
    }
    L.pos.assign(m, {});
    for (int r = 0; r <= i; ++r)
      for (int j = 0; j < m; ++j)
        L.pos[j].push_back(var("pos_" + std::to_string(j + 1) + "_" + std::to_string(r)));
    L.x = var("x");
    return L;
  }

  std::vector<std::string> names;
};

// Body of the exactly-i-swap formula. Swap r (1-based) moves the traced
// tokens from pos[.][r-1] to pos[.][r].
Formula body(const Layout& L) {
  const int m = static_cast<int>(L.t.size());
  const int k = L.swaps;
  std::vector<Formula> parts;

  std::vector<Formula> untraced;
  for (int j = 0; j < m; ++j) untraced.push_back(neg(eq(L.x, L.t[j])));
  parts.push_back(quantify(Kind::forall, {L.x},
                           implies(conj(std::move(untraced)), atom(Kind::target, L.x, L.x))));
  for (int j = 0; j < m; ++j) parts.push_back(atom(Kind::target, L.t[j], L.dest[j]));
  for (int r = 0; r < k; ++r) parts.push_back(atom(Kind::edge, L.s1[r], L.s2[r]));
  for (int j = 0; j < m; ++j) parts.push_back(eq(L.pos[j][0], L.t[j]));
  for (int j = 0; j < m; ++j) parts.push_back(eq(L.pos[j][k], L.dest[j]));
  for (int side = 0; side < 2; ++side) {
    const auto& st = side == 0 ? L.st1 : L.st2;
    const auto& s = side == 0 ? L.s1 : L.s2;
    for (int r = 0; r < k; ++r) {
      std::vector<Formula> any;
      for (int j = 0; j < m; ++j) any.push_back(conj({eq(st[r], L.t[j]), eq(L.pos[j][r], s[r])}));
      parts.push_back(disj(std::move(any)));
    }
  }
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < m; ++j)
      parts.push_back(implies(neg(disj({eq(L.st1[r], L.t[j]), eq(L.st2[r], L.t[j])})),
                              eq(L.pos[j][r + 1], L.pos[j][r])));
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < m; ++j)
      for (int jj = 0; jj < m; ++jj) {
        if (j == jj) continue;
        parts.push_back(implies(conj({eq(L.st1[r], L.t[j]), eq(L.st2[r], L.t[jj])}),
                                conj({eq(L.pos[j][r + 1], L.pos[jj][r]),
                                      eq(L.pos[jj][r + 1], L.pos[j][r])})));
      }
  return conj(std::move(parts));
}

std::vector<int> bound_vars(const Layout& L) {
  std::vector<int> v;
  for (const auto* fam : {&L.t, &L.dest, &L.st1, &L.st2, &L.s1, &L.s2})
    v.insert(v.end(), fam->begin(), fam->end());
  for (int r = 0; r <= L.swaps; ++r)
    for (const auto& p : L.pos) v.push_back(p[r]);
  return v;
}

struct Built {
  Sentence sentence;
  std::vector<Layout> layouts;  // index i = exactly i swaps (i >= 1)
};

Built build(int k) {
  if (k < 1) throw InvalidInput("formula needs k >= 1");
  Builder b;
  Built out;
  std::vector<Formula> cases;
  // Zero swaps: every token already accepted where it stands.
  const int x0 = b.var("x");
  cases.push_back(quantify(Kind::forall, {x0}, atom(Kind::target, x0, x0)));
  out.layouts.emplace_back();
  for (int i = 1; i <= k; ++i) {
    Layout L = b.layout(i);
    cases.push_back(quantify(Kind::exists, bound_vars(L), body(L)));
    out.layouts.push_back(std::move(L));
  }
  out.sentence.root = disj(std::move(cases));
  out.sentence.names = std::move(b.names);
  return out;
}

const char* keyword(Kind k) {
  switch (k) {
    case Kind::exists: return "exists";
    case Kind::forall: return "forall";
    case Kind::conj: return "and";
    case Kind::disj: return "or";
    case Kind::neg: return "not";
    case Kind::implies: return "=>";
    case Kind::eq: return "=";
    case Kind::edge: return "edge";
    case Kind::target: return "target";
  }
  return "?";
}

bool is_atom(Kind k) { return k == Kind::eq || k == Kind::edge || k == Kind::target; }

void write(std::ostream& out, const Sentence& s, const Formula& f, int depth) {
  if (is_atom(f.kind)) {
    out << "(" << keyword(f.kind) << " " << s.names[f.x] << " " << s.names[f.y] << ")";
    return;
  }
  out << "(" << keyword(f.kind);
  if (f.kind == Kind::exists || f.kind == Kind::forall) {
    out << " (";
    for (std::size_t i = 0; i < f.vars.size(); ++i) out << (i ? " " : "") << s.names[f.vars[i]];
    out << ")";
  }
  // Break lines only near the top; deeper subformulas stay on one line.
  const bool broken = depth < 3 && count_atoms(f) > 6;
  for (const Formula& kid : f.kids) {
    if (broken) {
      out << "\n" << std::string(2 * (depth + 1), ' ');
    } else {
      out << " ";
    }
    write(out, s, kid, depth + 1);
  }
  out << ")";
}

// Evaluation with every free variable already assigned; forall is
// expanded over the vertex set.
bool eval(const Formula& f, std::vector<int>& a, const Instance& inst) {
  switch (f.kind) {
    case Kind::eq: return a[f.x] == a[f.y];
    case Kind::edge: return inst.graph().has_edge(a[f.x], a[f.y]);
    case Kind::target: return inst.accepts(a[f.x], a[f.y]);
    case Kind::neg: return !eval(f.kids[0], a, inst);
    case Kind::implies: return !eval(f.kids[0], a, inst) || eval(f.kids[1], a, inst);
    case Kind::conj:
      return std::all_of(f.kids.begin(), f.kids.end(),
                         [&](const Formula& g) { return eval(g, a, inst); });
    case Kind::disj:
      return std::any_of(f.kids.begin(), f.kids.end(),
                         [&](const Formula& g) { return eval(g, a, inst); });
    case Kind::forall: {
      std::function<bool(std::size_t)> all = [&](std::size_t i) {
        if (i == f.vars.size()) return eval(f.kids[0], a, inst);
        for (int v = 0; v < inst.size(); ++v) {
          a[f.vars[i]] = v;
          if (!all(i + 1)) return false;
        }
        return true;
      };
      return all(0);
    }
    case Kind::exists:
      throw Error("internal error: exists must be witnessed, not enumerated");
  }
  return false;
}

}  // namespace

Sentence build_formula(int k) { return build(k).sentence; }

std::size_t count_atoms(const Formula& f) {
  if (is_atom(f.kind)) return 1;
  std::size_t n = 0;
  for (const Formula& kid : f.kids) n += count_atoms(kid);
  return n;
}

std::string to_text(const Sentence& s) {
  std::ostringstream out;
  write(out, s, s.root, 0);
  out << "\n";
  return out.str();
}

std::string emit_formula(int k) {
  const Sentence s = build_formula(k);
  std::ostringstream out;
  out << "; at most " << k << " swaps suffice for the subset token swapping instance\n"
      << "; given by (edge x y) and (target x y); tokens are named by their start vertex\n"
      << "; disjunct i states exactly i swaps, i = 0.." << k << "\n"
      << "; swap i moves traced tokens from pos_j_(i-1) to pos_j_i, so positions run 0..i\n"
      << "; traced tokens t_j need not be distinct: repeated slots follow the same token\n"
      << "; atoms " << count_atoms(s.root) << "\n";
  out << to_text(s);
  return out.str();
}

bool eval_formula_naive(const Instance& inst, int k) {
  const int n = inst.size();
  if (k < 0) throw InvalidInput("negative swap budget");
  if (n > 5 || k > 3) throw ResourceLimit("naive formula evaluation is capped at n <= 5, k <= 3");
  if (k == 0) {
    for (int v = 0; v < n; ++v)
      if (!inst.accepts(v, v)) return false;
    return true;
  }
  const Built built = build(k);
  const Formula& root = built.sentence.root;
  std::vector<int> a(built.sentence.names.size(), 0);
  if (eval(root.kids[0], a, inst)) return true;
  if (n == 0) return false;

  for (int i = 1; i <= k; ++i) {
    const Layout& L = built.layouts[i];
    const Formula& phi = root.kids[i].kids[0];
    const int m = 2 * i;
    std::vector<int> pairs(i, 0);  // pairs[r] encodes (s1, s2) as s1 * n + s2
    for (;;) {
      // Replay the swaps to read off the witness.
      Configuration c = Configuration::identity(n);
      std::vector<int> traced;
      auto trace = [&](int token) {
        if (std::find(traced.begin(), traced.end(), token) == traced.end()) traced.push_back(token);
      };
      for (int r = 0; r < i; ++r) {
        const int u = pairs[r] / n;
        const int v = pairs[r] % n;
        a[L.s1[r]] = u;
        a[L.s2[r]] = v;
        a[L.st1[r]] = c.token_at(u);
        a[L.st2[r]] = c.token_at(v);
        trace(c.token_at(u));
        trace(c.token_at(v));
        if (u != v) c.exchange(u, v);
      }
      while (static_cast<int>(traced.size()) < m) traced.push_back(traced.back());
      Configuration replay = Configuration::identity(n);
      for (int r = 0; r <= i; ++r) {
        if (r > 0) {
          const int u = pairs[r - 1] / n;
          const int v = pairs[r - 1] % n;
          if (u != v) replay.exchange(u, v);
        }
        const std::vector<int> where = replay.positions();
        for (int j = 0; j < m; ++j) a[L.pos[j][r]] = where[traced[j]];
      }
      for (int j = 0; j < m; ++j) {
        a[L.t[j]] = traced[j];
        a[L.dest[j]] = a[L.pos[j][i]];
      }
      if (eval(phi, a, inst)) return true;

      int r = 0;
      while (r < i && ++pairs[r] == n * n) pairs[r++] = 0;
      if (r == i) break;
    }
  }
  return false;
}

}  // namespace tsw::fo
