#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsw/instance.hpp"

namespace tsw::fo {

// First-order formulas over vertices with the binary relations
// edge(x, y) and target(x, y) (y is an allowed destination of the token
// that starts on x). Text form is an S-expression:
//
//   (exists (v ...) F)  (forall (v ...) F)  (and F ...)  (or F ...)
//   (not F)  (=> F F)  (= x y)  (edge x y)  (target x y)
//
// Lines starting with ';' are comments.
enum class Kind { exists, forall, conj, disj, neg, implies, eq, edge, target };

struct Formula {
  Kind kind = Kind::conj;
  std::vector<int> vars;       // bound variables (quantifiers)
  std::vector<Formula> kids;   // subformulas
  int x = -1;                  // atom arguments
  int y = -1;
};

struct Sentence {
  Formula root;
  std::vector<std::string> names;  // variable id -> printed name
};

// The formula for "a solution with at most k swaps exists": a disjunction
// over exactly-i-swap formulas, i = 0..k. Throws InvalidInput for k < 1.
Sentence build_formula(int k);
std::string emit_formula(int k);
std::string to_text(const Sentence& s);

// Occurrences of =, edge and target.
std::size_t count_atoms(const Formula& f);

// Decides the k-swap question by evaluating the formula's body on the
// witness read off each candidate swap sequence (every ordered vertex pair
// per swap). Caps: n <= 5, k <= 3; throws ResourceLimit beyond them.
bool eval_formula_naive(const Instance& inst, int k);

}  // namespace tsw::fo
