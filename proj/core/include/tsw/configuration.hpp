#pragma once

#include <span>
#include <vector>

namespace tsw {

// Token placement: token_at(v) is the token currently on vertex v. Token t is
// the token that started on vertex t, so a fresh instance starts at identity.
class Configuration {
 public:
  Configuration() = default;
  // Throws InvalidInput unless `placement` is a permutation of 0..n-1.
  explicit Configuration(std::vector<int> placement);

  static Configuration identity(int n);

  int size() const { return static_cast<int>(placement_.size()); }
  int token_at(int vertex) const { return placement_[vertex]; }
  std::span<const int> placement() const { return placement_; }
  // positions()[t] = vertex holding token t.
  std::vector<int> positions() const;

  // Exchanges the tokens on a and b without any adjacency check.
  void exchange(int a, int b);

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<int> placement_;
};

// +1 if the permutation mapping `from` to `to` is even, -1 if odd.
int relative_sign(const Configuration& from, const Configuration& to);

}  // namespace tsw
