#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tsw::detail {

// Lehmer-code rank of a permutation of 0..n-1, n <= 20. Collision-free
// and fits in 64 bits since 20! < 2^63.
inline std::uint64_t lehmer_rank(std::span<const int> p) {
  const std::size_t n = p.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i] ? 1 : 0;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

inline void lehmer_unrank(std::uint64_t rank, std::span<int> out) {
  const std::size_t n = out.size();
  int digits[20];
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t base = n - i;
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int skip = digits[i];
    int value = 0;
    for (;; ++value) {
      if (used & (1u << value)) continue;
      if (skip-- == 0) break;
    }
    used |= 1u << value;
    out[i] = value;
  }
}

// Open-addressing map from 64-bit keys to dense indices; the keys live in
// the caller's array so each slot is only an index.
class FlatKeyIndex {
 public:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  FlatKeyIndex() { slots_.assign(1024, kEmpty); }

  // Returns the index stored for `key`, or inserts `fresh` and returns it.
  std::uint32_t find_or_insert(std::uint64_t key, std::uint32_t fresh,
                               const std::vector<std::uint64_t>& keys) {
    if ((size_ + 1) * 2 > slots_.size()) grow(keys);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == kEmpty) {
        slots_[i] = fresh;
        ++size_;
        return fresh;
      }
      if (keys[slots_[i]] == key) return slots_[i];
    }
  }

 private:
  static std::uint64_t hash(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  void grow(const std::vector<std::uint64_t>& keys) {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    std::size_t mask = slots_.size() - 1;
    for (std::uint32_t idx : old) {
      if (idx == kEmpty) continue;
      std::size_t i = hash(keys[idx]) & mask;
      while (slots_[i] != kEmpty) i = (i + 1) & mask;
      slots_[i] = idx;
    }
  }

  std::vector<std::uint32_t> slots_;
  std::size_t size_ = 0;
};

struct LehmerCodec {
  using Key = std::uint64_t;

  Key encode(std::span<const int> p) const { return lehmer_rank(p); }
  void decode(const Key& key, std::span<int> out) const { lehmer_unrank(key, out); }

  class Index {
   public:
    std::uint32_t find_or_insert(const Key& key, std::uint32_t fresh, const std::vector<Key>& keys) {
      return flat_.find_or_insert(key, fresh, keys);
    }

   private:
    FlatKeyIndex flat_;
  };
};

// Fallback for components above 20 vertices: the raw placement bytes.
struct ArrayCodec {
  using Key = std::string;

  Key encode(std::span<const int> p) const {
    return Key(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(int));
  }
  void decode(const Key& key, std::span<int> out) const {
    std::memcpy(out.data(), key.data(), out.size() * sizeof(int));
  }

  class Index {
   public:
    std::uint32_t find_or_insert(const Key& key, std::uint32_t fresh, const std::vector<Key>&) {
      return map_.try_emplace(key, fresh).first->second;
    }

   private:
    std::unordered_map<Key, std::uint32_t> map_;
  };
};

}  // namespace tsw::detail
