#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace opw {

using Mask = std::uint64_t;

// Bitset over the vertex ids [0, universe) of a host graph. Exact-search code
// paths work on raw Mask words directly; VertexSet is the value type that
// crosses module boundaries and survives hosts larger than one word.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);

  static VertexSet from_mask(int universe, Mask mask);
  static VertexSet from_members(int universe, const std::vector<int>& members);
  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  bool contains(int v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v);
  void erase(int v);
  int size() const noexcept;
  bool empty() const noexcept;
  std::vector<int> members() const;
  int smallest() const noexcept;  // -1 when empty

  // Requires universe() <= 64.
  Mask to_mask() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline int popcount(Mask m) noexcept { return std::popcount(m); }
inline int lowest_bit(Mask m) noexcept { return std::countr_zero(m); }
inline Mask bit(int v) noexcept { return Mask{1} << v; }
inline Mask low_mask(int n) noexcept { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace opw
