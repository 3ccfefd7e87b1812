#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gallai {

using Vertex = int;

/// Dynamic bitset over the vertex universe {0, ..., universe-1}.
///
/// Ordering compares the sorted element lists lexicographically, which is the
/// canonical order used for families, witnesses and reports.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const Vertex> members);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept;
  void insert(Vertex v);
  void erase(Vertex v);

  int count() const noexcept;
  bool empty() const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  /// Smallest member, or -1 when empty.
  Vertex first() const noexcept;
  /// Smallest member greater than v, or -1.
  Vertex next(Vertex v) const noexcept;

  std::vector<Vertex> to_vector() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept;
  friend bool operator<(const VertexSet& a, const VertexSet& b) noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  /// "[0,3,7]"
  std::string to_string() const;

 private:
  void check_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// "[0,3,7]" for any ordered vertex sequence.
std::string format_vertices(std::span<const Vertex> vertices);

}  // namespace gallai
