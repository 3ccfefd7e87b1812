#include "gallai/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace gallai {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("negative vertex universe");
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  if (v < 0 || v >= universe_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const noexcept {
  int total = 0;
  for (auto w : words_) total += __builtin_popcountll(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~theirs) return false;
  }
  return true;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Vertex>(i * 64 + __builtin_ctzll(words_[i]));
  return -1;
}

Vertex VertexSet::next(Vertex v) const noexcept {
  Vertex start = v + 1;
  if (start >= universe_) return -1;
  if (start < 0) start = 0;
  std::size_t i = static_cast<std::size_t>(start) >> 6;
  std::uint64_t bits = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits) return static_cast<Vertex>(i * 64 + __builtin_ctzll(bits));
    if (++i >= words_.size()) return -1;
    bits = words_[i];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw std::invalid_argument("vertex sets over different universes");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
  return a.universe_ == b.universe_ && a.words_ == b.words_;
}

bool operator<(const VertexSet& a, const VertexSet& b) noexcept {
  Vertex x = a.first();
  Vertex y = b.first();
  while (x != -1 && y != -1) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

std::string VertexSet::to_string() const {
  const auto v = to_vector();
  return format_vertices(v);
}

std::string format_vertices(std::span<const Vertex> vertices) {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices[i]);
  }
  out += ']';
  return out;
}

}  // namespace gallai
