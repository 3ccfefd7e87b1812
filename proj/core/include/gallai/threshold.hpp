#pragma once

#include <cstdint>
#include <string>

namespace gallai {

/// Nonnegative real threshold theta, either a rational p/q or the cube root of
/// an integer. All comparisons are exact (cross-multiplied or cubed).
class Threshold {
 public:
  static Threshold ratio(std::int64_t p, std::int64_t q = 1);
  static Threshold cube_root(std::int64_t n);

  /// Sign of a * theta^k - b, for a, b >= 0 and k in 0..3.
  int compare_scaled(std::int64_t a, int k, std::int64_t b) const;
  /// a * theta^k < b
  bool scaled_less(std::int64_t a, int k, std::int64_t b) const { return compare_scaled(a, k, b) < 0; }

  bool is_cube_root() const noexcept { return cube_; }
  double approx() const;
  /// "p/q" (or "p" when q = 1) or "cbrt(n)".
  std::string to_string() const;

  /// Accepts "p", "p/q" or "cbrt(n)".
  static Threshold parse(const std::string& text);

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  Threshold(std::int64_t p, std::int64_t q, bool cube) : p_(p), q_(q), cube_(cube) {}
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
  bool cube_ = false;  // theta = p_^(1/3)
};

}  // namespace gallai
