#include "gallai/threshold.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gallai {

namespace {

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
  constexpr Wide limit = static_cast<Wide>(1) << 120;
  if (a != 0 && (b > limit / a)) throw std::overflow_error("threshold comparison overflows");
  return a * b;
}

Wide power(Wide base, int k) {
  Wide r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, base);
  return r;
}

int sign(Wide lhs, Wide rhs) { return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0); }

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) throw std::invalid_argument("bad number `" + s + "`");
  return v;
}

}  // namespace

Threshold Threshold::ratio(std::int64_t p, std::int64_t q) {
  if (p < 0 || q <= 0) throw std::invalid_argument("threshold must be a nonnegative ratio");
  const std::int64_t g = std::gcd(p, q);
  return p == 0 ? Threshold(0, 1, false) : Threshold(p / g, q / g, false);
}

Threshold Threshold::cube_root(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("cube root of a negative number");
  return Threshold(n, 1, true);
}

int Threshold::compare_scaled(std::int64_t a, int k, std::int64_t b) const {
  if (a < 0 || b < 0 || k < 0 || k > 3) throw std::invalid_argument("compare_scaled expects a, b >= 0 and 0 <= k <= 3");
  if (cube_) return sign(checked_mul(power(a, 3), power(p_, k)), power(b, 3));
  return sign(checked_mul(a, power(p_, k)), checked_mul(b, power(q_, k)));
}

double Threshold::approx() const {
  return cube_ ? std::cbrt(static_cast<double>(p_)) : static_cast<double>(p_) / static_cast<double>(q_);
}

std::string Threshold::to_string() const {
  if (cube_) return "cbrt(" + std::to_string(p_) + ")";
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

Threshold Threshold::parse(const std::string& text) {
  if (text.rfind("cbrt(", 0) == 0 && text.size() > 6 && text.back() == ')')
    return cube_root(parse_int(text.substr(5, text.size() - 6)));
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ratio(parse_int(text));
  return ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace gallai
