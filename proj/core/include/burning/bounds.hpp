#pragma once

#include <bit>
#include <cstdint>
#include <string>

// Closed-form burning-number bounds evaluated in exact integer arithmetic.
// Every ceiling of a square-root expression is rewritten as the least integer
// satisfying a squared inequality, so no value depends on floating-point
// rounding.

namespace burning {

// floor(sqrt(x)) by Newton iteration from an overestimate.
constexpr std::uint64_t floor_sqrt(std::uint64_t x) noexcept {
  if (x < 2) return x;
  std::uint64_t r = std::uint64_t{1} << ((std::bit_width(x) + 1) / 2);
  for (;;) {
    const std::uint64_t y = (r + x / r) / 2;
    if (y >= r) return r;
    r = y;
  }
}

// min{k >= 0 : k*k >= x}
constexpr std::uint64_t ceil_sqrt(std::uint64_t x) noexcept {
  const std::uint64_t r = floor_sqrt(x);
  return r * r < x ? r + 1 : r;
}

// ceil(sqrt(N + 1/4) - 3/2) = min{k >= 0 : (2k+3)^2 >= 4N+1}, N >= 1.
constexpr std::uint64_t m_of(std::uint64_t total) noexcept {
  const std::uint64_t c = ceil_sqrt(4 * total + 1);
  return c <= 3 ? 0 : (c - 2) / 2;
}

// ceil(sqrt(n + n2 - m_of(n + n2)))
constexpr std::uint64_t bound_main1(std::uint64_t n, std::uint64_t n2) noexcept {
  const std::uint64_t total = n + n2;
  return ceil_sqrt(total - m_of(total));
}

// ceil(sqrt(n + n2))
constexpr std::uint64_t bound_murakami(std::uint64_t n, std::uint64_t n2) noexcept {
  return ceil_sqrt(n + n2);
}

// ceil(sqrt(n + n2 + 1/4) + 1/2) = min{k >= 1 : (2k-1)^2 >= 4(n+n2)+1}
constexpr std::uint64_t bound_bessy(std::uint64_t n, std::uint64_t n2) noexcept {
  const std::uint64_t c = ceil_sqrt(4 * (n + n2) + 1);
  return (c + 2) / 2;
}

// ceil((-3 + sqrt(24n + 33)) / 4) = min{k >= 0 : (4k+3)^2 >= 24n+33}
constexpr std::uint64_t bound_land_lu(std::uint64_t n) noexcept {
  const std::uint64_t c = ceil_sqrt(24 * n + 33);
  return c <= 3 ? 0 : c / 4;
}

// floor(sqrt(4n/3) + 1) = max{k : 3k^2 <= 4n} + 1
constexpr std::uint64_t bound_bastide_floor(std::uint64_t n) noexcept {
  return floor_sqrt(4 * n / 3) + 1;
}

// 2 ceil(sqrt(n)) - 1
constexpr std::uint64_t bound_bonato_2016(std::uint64_t n) noexcept {
  return 2 * ceil_sqrt(n) - 1;
}

// n2 <= floor(sqrt(n - 1)); for n = 1 only n2 = 0 qualifies.
constexpr bool corollary_main_applies(std::uint64_t n, std::uint64_t n2) noexcept {
  if (n <= 1) return n2 == 0;
  return n2 <= floor_sqrt(n - 1);
}

// sqrt(4n/3) + 1 truncated to `digits` decimals, e.g. "9.164965".
std::string bastide_decimal(std::uint64_t n, int digits = 6);

struct BoundTable {
  std::uint64_t n = 0;
  std::uint64_t n2 = 0;
  std::uint64_t m = 0;
  std::uint64_t conjecture = 0;
  std::uint64_t main1 = 0;
  std::uint64_t murakami = 0;
  std::uint64_t bessy = 0;
  std::uint64_t land_lu = 0;
  std::uint64_t bastide_floor = 0;
  std::string bastide_approx;
  std::uint64_t bonato_2016 = 0;
  bool corollary_main_applies = false;

  friend bool operator==(const BoundTable&, const BoundTable&) = default;
};

// Requires n >= 1 and n2 <= n; throws std::invalid_argument otherwise.
BoundTable prior_bounds(std::uint64_t n, std::uint64_t n2);

}  // namespace burning
