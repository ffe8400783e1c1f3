#include "burning/bounds.hpp"

#include <stdexcept>

namespace burning {

namespace {

__extension__ typedef unsigned __int128 u128;

u128 floor_sqrt_wide(u128 x) {
  if (x < 2) return x;
  int bits = 0;
  for (u128 y = x; y != 0; y >>= 1) ++bits;
  u128 r = u128{1} << ((bits + 1) / 2);
  for (;;) {
    const u128 y = (r + x / r) / 2;
    if (y >= r) return r;
    r = y;
  }
}

}  // namespace

std::string bastide_decimal(std::uint64_t n, int digits) {
  if (digits < 0 || digits > 12) throw std::invalid_argument("digits must be in 0..12");
  u128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // floor(sqrt(4n/3) * 10^d) = floor(sqrt(floor(4n 10^{2d} / 3)))
  const u128 scaled = floor_sqrt_wide(u128{4} * n * scale * scale / 3) + scale;
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (digits > 0) {
    std::string tail(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
      tail[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    out += "." + tail;
  }
  return out;
}

BoundTable prior_bounds(std::uint64_t n, std::uint64_t n2) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n2 > n) throw std::invalid_argument("n2 cannot exceed n");
  BoundTable t;
  t.n = n;
  t.n2 = n2;
  t.m = m_of(n + n2);
  t.conjecture = ceil_sqrt(n);
  t.main1 = bound_main1(n, n2);
  t.murakami = bound_murakami(n, n2);
  t.bessy = bound_bessy(n, n2);
  t.land_lu = bound_land_lu(n);
  t.bastide_floor = bound_bastide_floor(n);
  t.bastide_approx = bastide_decimal(n);
  t.bonato_2016 = bound_bonato_2016(n);
  t.corollary_main_applies = corollary_main_applies(n, n2);
  return t;
}

}  // namespace burning
