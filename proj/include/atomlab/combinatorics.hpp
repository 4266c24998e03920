#pragma once

#include <cstdint>
#include <stdexcept>

namespace atomlab {

// C(n, k) for n <= 62 (largest n whose full row fits in 64 bits).
constexpr std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 62) throw std::invalid_argument("binomial: n > 62");
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// n! for n <= 20.
constexpr std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: n outside 0..20");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// n^n without overflow; 16^16 still fits comfortably in 128 bits.
constexpr unsigned __int128 self_power(int n) {
  unsigned __int128 r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<unsigned>(n);
  return r;
}

// Visits every k-element subset of an n-bit universe as a bit word, ascending.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(static_cast<std::uint32_t>(0));
    return;
  }
  std::uint32_t limit = 1u << n;
  std::uint32_t v = (1u << k) - 1;
  while (v < limit) {
    fn(v);
    std::uint32_t t = v | (v - 1);  // Gosper's hack
    std::uint32_t next = (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctz(v) + 1));
    if (next <= v) break;
    v = next;
  }
}

}  // namespace atomlab
