#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cwsphere {

/// Hard cap on the ground set [n]: bitmask width and the 2^n enumeration budget.
inline constexpr int kMaxGroundSet = 20;

/// A subset of the ground set [n] = {1, ..., n}, stored as a bitmask.
/// Element i occupies bit i-1.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elements);
  static Subset of(const std::vector<int>& elements);
  static constexpr Subset full(int n) { return Subset(n >= 32 ? ~0u : ((1u << n) - 1u)); }
  static constexpr Subset singleton(int i) { return Subset(1u << (i - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(Subset other) const { return subset_of(other) && bits_ != other.bits_; }

  constexpr Subset with(int i) const { return Subset(bits_ | (1u << (i - 1))); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(1u << (i - 1))); }

  /// Smallest element, or 0 when empty.
  constexpr int first() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

  std::vector<int> elements() const;

  /// "{1,3}" style label; the empty set is "{}".
  std::string to_string() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  /// Canonical order, so ordered containers of subsets are deterministic.
  friend constexpr bool operator<(Subset a, Subset b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits_ < b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Canonical order: cardinality first, then numeric bitmask value.
struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

/// Iterate the elements of a subset in increasing order.
template <typename Fn>
constexpr void for_each_element(Subset s, Fn&& fn) {
  for (std::uint32_t b = s.bits(); b; b &= b - 1) fn(std::countr_zero(b) + 1);
}

/// Pack the bits of `value` selected by `mask` into the low bits (software pext).
constexpr std::uint32_t compress_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = mask; m; m &= m - 1, ++k) {
    if (value & (m & -m)) out |= 1u << k;
  }
  return out;
}

/// Inverse of compress_bits: scatter the low |mask| bits of `packed` onto `mask`.
constexpr std::uint32_t expand_bits(std::uint32_t packed, std::uint32_t mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t m = mask; m; m &= m - 1, ++k) {
    if ((packed >> k) & 1u) out |= (m & -m);
  }
  return out;
}

}  // namespace cwsphere

template <>
struct std::hash<cwsphere::Subset> {
  std::size_t operator()(cwsphere::Subset s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};
