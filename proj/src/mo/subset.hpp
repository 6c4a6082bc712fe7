#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace mo {

// Subset of a poset's ground set as a 64-bit mask. Ground sets are capped at
// 64 elements, so every subset is one machine word.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr void add(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(Subset o) const { return subset_of(o) && bits_ != o.bits_; }

  // Lowest element, only valid when nonempty.
  constexpr int first() const { return std::countr_zero(bits_); }

  template <typename F>
  void for_each(F f) const {
    for (std::uint64_t b = bits_; b;) {
      int i = std::countr_zero(b);
      b &= b - 1;
      f(i);
    }
  }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace mo
