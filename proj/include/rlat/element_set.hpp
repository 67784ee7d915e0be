#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rlat {

/// Index of an element in the universe 0..size-1.
using Elem = std::uint8_t;

/// Hard limit on the universe size; element sets are single 64-bit words.
inline constexpr std::size_t kMaxSize = 64;

/// Subset of a finite universe with bitset semantics.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Elem> elems) {
    for (Elem e : elems) insert(e);
  }

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(Elem e) { return ElementSet(std::uint64_t{1} << e); }

  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Smallest member; undefined on the empty set.
  constexpr Elem first() const { return static_cast<Elem>(std::countr_zero(bits_)); }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Elem>(std::countr_zero(b)));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<Elem>(std::countr_zero(b)));
    }
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Report ordering: by cardinality, then by sorted member list lexicographically.
bool report_order_less(ElementSet a, ElementSet b);

}  // namespace rlat
