#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ck {

using Color = int;

// Set of color ids 0..63 packed in one machine word.
class ColorSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr ColorSet() = default;

  static constexpr ColorSet single(Color c) { return ColorSet(std::uint64_t{1} << c); }
  static constexpr ColorSet from_bits(std::uint64_t bits) { return ColorSet(bits); }

  constexpr bool contains(Color c) const { return (bits_ >> c) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr ColorSet with(Color c) const { return ColorSet(bits_ | (std::uint64_t{1} << c)); }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr bool is_subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ColorSet operator|(ColorSet other) const { return ColorSet(bits_ | other.bits_); }
  constexpr ColorSet& operator|=(ColorSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  constexpr bool operator==(const ColorSet&) const = default;

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace ck
