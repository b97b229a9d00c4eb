#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horn/variant.hpp"

namespace horn {

inline constexpr unsigned kMaxVectorWidth = 64;

/// A point of {0,1}^n. The value is read with x1 as the most significant
/// bit, so numeric order equals the order of the binary strings.
class BitVector {
 public:
  constexpr BitVector() = default;
  /// Throws InputError if width > 64 or value has bits above width.
  BitVector(unsigned width, std::uint64_t value);

  static BitVector zeros(unsigned width) { return {width, 0}; }
  static BitVector ones(unsigned width);
  /// "0110" -> width 4, x2 and x3 set.
  static BitVector parse(std::string_view bits);

  constexpr unsigned width() const noexcept { return width_; }
  constexpr std::uint64_t value() const noexcept { return value_; }

  /// Truth value of variable index i (0-based, x(i+1)).
  bool test(unsigned var) const;
  BitVector with(unsigned var, bool on) const;
  unsigned popcount() const noexcept;

  std::string str() const;

  friend constexpr auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  unsigned width_ = 0;
  std::uint64_t value_ = 0;
};

/// Coordinatewise AND. Throws InputError on width mismatch.
BitVector meet(const BitVector& r, const BitVector& s);

/// A duplicate-free set of equal-width vectors, iterated in ascending
/// numeric order.
class VectorFamily {
 public:
  explicit VectorFamily(unsigned width) : width_(width) {}
  VectorFamily(unsigned width, std::vector<BitVector> members);
  /// Convenience: members given as binary strings.
  VectorFamily(unsigned width, std::initializer_list<std::string_view> members);

  /// Family whose members are the vectors of value i where bit i of mask is set.
  /// Requires width <= 6.
  static VectorFamily from_mask(unsigned width, std::uint64_t mask);
  /// Every vector of {0,1}^width. Requires width <= 16.
  static VectorFamily full(unsigned width);

  unsigned width() const noexcept { return width_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const BitVector& v) const;

  std::span<const BitVector> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VectorFamily&, const VectorFamily&) = default;
  friend auto operator<=>(const VectorFamily& a, const VectorFamily& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.members_ <=> b.members_;
  }

 private:
  unsigned width_;
  std::vector<BitVector> members_;
};

bool is_meet_closed(const VectorFamily& family);

/// Smallest meet-closed superset.
VectorFamily meet_closure(const VectorFamily& family);

/// Whether `family` is one of the objects counted by `variant`.
bool variant_member(const VectorFamily& family, Variant variant);

/// One vector per line as a fixed-width binary string; '#' starts a comment
/// line, blank lines are ignored, and `-` stands for the width-0 vector.
/// Width is taken from `width` when given, otherwise from the first vector
/// (an empty file then needs `width`).
VectorFamily parse_family(std::string_view text, std::optional<unsigned> width = std::nullopt);
std::string format_family(const VectorFamily& family);

}  // namespace horn
