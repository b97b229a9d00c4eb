#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace horn {

/// The four counting problems. H admits neither `m = 1` nor `m = 0`
/// equations, H0 admits `m = 0`, H1 admits `m = 1`, H01 admits both.
/// On the family side: H01 is every meet-closed family, H1 additionally
/// contains the all-ones vector, H0 the all-zeros vector, H both.
enum class Variant { H, H0, H1, H01 };

inline constexpr std::array<Variant, 4> kAllVariants = {Variant::H, Variant::H0, Variant::H1,
                                                        Variant::H01};

/// Families must contain the all-ones vector.
constexpr bool requires_top(Variant v) { return v == Variant::H || v == Variant::H1; }

/// Families must contain the all-zeros vector. H0 is H with the all-ones
/// vector made optional, so at n = 0, where the two vectors coincide, H0
/// requires nothing (the empty family of `1 = 0` counts, H0(0) = 2).
constexpr bool requires_bottom(Variant v, unsigned n) {
  return v == Variant::H || (v == Variant::H0 && n > 0);
}

/// CLI spelling: h, h0, h1, h01.
constexpr std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::H: return "h";
    case Variant::H0: return "h0";
    case Variant::H1: return "h1";
    case Variant::H01: return "h01";
  }
  return "?";
}

/// Display spelling: H, H0, H1, H01.
constexpr std::string_view variant_label(Variant v) {
  switch (v) {
    case Variant::H: return "H";
    case Variant::H0: return "H0";
    case Variant::H1: return "H1";
    case Variant::H01: return "H01";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text);

}  // namespace horn
