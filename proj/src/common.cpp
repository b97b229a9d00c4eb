#include <algorithm>

#include "horn/count.hpp"
#include "horn/variant.hpp"

namespace horn {

std::string with_separators(const Count& c) {
  std::string digits = c.str();
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.erase(0, 1);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return negative ? "-" + out : out;
}

std::optional<Variant> parse_variant(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Variant v : kAllVariants) {
    if (lower == variant_name(v)) return v;
  }
  return std::nullopt;
}

}  // namespace horn
