#include "horn/families.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "horn/error.hpp"

namespace horn {

namespace {

std::uint64_t width_mask(unsigned width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

BitVector::BitVector(unsigned width, std::uint64_t value) : width_(width), value_(value) {
  if (width > kMaxVectorWidth) {
    throw InputError("vector width " + std::to_string(width) + " exceeds 64");
  }
  if ((value & ~width_mask(width)) != 0) {
    throw InputError("vector value has bits beyond width " + std::to_string(width));
  }
}

BitVector BitVector::ones(unsigned width) { return {width, width_mask(width)}; }

BitVector BitVector::parse(std::string_view bits) {
  if (bits.size() > kMaxVectorWidth) throw InputError("vector wider than 64 bits");
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InputError("invalid character '" + std::string(1, c) + "' in bit vector");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return {static_cast<unsigned>(bits.size()), value};
}

bool BitVector::test(unsigned var) const {
  if (var >= width_) throw InputError("variable index out of range");
  return ((value_ >> (width_ - 1 - var)) & 1U) != 0;
}

BitVector BitVector::with(unsigned var, bool on) const {
  if (var >= width_) throw InputError("variable index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - var);
  return {width_, on ? (value_ | bit) : (value_ & ~bit)};
}

unsigned BitVector::popcount() const noexcept {
  return static_cast<unsigned>(std::popcount(value_));
}

std::string BitVector::str() const {
  std::string out(width_, '0');
  for (unsigned i = 0; i < width_; ++i) {
    if (((value_ >> (width_ - 1 - i)) & 1U) != 0) out[i] = '1';
  }
  return out;
}

BitVector meet(const BitVector& r, const BitVector& s) {
  if (r.width() != s.width()) {
    throw InputError("meet of vectors with widths " + std::to_string(r.width()) + " and " +
                     std::to_string(s.width()));
  }
  return {r.width(), r.value() & s.value()};
}

VectorFamily::VectorFamily(unsigned width, std::vector<BitVector> members)
    : width_(width), members_(std::move(members)) {
  if (width > kMaxVectorWidth) throw InputError("family width exceeds 64");
  for (const auto& m : members_) {
    if (m.width() != width) {
      throw InputError("member " + m.str() + " does not have width " + std::to_string(width));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VectorFamily::VectorFamily(unsigned width, std::initializer_list<std::string_view> members)
    : VectorFamily(width, [&] {
        std::vector<BitVector> v;
        v.reserve(members.size());
        for (auto m : members) v.push_back(BitVector::parse(m));
        return v;
      }()) {}

VectorFamily VectorFamily::from_mask(unsigned width, std::uint64_t mask) {
  if (width > 6) throw InputError("mask families are limited to width 6");
  const std::uint64_t points = std::uint64_t{1} << width;
  if (points < 64 && (mask >> points) != 0) throw InputError("mask has bits beyond 2^width");
  std::vector<BitVector> members;
  for (std::uint64_t v = 0; v < points; ++v) {
    if (((mask >> v) & 1U) != 0) members.emplace_back(width, v);
  }
  return {width, std::move(members)};
}

VectorFamily VectorFamily::full(unsigned width) {
  if (width > 16) throw ResourceError("full family limited to width 16");
  std::vector<BitVector> members;
  const std::uint64_t points = std::uint64_t{1} << width;
  members.reserve(points);
  for (std::uint64_t v = 0; v < points; ++v) members.emplace_back(width, v);
  return {width, std::move(members)};
}

bool VectorFamily::contains(const BitVector& v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool is_meet_closed(const VectorFamily& family) {
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(meet(members[i], members[j]))) return false;
    }
  }
  return true;
}

VectorFamily meet_closure(const VectorFamily& family) {
  std::set<BitVector> closed(family.begin(), family.end());
  std::vector<BitVector> pending(family.begin(), family.end());
  while (!pending.empty()) {
    const BitVector v = pending.back();
    pending.pop_back();
    std::vector<BitVector> fresh;
    for (const auto& w : closed) {
      BitVector u = meet(v, w);
      if (!closed.contains(u)) fresh.push_back(u);
    }
    for (const auto& u : fresh) {
      if (closed.insert(u).second) pending.push_back(u);
    }
  }
  return {family.width(), std::vector<BitVector>(closed.begin(), closed.end())};
}

bool variant_member(const VectorFamily& family, Variant variant) {
  if (requires_top(variant) && !family.contains(BitVector::ones(family.width()))) return false;
  if (requires_bottom(variant, family.width()) && !family.contains(BitVector::zeros(family.width()))) return false;
  return is_meet_closed(family);
}

VectorFamily parse_family(std::string_view text, std::optional<unsigned> width) {
  std::vector<BitVector> members;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string_view token(line.data() + first, last - first + 1);
    BitVector v;
    try {
      v = token == "-" ? BitVector::zeros(0) : BitVector::parse(token);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!width) width = v.width();
    if (v.width() != *width) {
      throw InputError("line " + std::to_string(line_no) + ": expected width " +
                       std::to_string(*width) + ", got " + std::to_string(v.width()));
    }
    members.push_back(v);
  }
  if (!width) throw InputError("empty family file: width must be given explicitly");
  return {*width, std::move(members)};
}

std::string format_family(const VectorFamily& family) {
  std::string out;
  for (const auto& v : family) {
    out += family.width() == 0 ? std::string("-") : v.str();
    out += '\n';
  }
  return out;
}

}  // namespace horn
