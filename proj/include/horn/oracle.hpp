#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "horn/count.hpp"
#include "horn/families.hpp"
#include "horn/variant.hpp"

namespace horn {

/// Exhaustive enumeration visits all 2^(2^n) families; n = 4 is 65,536.
inline constexpr unsigned kOracleCap = 4;

/// Number of families F of {0,1}^n with variant_member(F, variant), by
/// testing every subset. Throws ResourceError for n > kOracleCap.
Count brute_count(unsigned n, Variant variant, unsigned threads = 1);

/// Calls `visit` for each family counted by brute_count, in ascending
/// subset-mask order (bit i of the mask = the vector of value i).
void for_each_family(unsigned n, Variant variant,
                     const std::function<void(const VectorFamily&)>& visit);
std::vector<VectorFamily> enumerate_families(unsigned n, Variant variant);

/// Image of `family` under a permutation of variable positions: variable i
/// of every member moves to position perm[i].
VectorFamily permute(const VectorFamily& family, const std::vector<unsigned>& perm);

/// Lexicographically least sorted member list over all n! permutations.
VectorFamily canonical_under_permutation(const VectorFamily& family);

struct OrbitSummary {
  std::size_t labeled = 0;
  std::size_t orbits = 0;
  /// orbit size -> number of orbits of that size
  std::map<std::size_t, std::size_t> size_histogram;
};

/// Orbits of the variant's families under variable permutations, found by
/// deduplicating canonical forms.
OrbitSummary orbit_summary(unsigned n, Variant variant);
inline std::size_t nonisomorphic_count(unsigned n, Variant variant) {
  return orbit_summary(n, variant).orbits;
}

}  // namespace horn
