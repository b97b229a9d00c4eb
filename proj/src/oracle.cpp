#include "horn/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "horn/error.hpp"

namespace horn {

namespace {

void check_cap(unsigned n) {
  if (n > kOracleCap) {
    throw ResourceError("exhaustive family enumeration is limited to n <= " +
                        std::to_string(kOracleCap) + " (got " + std::to_string(n) + ")");
  }
}

std::uint64_t subset_count(unsigned n) { return std::uint64_t{1} << (std::uint64_t{1} << n); }

}  // namespace

Count brute_count(unsigned n, Variant variant, unsigned threads) {
  check_cap(n);
  const std::uint64_t total = subset_count(n);
  threads = std::max(1U, threads);
  std::vector<std::uint64_t> tallies(threads, 0);
  const auto work = [&](unsigned t) {
    const std::uint64_t lo = total * t / threads;
    const std::uint64_t hi = total * (t + 1) / threads;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (variant_member(VectorFamily::from_mask(n, mask), variant)) ++tallies[t];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return std::accumulate(tallies.begin(), tallies.end(), std::uint64_t{0});
}

void for_each_family(unsigned n, Variant variant,
                     const std::function<void(const VectorFamily&)>& visit) {
  check_cap(n);
  const std::uint64_t total = subset_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto family = VectorFamily::from_mask(n, mask);
    if (variant_member(family, variant)) visit(family);
  }
}

std::vector<VectorFamily> enumerate_families(unsigned n, Variant variant) {
  std::vector<VectorFamily> out;
  for_each_family(n, variant, [&out](const VectorFamily& f) { out.push_back(f); });
  return out;
}

VectorFamily permute(const VectorFamily& family, const std::vector<unsigned>& perm) {
  const unsigned n = family.width();
  if (perm.size() != n) throw InputError("permutation size does not match family width");
  std::vector<BitVector> members;
  members.reserve(family.size());
  for (const auto& v : family) {
    BitVector image = BitVector::zeros(n);
    for (unsigned i = 0; i < n; ++i) {
      if (v.test(i)) image = image.with(perm[i], true);
    }
    members.push_back(image);
  }
  return {n, std::move(members)};
}

VectorFamily canonical_under_permutation(const VectorFamily& family) {
  std::vector<unsigned> perm(family.width());
  std::iota(perm.begin(), perm.end(), 0U);
  VectorFamily best = family;
  do {
    VectorFamily image = permute(family, perm);
    if (std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end())) {
      best = std::move(image);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

OrbitSummary orbit_summary(unsigned n, Variant variant) {
  std::map<VectorFamily, std::size_t> orbits;
  OrbitSummary out;
  for_each_family(n, variant, [&](const VectorFamily& f) {
    ++orbits[canonical_under_permutation(f)];
    ++out.labeled;
  });
  out.orbits = orbits.size();
  for (const auto& [form, size] : orbits) ++out.size_histogram[size];
  return out;
}

}  // namespace horn
