#pragma once

#include <span>
#include <vector>

#include "horn/count.hpp"

namespace horn {

/// Exact C(n, k). Throws InputError unless 0 <= k <= n.
Count binomial(int n, int k);

/// H0 from H, or H01 from H1: each family of the smaller variant pairs with
/// the choice of whether the all-ones (resp. all-zeros) endpoint is free.
Count doubling(const Count& h);

/// sum_k C(n, k) * base[k] with n = base.size() - 1. Gives H1(n) from
/// H(0..n) and H01(n) from H0(0..n). Throws InputError on an empty base.
Count binomial_sum(std::span<const Count> base);

struct AsymptoticRow {
  unsigned n = 0;
  Count count;
  double log2_count = 0.0;
  Count central_binomial;  ///< C(n, floor(n/2))
  double ratio = 0.0;      ///< log2_count / central_binomial
};

/// log2(count) / C(n, floor(n/2)) for each n, where counts[n] is the count at
/// n. Diagnostic only. Throws InputError for a zero count.
std::vector<AsymptoticRow> asymptotic_report(std::span<const Count> counts);

/// Base-2 logarithm of a positive count, accurate to double precision.
double log2_of(const Count& c);

}  // namespace horn
