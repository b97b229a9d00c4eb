#include "horn/identities.hpp"

#include <cmath>

#include "horn/error.hpp"

namespace horn {

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InputError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                     ") outside 0 <= k <= n");
  }
  k = std::min(k, n - k);
  Count c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

Count doubling(const Count& h) {
  if (h < 0) throw InputError("counts are nonnegative");
  return 2 * h;
}

Count binomial_sum(std::span<const Count> base) {
  if (base.empty()) throw InputError("binomial sum needs at least the k = 0 term");
  const int n = static_cast<int>(base.size()) - 1;
  Count sum = 0;
  for (int k = 0; k <= n; ++k) sum += binomial(n, k) * base[static_cast<std::size_t>(k)];
  return sum;
}

double log2_of(const Count& c) {
  if (c <= 0) throw InputError("log2 of a nonpositive count");
  const auto msb = static_cast<long>(boost::multiprecision::msb(c));
  if (msb < 53) return std::log2(c.convert_to<double>());
  const Count top = c >> static_cast<unsigned>(msb - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(msb - 52);
}

std::vector<AsymptoticRow> asymptotic_report(std::span<const Count> counts) {
  std::vector<AsymptoticRow> rows;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    AsymptoticRow row;
    row.n = static_cast<unsigned>(n);
    row.count = counts[n];
    row.log2_count = log2_of(counts[n]);
    row.central_binomial = binomial(static_cast<int>(n), static_cast<int>(n / 2));
    row.ratio = row.log2_count / row.central_binomial.convert_to<double>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace horn
