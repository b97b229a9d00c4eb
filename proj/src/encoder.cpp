#include "horn/encoder.hpp"

#include "horn/error.hpp"

namespace horn {

CnfInstance encode(unsigned n, Variant variant, unsigned cap) {
  if (n > cap || n > kMaxEncodeWidth) {
    throw ResourceError("encoding n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min(cap, kMaxEncodeWidth)));
  }
  CnfInstance out;
  out.n = n;
  out.variant = variant;
  const std::uint64_t points = std::uint64_t{1} << n;
  out.formula.var_count = points;

  if (requires_top(variant)) out.formula.clauses.push_back({predicate_id(BitVector::ones(n))});
  if (requires_bottom(variant, n)) {
    const Literal bottom = predicate_id(BitVector::zeros(n));
    // n = 0: the single vector is both top and bottom.
    if (out.formula.clauses.empty() || out.formula.clauses.front().front() != bottom) {
      out.formula.clauses.push_back({bottom});
    }
  }
  out.unit_count = out.formula.clauses.size();

  for (std::uint64_t r = 0; r < points; ++r) {
    for (std::uint64_t s = r + 1; s < points; ++s) {
      const std::uint64_t u = r & s;
      if (u == r || u == s) continue;
      out.formula.clauses.push_back({-static_cast<Literal>(r + 1), -static_cast<Literal>(s + 1),
                                     static_cast<Literal>(u + 1)});
    }
  }
  return out;
}

int predicate_id(const BitVector& mu) {
  if (mu.width() > 30) throw InputError("predicate ids are limited to width 30");
  return static_cast<int>(mu.value()) + 1;
}

BitVector vector_of(int id, unsigned n) {
  if (n > 30) throw InputError("predicate ids are limited to width 30");
  if (id < 1 || static_cast<std::uint64_t>(id) > (std::uint64_t{1} << n)) {
    throw InputError("predicate id " + std::to_string(id) + " outside [1, 2^" +
                     std::to_string(n) + "]");
  }
  return {n, static_cast<std::uint64_t>(id - 1)};
}

VectorFamily family_of_model(std::span<const bool> model, unsigned n) {
  if (model.size() != (std::size_t{1} << n)) throw InputError("model size is not 2^n");
  std::vector<BitVector> members;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (model[i]) members.emplace_back(n, i);
  }
  return {n, std::move(members)};
}

}  // namespace horn
