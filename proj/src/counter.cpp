#include "horn/counter.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

namespace horn {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t lit_index(Literal lit) {
  return lit > 0 ? 2 * static_cast<std::size_t>(lit) : 2 * static_cast<std::size_t>(-lit) + 1;
}

int var_of(Literal lit) { return std::abs(lit); }

/// Normalized, immutable clause database shared by all search workers.
struct Formula {
  std::size_t var_count = 0;
  std::vector<Literal> lits;
  std::vector<std::uint32_t> start;               // clause c is lits[start[c], start[c+1])
  std::vector<std::vector<std::uint32_t>> occurs;  // by lit_index
  bool has_empty_clause = false;

  std::size_t clause_count() const { return start.size() - 1; }
  std::uint32_t size(std::uint32_t c) const { return start[c + 1] - start[c]; }
  std::span<const Literal> clause(std::uint32_t c) const {
    return std::span(lits).subspan(start[c], start[c + 1] - start[c]);
  }
};

std::shared_ptr<const Formula> normalize(const Cnf& cnf) {
  auto f = std::make_shared<Formula>();
  f->var_count = cnf.var_count;
  f->start.push_back(0);
  f->occurs.resize(2 * (cnf.var_count + 1));
  Clause scratch;
  for (const auto& clause : cnf.clauses) {
    scratch = clause;
    for (Literal lit : scratch) {
      if (lit == 0 || static_cast<std::size_t>(var_of(lit)) > cnf.var_count) {
        throw InputError("literal " + std::to_string(lit) + " outside 1.." +
                         std::to_string(cnf.var_count));
      }
    }
    std::sort(scratch.begin(), scratch.end(),
              [](Literal a, Literal b) { return lit_index(a) < lit_index(b); });
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    bool tautology = false;
    for (std::size_t i = 1; i < scratch.size(); ++i) {
      if (scratch[i] == -scratch[i - 1]) tautology = true;
    }
    if (tautology) continue;
    if (scratch.empty()) f->has_empty_clause = true;
    const auto id = static_cast<std::uint32_t>(f->start.size() - 1);
    for (Literal lit : scratch) {
      f->lits.push_back(lit);
      f->occurs[lit_index(lit)].push_back(id);
    }
    f->start.push_back(static_cast<std::uint32_t>(f->lits.size()));
  }
  return f;
}

class Deadline {
 public:
  explicit Deadline(const std::optional<std::chrono::duration<double>>& budget) {
    if (budget) {
      at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*budget);
    }
  }
  bool expired() const { return at_ && Clock::now() > *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
    for (std::uint64_t w : key) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

struct Component {
  std::vector<std::uint32_t> vars;     // ascending
  std::vector<std::uint32_t> clauses;  // ascending
};

/// One DPLL search over a shared formula. Owns all mutable state.
class Search {
 public:
  Search(std::shared_ptr<const Formula> formula, const CounterOptions& options,
         const Deadline& deadline)
      : f_(std::move(formula)),
        options_(options),
        deadline_(deadline),
        value_(f_->var_count + 1, 0),
        sat_(f_->clause_count(), 0),
        false_(f_->clause_count(), 0),
        score_(f_->var_count + 1, 0),
        open_(f_->clause_count()),
        unassigned_(f_->var_count) {
    for (std::uint32_t c = 0; c < f_->clause_count(); ++c) {
      for (Literal lit : f_->clause(c)) ++score_[var_of(lit)];
      if (f_->size(c) <= 1) pending_.push_back(c);
    }
    for (std::size_t k = 0; k <= f_->var_count; ++k) pow2_.push_back(pow2(static_cast<unsigned>(k)));
  }

  /// Unit-propagates the formula's own units. False on conflict.
  bool init() { return !f_->has_empty_clause && propagate(); }

  /// Fixes `lit` and propagates. False on conflict.
  bool assume(Literal lit) { return enqueue(lit) && propagate(); }

  Count count() {
    if (!options_.components) return count_plain();
    std::vector<std::uint32_t> vars;
    std::vector<std::uint32_t> clauses;
    for (std::uint32_t v = 1; v <= f_->var_count; ++v) {
      if (value_[v] == 0) vars.push_back(v);
    }
    for (std::uint32_t c = 0; c < f_->clause_count(); ++c) {
      if (sat_[c] == 0) clauses.push_back(c);
    }
    return count_split(vars, clauses);
  }

  /// Unassigned variables occurring in open clauses, by descending score.
  std::vector<std::uint32_t> ranked_open_vars() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 1; v <= f_->var_count; ++v) {
      if (value_[v] == 0 && score_[v] > 0) out.push_back(v);
    }
    std::stable_sort(out.begin(), out.end(),
                     [this](std::uint32_t a, std::uint32_t b) { return score_[a] > score_[b]; });
    return out;
  }

  const CounterStats& stats() const { return stats_; }

 private:
  bool enqueue(Literal lit) {
    const int v = var_of(lit);
    const std::int8_t want = lit > 0 ? 1 : -1;
    if (value_[v] != 0) {
      if (value_[v] != want) conflict_ = true;
      return !conflict_;
    }
    value_[v] = want;
    trail_.push_back(lit);
    --unassigned_;
    ++stats_.propagations;
    for (std::uint32_t c : f_->occurs[lit_index(lit)]) {
      if (sat_[c]++ == 0) {
        --open_;
        for (Literal other : f_->clause(c)) --score_[var_of(other)];
      }
    }
    for (std::uint32_t c : f_->occurs[lit_index(-lit)]) {
      const std::uint32_t falsified = ++false_[c];
      if (sat_[c] != 0) continue;
      if (falsified == f_->size(c)) {
        conflict_ = true;
      } else if (falsified + 1 == f_->size(c)) {
        pending_.push_back(c);
      }
    }
    return !conflict_;
  }

  bool propagate() {
    while (!conflict_ && !pending_.empty()) {
      const std::uint32_t c = pending_.back();
      pending_.pop_back();
      if (sat_[c] != 0) continue;
      if (false_[c] == f_->size(c)) {
        conflict_ = true;
        break;
      }
      for (Literal lit : f_->clause(c)) {
        if (value_[var_of(lit)] == 0) {
          enqueue(lit);
          break;
        }
      }
    }
    pending_.clear();
    if (conflict_) ++stats_.conflicts;
    return !conflict_;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Literal lit = trail_.back();
      trail_.pop_back();
      for (std::uint32_t c : f_->occurs[lit_index(lit)]) {
        if (--sat_[c] == 0) {
          ++open_;
          for (Literal other : f_->clause(c)) ++score_[var_of(other)];
        }
      }
      for (std::uint32_t c : f_->occurs[lit_index(-lit)]) --false_[c];
      value_[var_of(lit)] = 0;
      ++unassigned_;
    }
    conflict_ = false;
    pending_.clear();
  }

  void tick() {
    ++stats_.decisions;
    if ((stats_.decisions & 0x3ff) == 0 && deadline_.expired()) {
      throw BudgetExceeded("model counting exceeded its time budget", stats_);
    }
  }

  template <typename Range>
  std::uint32_t pick(const Range& candidates) const {
    std::uint32_t best = 0;
    for (std::uint32_t v : candidates) {
      if (value_[v] != 0 || score_[v] == 0) continue;
      switch (options_.branching) {
        case Branching::MostFrequent:
          if (best == 0 || score_[v] > score_[best]) best = v;
          break;
        case Branching::LowestId:
          if (best == 0) best = v;
          break;
        case Branching::HighestId:
          best = v;
          break;
      }
    }
    return best;
  }

  struct AllVars {
    std::uint32_t last;
    struct It {
      std::uint32_t v;
      std::uint32_t operator*() const { return v; }
      It& operator++() {
        ++v;
        return *this;
      }
      bool operator!=(const It& o) const { return v != o.v; }
    };
    It begin() const { return {1}; }
    It end() const { return {last + 1}; }
  };

  Count count_plain() {
    if (open_ == 0) return pow2_[unassigned_];
    const std::uint32_t v = pick(AllVars{static_cast<std::uint32_t>(f_->var_count)});
    Count total = 0;
    for (Literal lit : {-static_cast<Literal>(v), static_cast<Literal>(v)}) {
      tick();
      const std::size_t mark = trail_.size();
      if (assume(lit)) total += count_plain();
      undo(mark);
    }
    return total;
  }

  /// Counts the assignments of `vars` (all unassigned) that satisfy the open
  /// clauses among `clauses`, splitting into components first.
  Count count_split(const std::vector<std::uint32_t>& vars,
                    const std::vector<std::uint32_t>& clauses) {
    std::vector<Component> parts = split(clauses);
    std::size_t covered = 0;
    for (const auto& p : parts) covered += p.vars.size();
    std::size_t free = 0;
    for (std::uint32_t v : vars) free += value_[v] == 0 ? 1 : 0;
    Count product = pow2_[free - covered];
    for (auto& p : parts) {
      product *= count_component(p);
      if (product == 0) break;
    }
    return product;
  }

  Count count_component(const Component& comp) {
    ++stats_.components;
    std::vector<std::uint64_t> key;
    if (options_.cache) {
      key = cache_key(comp);
      if (auto it = cache_.find(key); it != cache_.end()) {
        ++stats_.cache_hits;
        return it->second;
      }
    }
    const std::uint32_t v = pick(comp.vars);
    Count total = 0;
    for (Literal lit : {-static_cast<Literal>(v), static_cast<Literal>(v)}) {
      tick();
      const std::size_t mark = trail_.size();
      if (assume(lit)) total += count_split(comp.vars, comp.clauses);
      undo(mark);
    }
    if (options_.cache) {
      cache_bytes_ += key.size() * sizeof(std::uint64_t) + 96;
      if (cache_bytes_ > options_.cache_bytes) {
        cache_.clear();
        cache_bytes_ = 0;
      }
      cache_.emplace(std::move(key), total);
    }
    return total;
  }

  /// Connected components of the open clauses in `clauses` over their
  /// unassigned variables.
  std::vector<Component> split(const std::vector<std::uint32_t>& clauses) {
    if (parent_.size() != f_->var_count + 1) {
      parent_.assign(f_->var_count + 1, 0);
      slot_.assign(f_->var_count + 1, 0);
    }
    const auto find = [this](std::uint32_t v) {
      while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
      return v;
    };
    std::vector<std::uint32_t> open;
    std::vector<std::uint32_t> touched;
    for (std::uint32_t c : clauses) {
      if (sat_[c] != 0) continue;
      open.push_back(c);
      std::uint32_t root = 0;
      for (Literal lit : f_->clause(c)) {
        const auto v = static_cast<std::uint32_t>(var_of(lit));
        if (value_[v] != 0) continue;
        if (slot_[v] == 0) {
          slot_[v] = 1;
          parent_[v] = v;
          touched.push_back(v);
        }
        const std::uint32_t r = find(v);
        if (root == 0) {
          root = r;
        } else if (r != root) {
          parent_[r] = root;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<Component> parts;
    // slot_ holds 1 + component index for each root after this pass.
    for (std::uint32_t v : touched) slot_[v] = 0;
    for (std::uint32_t v : touched) {
      const std::uint32_t r = find(v);
      if (slot_[r] == 0) {
        parts.emplace_back();
        slot_[r] = static_cast<std::uint32_t>(parts.size());
      }
      parts[slot_[r] - 1].vars.push_back(v);
    }
    for (std::uint32_t c : open) {
      for (Literal lit : f_->clause(c)) {
        const auto v = static_cast<std::uint32_t>(var_of(lit));
        if (value_[v] == 0) {
          parts[slot_[find(v)] - 1].clauses.push_back(c);
          break;
        }
      }
    }
    for (std::uint32_t v : touched) slot_[v] = 0;
    return parts;
  }

  /// Identifies the residual sub-formula: its variables plus the ids of its
  /// open clauses (an open clause's assigned literals are all false). Dense
  /// bitsets or sparse lists are chosen deterministically by size.
  std::vector<std::uint64_t> cache_key(const Component& comp) const {
    std::vector<std::uint64_t> key;
    const std::size_t var_words = (f_->var_count + 64) / 64;
    const std::size_t clause_words = (f_->clause_count() + 63) / 64;
    const std::size_t sparse = (comp.vars.size() + comp.clauses.size() + 1) / 2 + 1;
    if (sparse < var_words + clause_words) {
      key.reserve(sparse + 1);
      key.push_back(0);
      std::vector<std::uint32_t> ids(comp.vars);
      ids.push_back(0);  // variable ids are >= 1, so 0 separates the lists
      ids.insert(ids.end(), comp.clauses.begin(), comp.clauses.end());
      if (ids.size() % 2 != 0) ids.push_back(0xffffffffU);
      for (std::size_t i = 0; i < ids.size(); i += 2) {
        key.push_back((std::uint64_t{ids[i]} << 32) | ids[i + 1]);
      }
    } else {
      key.assign(1 + var_words + clause_words, 0);
      key[0] = 1;
      for (std::uint32_t v : comp.vars) key[1 + v / 64] |= std::uint64_t{1} << (v % 64);
      for (std::uint32_t c : comp.clauses) {
        key[1 + var_words + c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    return key;
  }

  std::shared_ptr<const Formula> f_;
  const CounterOptions& options_;
  const Deadline& deadline_;

  std::vector<std::int8_t> value_;
  std::vector<std::uint32_t> sat_;
  std::vector<std::uint32_t> false_;
  std::vector<std::uint32_t> score_;
  std::size_t open_;
  std::size_t unassigned_;
  std::vector<Literal> trail_;
  std::vector<std::uint32_t> pending_;
  bool conflict_ = false;
  std::vector<Count> pow2_;

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> slot_;
  std::unordered_map<std::vector<std::uint64_t>, Count, KeyHash> cache_;
  std::size_t cache_bytes_ = 0;

  CounterStats stats_;
};

CountResult count_with_cubes(const std::shared_ptr<const Formula>& formula,
                             const CounterOptions& options, const Deadline& deadline) {
  Search root(formula, options, deadline);
  if (!root.init()) return {0, root.stats()};
  const auto ranked = root.ranked_open_vars();
  // A few cubes per thread so uneven cubes still balance.
  const unsigned depth = std::min<std::size_t>(
      ranked.size(), static_cast<unsigned>(std::bit_width(options.threads)) + 2);
  const std::vector<std::uint32_t> split_vars(ranked.begin(), ranked.begin() + depth);
  const std::uint64_t cube_count = std::uint64_t{1} << depth;

  std::atomic<std::uint64_t> next{0};
  std::mutex mutex;
  Count total = 0;
  CounterStats stats = root.stats();
  std::exception_ptr failure;

  const auto worker = [&] {
    CounterStats local_stats;
    Count local = 0;
    try {
      for (std::uint64_t cube = next++; cube < cube_count; cube = next++) {
        Search s(formula, options, deadline);
        bool ok = s.init();
        for (std::size_t i = 0; ok && i < split_vars.size(); ++i) {
          const auto v = static_cast<Literal>(split_vars[i]);
          ok = s.assume(((cube >> i) & 1U) != 0 ? v : -v);
        }
        if (ok) local += s.count();
        local_stats += s.stats();
      }
    } catch (const BudgetExceeded& e) {
      local_stats += e.stats();
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard lock(mutex);
    total += local;
    stats += local_stats;
  };

  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  pool.clear();

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(e.what(), stats);
    }
  }
  return {std::move(total), stats};
}

}  // namespace

CountResult count_models_with_stats(const Cnf& formula, const CounterOptions& options) {
  const auto normalized = normalize(formula);
  const Deadline deadline(options.budget);
  if (normalized->has_empty_clause) return {0, {}};
  if (options.threads > 1) return count_with_cubes(normalized, options, deadline);
  Search search(normalized, options, deadline);
  if (!search.init()) return {0, search.stats()};
  Count count = search.count();
  return {std::move(count), search.stats()};
}

}  // namespace horn
