#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "substrime/arith.hpp"
#include "substrime/digits.hpp"
#include "substrime/value.hpp"

namespace substrime {

enum class SearchMode {
  kOmegaBounded,  // every subword w must have omega(w) <= max_omega
  kStrictPrime,   // every subword must be prime (substrimes)
};

struct SearchConfig {
  unsigned base = 10;
  SearchMode mode = SearchMode::kOmegaBounded;
  OmegaBound max_omega = OmegaBound::finite(1);
  unsigned max_digits = 0;  // 0 selects the per-mode default
  bool parallel = false;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool collect_members = true;
};

struct SearchReport {
  std::vector<Value> members;  // ascending; empty when collect_members off
  uint64_t count = 0;
  std::optional<Value> largest;
  bool exhausted = false;  // true certifies completeness below max_digits
  uint64_t nodes_visited = 0;
};

namespace detail {

struct ValueHash {
  std::size_t operator()(Value v) const {
    uint64_t x = static_cast<uint64_t>(v) ^ static_cast<uint64_t>(v >> 64);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

// Suffix values recur across siblings, so omega lookups are memoized.
struct SearchContext {
  unsigned base;
  SearchMode mode;
  OmegaBound max_omega;
  unsigned max_digits;
  bool collect;
  std::unordered_map<Value, OmegaBound, ValueHash> omega_memo;

  bool passes(Value w) {
    if (mode == SearchMode::kStrictPrime) return is_prime(w);
    if (w == 0) return false;  // omega(0) = ∞ exceeds any finite threshold
    auto it = omega_memo.find(w);
    if (it == omega_memo.end()) it = omega_memo.emplace(w, omega(w)).first;
    return it->second <= max_omega;
  }
};

struct SubtreeResult {
  std::vector<Value> members;
  uint64_t count = 0;
  std::optional<Value> largest;
  bool frontier_alive = false;
  uint64_t nodes_visited = 0;

  void record(Value v, bool collect) {
    if (collect) members.push_back(v);
    ++count;
    if (!largest || v > *largest) largest = v;
  }
};

// Depth-first walk of the digit-append tree. `suffixes` holds W(0,j) of the
// current node for j = 0..depth-1 (the last entry is the node's value).
// Appending digit d creates node value v*B + d whose only new subwords are
// its own suffixes: d and d + B*s for each suffix s of the parent, so those
// are the only values that need checking.
inline void dfs(SearchContext& ctx, std::vector<Value>& suffixes, unsigned depth,
                SubtreeResult& out) {
  out.record(suffixes.back(), ctx.collect);
  const bool at_cap = depth == ctx.max_digits;
  std::vector<Value> child(depth + 1);
  for (unsigned d = 1; d < ctx.base; ++d) {  // digit 0 always prunes
    ++out.nodes_visited;
    bool ok = ctx.passes(d);
    if (ok) {
      child[0] = d;
      for (unsigned j = 0; j < depth; ++j) {
        child[j + 1] = checked_add(checked_mul(suffixes[j], ctx.base), d);
        if (!ctx.passes(child[j + 1])) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (at_cap) {
      // a child survives past the cap: the run is inconclusive
      out.frontier_alive = true;
      continue;
    }
    dfs(ctx, child, depth + 1, out);
  }
}

inline SubtreeResult search_root(const SearchConfig& cfg, unsigned max_digits,
                                 unsigned root_digit) {
  SearchContext ctx{cfg.base, cfg.mode, cfg.max_omega, max_digits,
                    cfg.collect_members, {}};
  SubtreeResult out;
  ++out.nodes_visited;
  if (!ctx.passes(root_digit)) return out;
  std::vector<Value> suffixes{root_digit};
  dfs(ctx, suffixes, 1, out);
  return out;
}

inline unsigned worker_count(const SearchConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("SUBSTRIME_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace detail

inline SearchReport run_search(const SearchConfig& cfg) {
  if (cfg.base < 2) throw std::invalid_argument("base must be >= 2");
  unsigned max_digits = cfg.max_digits;
  if (max_digits == 0) {
    max_digits = cfg.mode == SearchMode::kStrictPrime
                     ? 2 * static_cast<unsigned>(smallest_nondividing_prime(cfg.base))
                     : 64;
  }

  std::vector<detail::SubtreeResult> parts(cfg.base - 1);
  if (cfg.parallel && cfg.base > 2) {
    std::atomic<unsigned> next{1};
    auto work = [&] {
      for (unsigned d; (d = next.fetch_add(1)) < cfg.base;)
        parts[d - 1] = detail::search_root(cfg, max_digits, d);
    };
    unsigned n = std::min(detail::worker_count(cfg), cfg.base - 1);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
  } else {
    for (unsigned d = 1; d < cfg.base; ++d)
      parts[d - 1] = detail::search_root(cfg, max_digits, d);
  }

  SearchReport report;
  report.exhausted = true;
  for (auto& part : parts) {
    report.count += part.count;
    report.nodes_visited += part.nodes_visited;
    if (part.frontier_alive) report.exhausted = false;
    if (part.largest && (!report.largest || *part.largest > *report.largest))
      report.largest = *part.largest;
    report.members.insert(report.members.end(), part.members.begin(),
                          part.members.end());
  }
  std::sort(report.members.begin(), report.members.end());
  return report;
}

// All n >= 1 whose base-B subwords each have omega <= k, up to max_digits.
inline SearchReport enumerate_bounded(const SearchConfig& cfg) {
  if (cfg.mode != SearchMode::kOmegaBounded || cfg.max_omega.is_infinite())
    throw std::invalid_argument("enumerate_bounded requires a finite omega threshold");
  return run_search(cfg);
}

// All n whose base-B subwords are all prime. Complete whenever max_digits
// reaches 2p (no substrime has more digits than that), which the default
// config guarantees.
inline SearchReport enumerate_substrimes(const SearchConfig& cfg) {
  if (cfg.mode != SearchMode::kStrictPrime)
    throw std::invalid_argument("enumerate_substrimes requires strict-prime mode");
  return run_search(cfg);
}

// Max over all subwords W(i,j) of omega(value); ∞ iff some digit is 0.
inline OmegaBound max_subword_omega(Value n, unsigned base) {
  if (n == 0) throw std::invalid_argument("max_subword_omega requires n >= 1");
  const DigitString ds = to_digits(n, base);
  for (unsigned d : ds.digits)
    if (d == 0) return OmegaBound::infinity();
  OmegaBound best = OmegaBound::finite(0);
  for (const SubwordRef& w : all_subwords(ds)) best = std::max(best, omega(w.value));
  return best;
}

inline bool is_substrime(Value n, unsigned base) {
  if (n == 0) throw std::invalid_argument("is_substrime requires n >= 1");
  for (const SubwordRef& w : all_subwords(to_digits(n, base)))
    if (!is_prime(w.value)) return false;
  return true;
}

}  // namespace substrime
