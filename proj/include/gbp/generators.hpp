#pragma once

// Test poset sources. Every random generator is a pure function of its
// arguments and seed; the bit stream comes from std::mt19937_64 and is
// mapped to ranges by hand so results do not depend on the standard
// library's distribution implementations.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gbp/poset.hpp"

namespace gbp {

// chain(k) | antichain(k) | lin(e, e, ...) | dis(e, e, ...)
struct SpExpr {
  enum class Kind { Chain, Antichain, Lin, Dis };
  Kind kind = Kind::Chain;
  std::size_t size = 1;  // leaves only
  std::vector<SpExpr> children;

  static SpExpr chain(std::size_t k) { return {Kind::Chain, k, {}}; }
  static SpExpr antichain(std::size_t k) { return {Kind::Antichain, k, {}}; }
  static SpExpr lin(std::vector<SpExpr> c) { return {Kind::Lin, 0, std::move(c)}; }
  static SpExpr dis(std::vector<SpExpr> c) { return {Kind::Dis, 0, std::move(c)}; }

  friend bool operator==(const SpExpr&, const SpExpr&) = default;
};

// Whitespace-insensitive; throws SyntaxError.
SpExpr parse_sp(std::string_view text);
std::string format_sp(const SpExpr& e);
// Throws ArityMismatch when a sum node has fewer than two children or a leaf
// has k = 0.
Poset eval_sp(const SpExpr& e);
std::size_t sp_size(const SpExpr& e);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 bits.
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

// Random SP expression with exactly n elements; throws SizeError for n < 1.
SpExpr random_sp_expr(std::size_t n, std::uint64_t seed);
Poset random_sp(std::size_t n, std::uint64_t seed);

// Random DAG along the order 0..n-1 with independent edge coins, closed
// transitively. Throws SizeError or ProbabilityRange.
Poset random_poset(std::size_t n, double edge_probability, std::uint64_t seed);

inline constexpr std::size_t kDefaultNFreeAttempts = 1000;

struct NFreeSample {
  Poset poset;
  std::size_t attempts = 0;
  bool used_fallback = false;
};

// Rejection sampling over random_poset with per-attempt edge probabilities;
// falls back to random_sp once max_attempts draws were rejected.
NFreeSample random_nfree_sample(std::size_t n, std::uint64_t seed,
                                std::size_t max_attempts = kDefaultNFreeAttempts);
Poset random_nfree(std::size_t n, std::uint64_t seed,
                   std::size_t max_attempts = kDefaultNFreeAttempts);

inline constexpr std::size_t kDefaultLabeledLimit = 6;

using PosetPredicate = std::function<bool(const Poset&)>;
using PosetVisitor = std::function<void(const Poset&)>;

// Every labeled poset on {0, ..., n-1} exactly once. Element k is added to
// each poset on the first k elements with every compatible (down-set,
// up-set) pair. Throws LimitExceeded when n > limit, SizeError when n < 1.
void for_each_labeled_poset(std::size_t n, const PosetVisitor& visit,
                            std::size_t limit = kDefaultLabeledLimit);
std::vector<Poset> enumerate_labeled_posets(std::size_t n, const PosetPredicate& keep = {},
                                            std::size_t limit = kDefaultLabeledLimit);

}  // namespace gbp
