#pragma once

// Greedy linear extensions: enumeration, membership, block structure and
// exact before-ratios, with the plain linear-extension analogues alongside.
//
// A greedy extension is built one element at a time. After placing `last`,
// the next element must be an element above `last` that is minimal among the
// remaining ones, if any such element exists; otherwise any remaining minimal
// element may follow. The first element is any minimal element.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gbp/poset.hpp"
#include "gbp/ratio.hpp"

namespace gbp {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

enum class ExtensionKind { Greedy, All };

class LinearExtension {
 public:
  LinearExtension() = default;
  // `order` must be a permutation of {0, ..., order.size()-1}; throws
  // NotALinearExtension otherwise.
  explicit LinearExtension(std::vector<ElementId> order);

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<ElementId>& order() const noexcept { return order_; }
  std::size_t position(ElementId x) const { return position_.at(x); }
  ElementId operator[](std::size_t i) const { return order_[i]; }
  bool before(ElementId x, ElementId y) const { return position(x) < position(y); }

  friend bool operator==(const LinearExtension& a, const LinearExtension& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const LinearExtension& a, const LinearExtension& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<ElementId> order_;
  std::vector<std::size_t> position_;
};

struct BlockDecomposition {
  std::vector<std::vector<ElementId>> blocks;
  std::size_t jump_count = 0;
  // i such that (order[i], order[i+1]) is a jump
  std::vector<std::size_t> jump_positions;
};

// Elements allowed next after `last` when `remaining` is still unplaced.
Mask greedy_choices(const Poset& p, Mask remaining, std::optional<ElementId> last);

using ExtensionVisitor = std::function<void(const LinearExtension&)>;

// Depth-first in ascending element order; throws CapExceeded before emitting
// extension number cap + 1.
void for_each_extension(const Poset& p, ExtensionKind kind, const ExtensionVisitor& visit,
                        std::uint64_t cap = kDefaultCap);
std::vector<LinearExtension> greedy_extensions(const Poset& p, std::uint64_t cap = kDefaultCap);
std::vector<LinearExtension> all_linear_extensions(const Poset& p,
                                                   std::uint64_t cap = kDefaultCap);

bool is_linear_extension(const Poset& p, std::span<const ElementId> order);
// Throws NotALinearExtension when L does not extend p.
bool is_greedy(const Poset& p, const LinearExtension& l);
BlockDecomposition blocks(const Poset& p, const LinearExtension& l);

// Counts extensions through the lattice of (remaining set, last element)
// states without materializing them. Each state stores how many
// extensions complete it and how many prefixes reach it.
class ExtensionCounter {
 public:
  // Throws CapExceeded as soon as the count is known to exceed cap.
  ExtensionCounter(const Poset& p, ExtensionKind kind, std::uint64_t cap = kDefaultCap);

  const BigInt& total() const noexcept { return completions_[root_]; }
  std::size_t state_count() const noexcept { return states_.size(); }

  // Extensions placing x before y.
  BigInt before(ElementId x, ElementId y) const;
  // before_matrix()[x][y] == before(x, y) for all x != y.
  std::vector<std::vector<BigInt>> before_matrix() const;

 private:
  struct State {
    Mask remaining;
    std::vector<std::pair<ElementId, std::size_t>> edges;  // (placed, child)
  };
  struct Key {
    Mask remaining;
    std::size_t last;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<Mask>{}(k.remaining * 0x9E3779B97F4A7C15ULL ^ k.last);
    }
  };

  std::size_t visit(Mask remaining, std::optional<ElementId> last);

  Poset poset_;
  ExtensionKind kind_;
  std::uint64_t cap_;
  std::vector<State> states_;
  std::vector<BigInt> completions_;
  std::vector<BigInt> prefixes_;
  std::vector<std::size_t> finish_order_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
  std::size_t root_ = 0;
};

BigInt greedy_count(const Poset& p, std::uint64_t cap = kDefaultCap);
BigInt linear_extension_count(const Poset& p, std::uint64_t cap = kDefaultCap);

// Proportion of greedy extensions placing x before y. Throws
// PreconditionViolated when x == y.
Ratio gp_ratio(const Poset& p, ElementId x, ElementId y, std::uint64_t cap = kDefaultCap);
// Same over all linear extensions.
Ratio p_ratio(const Poset& p, ElementId x, ElementId y, std::uint64_t cap = kDefaultCap);

struct PairBalance {
  ElementId x = 0, y = 0;
  BigInt before;
  Ratio ratio;  // before / total
};

struct BalanceReport {
  ExtensionKind kind = ExtensionKind::Greedy;
  BigInt total;
  // incomparable pairs with x < y by index, lexicographic
  std::vector<PairBalance> pairs;
  std::optional<Pair> best_pair;
  // max over pairs of min(r, 1 - r)
  std::optional<Ratio> best_level;
  std::optional<Ratio> alpha;
  // best_level >= alpha, when alpha is given
  std::optional<bool> meets_alpha;
};

BalanceReport balance_report(const Poset& p, std::optional<Ratio> alpha = std::nullopt,
                             ExtensionKind kind = ExtensionKind::Greedy,
                             std::uint64_t cap = kDefaultCap);

// Throws NotAutomorphism or NotGreedy.
LinearExtension apply_automorphism(const Poset& p, std::span<const ElementId> f,
                                   const LinearExtension& l);
LinearExtension dual_extension(const LinearExtension& l);
// Reverse of every greedy extension of p is greedy in dual(p).
bool is_reversible(const Poset& p, std::uint64_t cap = kDefaultCap);

// First greedy extension, in canonical order, placing x before y.
// Throws PreconditionViolated when y <= x.
std::optional<LinearExtension> exists_greedy_before(const Poset& p, ElementId x, ElementId y);

}  // namespace gbp
