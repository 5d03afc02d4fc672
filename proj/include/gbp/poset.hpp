#pragma once

// Finite strict partial orders on the dense index set {0, ..., n-1}.
//
// The full strict order relation is stored as one bitset row per element
// (elements above it, elements below it), together with the cover relation
// derived from it. Posets are immutable values; every construction returns a
// new Poset. At most kMaxElements elements are supported.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gbp {

using ElementId = std::size_t;
using Mask = std::uint64_t;
using Pair = std::pair<ElementId, ElementId>;

// Image of each element under a bijection of {0, ..., n-1}.
using Permutation = std::vector<ElementId>;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(ElementId x) noexcept { return Mask{1} << x; }
constexpr bool has(Mask m, ElementId x) noexcept { return (m >> x) & 1U; }
constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline std::size_t popcount(Mask m) noexcept {
  return static_cast<std::size_t>(std::popcount(m));
}

// Ascending list of the elements in m.
std::vector<ElementId> elements_of(Mask m);
Mask mask_of(std::span<const ElementId> xs);

class Poset {
 public:
  Poset() = default;

  // Transitive closure of the given pairs; pairs need not be covers.
  // Throws CycleDetected, IndexOutOfRange or SizeError (n > kMaxElements).
  static Poset from_pairs(std::size_t n, std::span<const Pair> pairs,
                          std::vector<std::string> labels = {});
  // Rows must already be transitively closed and irreflexive; above[x] holds
  // the elements strictly greater than x.
  static Poset from_closed_rows(std::vector<Mask> above,
                                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return above_.size(); }
  Mask all() const noexcept { return full_mask(size()); }

  bool less(ElementId x, ElementId y) const { return has(above_[x], y); }
  bool leq(ElementId x, ElementId y) const { return x == y || less(x, y); }
  bool comparable(ElementId x, ElementId y) const {
    return x == y || less(x, y) || less(y, x);
  }
  bool covered_by(ElementId x, ElementId y) const {
    return has(upper_covers_[x], y);
  }

  Mask above(ElementId x) const { return above_[x]; }
  Mask below(ElementId x) const { return below_[x]; }
  Mask upper_cover_mask(ElementId x) const { return upper_covers_[x]; }
  Mask lower_cover_mask(ElementId x) const { return lower_covers_[x]; }
  Mask incomparable_to(ElementId x) const {
    return all() & ~(above_[x] | below_[x] | bit(x));
  }

  // Sorted (x, y) with x covered by y.
  std::vector<Pair> cover_pairs() const;
  std::size_t cover_count() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Display name: the label when one is set, else the decimal index.
  std::string name(ElementId x) const;

  // Same order relation; labels are ignored.
  bool same_order(const Poset& other) const {
    return above_ == other.above_;
  }
  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Poset(std::vector<Mask> above, std::vector<std::string> labels);

  std::vector<Mask> above_;
  std::vector<Mask> below_;
  std::vector<Mask> upper_covers_;
  std::vector<Mask> lower_covers_;
  std::vector<std::string> labels_;
};

Poset build_poset(std::size_t n, std::span<const Pair> pairs);
Poset chain(std::size_t n);
Poset antichain(std::size_t n);

bool leq(const Poset& p, ElementId x, ElementId y);
std::vector<ElementId> upper_set(const Poset& p, ElementId x);
std::vector<ElementId> minimals(const Poset& p);
std::vector<ElementId> maximals(const Poset& p);
// Minimal elements of the subposet induced on `within`.
Mask minimal_mask(const Poset& p, Mask within);
std::vector<ElementId> upper_covers(const Poset& p, ElementId x);
std::vector<ElementId> lower_covers(const Poset& p, ElementId x);

Poset dual(const Poset& p);

struct Deletion {
  Poset poset;
  // old index -> new index, nullopt for the deleted element
  std::vector<std::optional<ElementId>> old_to_new;
  std::vector<ElementId> new_to_old;
};

// Induced order on all elements but `a`, reindexed densely.
// Throws IndexOutOfRange, or Underflow when p has a single element.
Deletion delete_element(const Poset& p, ElementId a);
// Induced order on the elements of `keep`, in ascending index order.
Deletion induced(const Poset& p, Mask keep);

bool is_chain(const Poset& p);
bool is_antichain(const Poset& p);
std::size_t width(const Poset& p);

// Every element outside `a` is above all of `a`, below all of it, or
// incomparable to all of it.
bool is_autonomous(const Poset& p, Mask a);
bool is_autonomous(const Poset& p, std::span<const ElementId> a);

// a < b > c < d as covers, a and d incomparable.
struct NWitness {
  ElementId a, b, c, d;
  friend bool operator==(const NWitness&, const NWitness&) = default;
};
std::optional<NWitness> find_n(const Poset& p);
bool is_n_free(const Poset& p);

// Element indices are assigned by concatenating the components in order.
// Throws ArityMismatch on an empty component list.
Poset disjoint_sum(std::span<const Poset> components);
Poset linear_sum(std::span<const Poset> components);
// Throws ArityMismatch unless components.size() == index.size() >= 2.
Poset lex_sum(const Poset& index, std::span<const Poset> components);

// Throws SizeMismatch when f does not have one image per element.
// A non-bijective f is never an automorphism.
bool is_automorphism(const Poset& p, std::span<const ElementId> f);
// The map exchanging x and y.
Permutation transposition(std::size_t n, ElementId x, ElementId y);

// Components of the comparability graph, each sorted, ordered by least element.
std::vector<std::vector<ElementId>> connected_components(const Poset& p);

}  // namespace gbp
