#include "gbp/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gbp/error.hpp"

namespace gbp {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxElements) {
    throw Error(ErrorCode::SizeError,
                "posets are limited to " + std::to_string(kMaxElements) +
                    " elements, got " + std::to_string(n));
  }
}

void check_index(const Poset& p, ElementId x) {
  if (x >= p.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "element " + std::to_string(x) + " out of range for poset of size " +
                    std::to_string(p.size()));
  }
}

std::vector<std::string> concat_labels(std::span<const Poset> components) {
  bool any = std::any_of(components.begin(), components.end(),
                         [](const Poset& c) { return c.has_labels(); });
  if (!any) return {};
  std::vector<std::string> labels;
  for (const Poset& c : components) {
    for (ElementId x = 0; x < c.size(); ++x) {
      labels.push_back(c.has_labels() ? c.labels()[x] : std::string{});
    }
  }
  return labels;
}

}  // namespace

std::vector<ElementId> elements_of(Mask m) {
  std::vector<ElementId> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(static_cast<ElementId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const ElementId> xs) {
  Mask m = 0;
  for (ElementId x : xs) m |= bit(x);
  return m;
}

Poset::Poset(std::vector<Mask> above, std::vector<std::string> labels)
    : above_(std::move(above)), labels_(std::move(labels)) {
  const std::size_t n = above_.size();
  below_.assign(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y : elements_of(above_[x])) below_[y] |= bit(x);
  }
  // y covers x iff x < y and nothing above x lies below y.
  upper_covers_.assign(n, 0);
  lower_covers_.assign(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y : elements_of(above_[x])) {
      if ((above_[x] & below_[y]) == 0) {
        upper_covers_[x] |= bit(y);
        lower_covers_[y] |= bit(x);
      }
    }
  }
  if (!labels_.empty()) labels_.resize(n);
}

Poset Poset::from_pairs(std::size_t n, std::span<const Pair> pairs,
                        std::vector<std::string> labels) {
  check_size(n);
  std::vector<Mask> rows(n, 0);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair (" + std::to_string(x) + "," + std::to_string(y) +
                      ") out of range for " + std::to_string(n) + " elements");
    }
    rows[x] |= bit(y);
  }
  // Warshall closure on bit rows.
  for (ElementId k = 0; k < n; ++k) {
    for (ElementId i = 0; i < n; ++i) {
      if (has(rows[i], k)) rows[i] |= rows[k];
    }
  }
  for (ElementId i = 0; i < n; ++i) {
    if (has(rows[i], i)) {
      throw Error(ErrorCode::CycleDetected,
                  "relation has a directed cycle through element " + std::to_string(i));
    }
  }
  return Poset(std::move(rows), std::move(labels));
}

Poset Poset::from_closed_rows(std::vector<Mask> above, std::vector<std::string> labels) {
  check_size(above.size());
  return Poset(std::move(above), std::move(labels));
}

std::vector<Pair> Poset::cover_pairs() const {
  std::vector<Pair> out;
  for (ElementId x = 0; x < size(); ++x) {
    for (ElementId y : elements_of(upper_covers_[x])) out.emplace_back(x, y);
  }
  return out;
}

std::size_t Poset::cover_count() const {
  std::size_t total = 0;
  for (Mask m : upper_covers_) total += popcount(m);
  return total;
}

std::string Poset::name(ElementId x) const {
  if (x < labels_.size() && !labels_[x].empty()) return labels_[x];
  return std::to_string(x);
}

Poset build_poset(std::size_t n, std::span<const Pair> pairs) {
  return Poset::from_pairs(n, pairs);
}

Poset chain(std::size_t n) {
  check_size(n);
  std::vector<Mask> rows(n);
  for (ElementId x = 0; x < n; ++x) rows[x] = full_mask(n) & ~full_mask(x + 1);
  return Poset::from_closed_rows(std::move(rows));
}

Poset antichain(std::size_t n) {
  check_size(n);
  return Poset::from_closed_rows(std::vector<Mask>(n, 0));
}

bool leq(const Poset& p, ElementId x, ElementId y) {
  check_index(p, x);
  check_index(p, y);
  return p.leq(x, y);
}

std::vector<ElementId> upper_set(const Poset& p, ElementId x) {
  check_index(p, x);
  return elements_of(p.above(x));
}

Mask minimal_mask(const Poset& p, Mask within) {
  Mask out = 0;
  for (ElementId x : elements_of(within)) {
    if ((p.below(x) & within) == 0) out |= bit(x);
  }
  return out;
}

std::vector<ElementId> minimals(const Poset& p) {
  return elements_of(minimal_mask(p, p.all()));
}

std::vector<ElementId> maximals(const Poset& p) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < p.size(); ++x) {
    if (p.above(x) == 0) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> upper_covers(const Poset& p, ElementId x) {
  check_index(p, x);
  return elements_of(p.upper_cover_mask(x));
}

std::vector<ElementId> lower_covers(const Poset& p, ElementId x) {
  check_index(p, x);
  return elements_of(p.lower_cover_mask(x));
}

Poset dual(const Poset& p) {
  std::vector<Mask> rows(p.size());
  for (ElementId x = 0; x < p.size(); ++x) rows[x] = p.below(x);
  return Poset::from_closed_rows(std::move(rows), p.labels());
}

Deletion induced(const Poset& p, Mask keep) {
  keep &= p.all();
  Deletion out;
  out.new_to_old = elements_of(keep);
  out.old_to_new.assign(p.size(), std::nullopt);
  for (ElementId i = 0; i < out.new_to_old.size(); ++i) {
    out.old_to_new[out.new_to_old[i]] = i;
  }
  std::vector<Mask> rows(out.new_to_old.size(), 0);
  std::vector<std::string> labels;
  for (ElementId i = 0; i < rows.size(); ++i) {
    const ElementId old = out.new_to_old[i];
    for (ElementId y : elements_of(p.above(old) & keep)) rows[i] |= bit(*out.old_to_new[y]);
    if (p.has_labels()) labels.push_back(p.labels()[old]);
  }
  out.poset = Poset::from_closed_rows(std::move(rows), std::move(labels));
  return out;
}

Deletion delete_element(const Poset& p, ElementId a) {
  check_index(p, a);
  if (p.size() == 1) {
    throw Error(ErrorCode::Underflow, "cannot delete the only element of a poset");
  }
  return induced(p, p.all() & ~bit(a));
}

bool is_chain(const Poset& p) {
  for (ElementId x = 0; x < p.size(); ++x) {
    if (p.incomparable_to(x) != 0) return false;
  }
  return true;
}

bool is_antichain(const Poset& p) {
  for (ElementId x = 0; x < p.size(); ++x) {
    if (p.above(x) != 0) return false;
  }
  return true;
}

namespace {

// Branch and bound over the incomparability graph: `candidates` are elements
// incomparable to everything chosen so far.
void grow_antichain(const Poset& p, Mask candidates, std::size_t chosen, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, chosen);
    return;
  }
  if (chosen + popcount(candidates) <= best) return;
  const ElementId x = static_cast<ElementId>(std::countr_zero(candidates));
  grow_antichain(p, candidates & p.incomparable_to(x), chosen + 1, best);
  grow_antichain(p, candidates & ~bit(x), chosen, best);
}

}  // namespace

std::size_t width(const Poset& p) {
  std::size_t best = 0;
  grow_antichain(p, p.all(), 0, best);
  return best;
}

bool is_autonomous(const Poset& p, Mask a) {
  a &= p.all();
  if (a == 0) return true;
  const ElementId first = static_cast<ElementId>(std::countr_zero(a));
  const Mask outside = p.all() & ~a;
  const Mask up = p.above(first) & outside;
  const Mask down = p.below(first) & outside;
  for (ElementId x : elements_of(a)) {
    if ((p.above(x) & outside) != up || (p.below(x) & outside) != down) return false;
  }
  return true;
}

bool is_autonomous(const Poset& p, std::span<const ElementId> a) {
  for (ElementId x : a) check_index(p, x);
  return is_autonomous(p, mask_of(a));
}

std::optional<NWitness> find_n(const Poset& p) {
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b : elements_of(p.upper_cover_mask(a))) {
      for (ElementId c : elements_of(p.lower_cover_mask(b) & ~bit(a))) {
        for (ElementId d : elements_of(p.upper_cover_mask(c) & ~bit(b))) {
          if (d != a && !p.comparable(a, d)) return NWitness{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_n_free(const Poset& p) { return !find_n(p).has_value(); }

Poset lex_sum(const Poset& index, std::span<const Poset> components) {
  if (components.size() != index.size() || components.size() < 2) {
    throw Error(ErrorCode::ArityMismatch,
                "lexicographic sum needs one component per index element (at least 2), got " +
                    std::to_string(components.size()) + " for index of size " +
                    std::to_string(index.size()));
  }
  std::vector<std::size_t> offset(components.size() + 1, 0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].size() == 0) {
      throw Error(ErrorCode::ArityMismatch, "sum components must be nonempty");
    }
    offset[i + 1] = offset[i] + components[i].size();
  }
  check_size(offset.back());
  std::vector<Mask> block(components.size(), 0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    block[i] = full_mask(offset[i + 1]) & ~full_mask(offset[i]);
  }
  std::vector<Mask> rows(offset.back(), 0);
  for (std::size_t i = 0; i < components.size(); ++i) {
    Mask later = 0;
    for (ElementId j : elements_of(index.above(i))) later |= block[j];
    for (ElementId x = 0; x < components[i].size(); ++x) {
      rows[offset[i] + x] = (components[i].above(x) << offset[i]) | later;
    }
  }
  return Poset::from_closed_rows(std::move(rows), concat_labels(components));
}

Poset disjoint_sum(std::span<const Poset> components) {
  if (components.empty()) throw Error(ErrorCode::ArityMismatch, "empty component list");
  if (components.size() == 1) return components.front();
  return lex_sum(antichain(components.size()), components);
}

Poset linear_sum(std::span<const Poset> components) {
  if (components.empty()) throw Error(ErrorCode::ArityMismatch, "empty component list");
  if (components.size() == 1) return components.front();
  return lex_sum(chain(components.size()), components);
}

bool is_automorphism(const Poset& p, std::span<const ElementId> f) {
  if (f.size() != p.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "map has " + std::to_string(f.size()) + " images for " +
                    std::to_string(p.size()) + " elements");
  }
  Mask image = 0;
  for (ElementId y : f) {
    if (y >= p.size()) return false;
    image |= bit(y);
  }
  if (image != p.all()) return false;
  for (ElementId x = 0; x < p.size(); ++x) {
    Mask mapped = 0;
    for (ElementId y : elements_of(p.above(x))) mapped |= bit(f[y]);
    if (mapped != p.above(f[x])) return false;
  }
  return true;
}

Permutation transposition(std::size_t n, ElementId x, ElementId y) {
  Permutation f(n);
  std::iota(f.begin(), f.end(), ElementId{0});
  std::swap(f.at(x), f.at(y));
  return f;
}

std::vector<std::vector<ElementId>> connected_components(const Poset& p) {
  std::vector<std::vector<ElementId>> out;
  Mask seen = 0;
  for (ElementId start = 0; start < p.size(); ++start) {
    if (has(seen, start)) continue;
    Mask comp = bit(start);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (ElementId x : elements_of(frontier)) next |= p.above(x) | p.below(x);
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(elements_of(comp));
  }
  return out;
}

}  // namespace gbp
