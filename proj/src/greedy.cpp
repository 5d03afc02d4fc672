#include "gbp/greedy.hpp"

#include <algorithm>
#include <string>
#include <set>

#include "gbp/error.hpp"

namespace gbp {

namespace {

constexpr std::size_t kNoLast = kMaxElements;

[[noreturn]] void cap_exceeded(std::uint64_t cap) {
  throw Error(ErrorCode::CapExceeded,
              "more than " + std::to_string(cap) + " extensions; raise the limit to continue");
}

Mask next_choices(const Poset& p, ExtensionKind kind, Mask remaining,
                  std::optional<ElementId> last) {
  return kind == ExtensionKind::Greedy ? greedy_choices(p, remaining, last)
                                       : minimal_mask(p, remaining);
}

void require_extension(const Poset& p, const LinearExtension& l) {
  if (!is_linear_extension(p, l.order())) {
    throw Error(ErrorCode::NotALinearExtension, "sequence is not a linear extension of the poset");
  }
}

}  // namespace

LinearExtension::LinearExtension(std::vector<ElementId> order) : order_(std::move(order)) {
  position_.assign(order_.size(), order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const ElementId x = order_[i];
    if (x >= order_.size() || position_[x] != order_.size()) {
      throw Error(ErrorCode::NotALinearExtension, "sequence is not a permutation");
    }
    position_[x] = i;
  }
}

Mask greedy_choices(const Poset& p, Mask remaining, std::optional<ElementId> last) {
  const Mask mins = minimal_mask(p, remaining);
  if (last) {
    const Mask up = p.above(*last) & mins;
    if (up != 0) return up;
  }
  return mins;
}

void for_each_extension(const Poset& p, ExtensionKind kind, const ExtensionVisitor& visit,
                        std::uint64_t cap) {
  const std::size_t n = p.size();
  std::vector<ElementId> prefix;
  prefix.reserve(n);
  std::uint64_t emitted = 0;

  auto recurse = [&](auto& self, Mask remaining) -> void {
    if (remaining == 0) {
      if (emitted == cap) cap_exceeded(cap);
      ++emitted;
      visit(LinearExtension(prefix));
      return;
    }
    std::optional<ElementId> last;
    if (!prefix.empty()) last = prefix.back();
    for (ElementId c : elements_of(next_choices(p, kind, remaining, last))) {
      prefix.push_back(c);
      self(self, remaining & ~bit(c));
      prefix.pop_back();
    }
  };
  recurse(recurse, p.all());
}

std::vector<LinearExtension> greedy_extensions(const Poset& p, std::uint64_t cap) {
  std::vector<LinearExtension> out;
  for_each_extension(p, ExtensionKind::Greedy, [&](const LinearExtension& l) { out.push_back(l); },
                     cap);
  return out;
}

std::vector<LinearExtension> all_linear_extensions(const Poset& p, std::uint64_t cap) {
  std::vector<LinearExtension> out;
  for_each_extension(p, ExtensionKind::All, [&](const LinearExtension& l) { out.push_back(l); },
                     cap);
  return out;
}

bool is_linear_extension(const Poset& p, std::span<const ElementId> order) {
  if (order.size() != p.size()) return false;
  Mask placed = 0;
  for (ElementId x : order) {
    if (x >= p.size() || has(placed, x)) return false;
    if ((p.below(x) & ~placed) != 0) return false;
    placed |= bit(x);
  }
  return true;
}

bool is_greedy(const Poset& p, const LinearExtension& l) {
  require_extension(p, l);
  Mask remaining = p.all();
  std::optional<ElementId> last;
  for (ElementId x : l.order()) {
    if (!has(greedy_choices(p, remaining, last), x)) return false;
    remaining &= ~bit(x);
    last = x;
  }
  return true;
}

BlockDecomposition blocks(const Poset& p, const LinearExtension& l) {
  require_extension(p, l);
  BlockDecomposition out;
  if (l.size() == 0) return out;
  out.blocks.push_back({l[0]});
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (p.comparable(l[i], l[i + 1])) {
      out.blocks.back().push_back(l[i + 1]);
    } else {
      out.jump_positions.push_back(i);
      out.blocks.push_back({l[i + 1]});
    }
  }
  out.jump_count = out.jump_positions.size();
  return out;
}

ExtensionCounter::ExtensionCounter(const Poset& p, ExtensionKind kind, std::uint64_t cap)
    : poset_(p), kind_(kind), cap_(cap) {
  root_ = visit(poset_.all(), std::nullopt);

  // Reverse finishing order puts every state before its children.
  prefixes_.assign(states_.size(), 0);
  prefixes_[root_] = 1;
  for (auto it = finish_order_.rbegin(); it != finish_order_.rend(); ++it) {
    for (const auto& [placed, child] : states_[*it].edges) prefixes_[child] += prefixes_[*it];
  }
}

std::size_t ExtensionCounter::visit(Mask remaining, std::optional<ElementId> last) {
  // All-extension states do not depend on the last element.
  const std::size_t last_key = (kind_ == ExtensionKind::All || !last) ? kNoLast : *last;
  const Key key{remaining, last_key};
  if (auto it = index_.find(key); it != index_.end()) return it->second;

  BigInt completions = remaining == 0 ? 1 : 0;
  std::vector<std::pair<ElementId, std::size_t>> edges;
  for (ElementId c : elements_of(next_choices(poset_, kind_, remaining, last))) {
    const std::size_t child = visit(remaining & ~bit(c), c);
    edges.emplace_back(c, child);
    completions += completions_[child];
  }
  if (completions > cap_) cap_exceeded(cap_);

  const std::size_t id = states_.size();
  states_.push_back(State{remaining, std::move(edges)});
  completions_.push_back(std::move(completions));
  finish_order_.push_back(id);
  index_.emplace(key, id);
  return id;
}

BigInt ExtensionCounter::before(ElementId x, ElementId y) const {
  // Each extension crosses exactly one edge placing x; it puts x before y
  // iff y is still unplaced there.
  BigInt count = 0;
  for (std::size_t s = 0; s < states_.size(); ++s) {
    const State& st = states_[s];
    if (!has(st.remaining, x) || !has(st.remaining, y)) continue;
    for (const auto& [placed, child] : st.edges) {
      if (placed == x) count += prefixes_[s] * completions_[child];
    }
  }
  return count;
}

std::vector<std::vector<BigInt>> ExtensionCounter::before_matrix() const {
  const std::size_t n = poset_.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t s = 0; s < states_.size(); ++s) {
    const State& st = states_[s];
    for (const auto& [placed, child] : st.edges) {
      const BigInt through = prefixes_[s] * completions_[child];
      for (ElementId y : elements_of(st.remaining & ~bit(placed))) m[placed][y] += through;
    }
  }
  return m;
}

BigInt greedy_count(const Poset& p, std::uint64_t cap) {
  return ExtensionCounter(p, ExtensionKind::Greedy, cap).total();
}

BigInt linear_extension_count(const Poset& p, std::uint64_t cap) {
  return ExtensionCounter(p, ExtensionKind::All, cap).total();
}

namespace {

Ratio pair_ratio(const Poset& p, ElementId x, ElementId y, ExtensionKind kind,
                 std::uint64_t cap) {
  if (x >= p.size() || y >= p.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  }
  if (x == y) throw Error(ErrorCode::PreconditionViolated, "ratio needs two distinct elements");
  ExtensionCounter counter(p, kind, cap);
  return Ratio(counter.before(x, y), counter.total());
}

}  // namespace

Ratio gp_ratio(const Poset& p, ElementId x, ElementId y, std::uint64_t cap) {
  return pair_ratio(p, x, y, ExtensionKind::Greedy, cap);
}

Ratio p_ratio(const Poset& p, ElementId x, ElementId y, std::uint64_t cap) {
  return pair_ratio(p, x, y, ExtensionKind::All, cap);
}

BalanceReport balance_report(const Poset& p, std::optional<Ratio> alpha, ExtensionKind kind,
                             std::uint64_t cap) {
  ExtensionCounter counter(p, kind, cap);
  const auto before = counter.before_matrix();

  BalanceReport report;
  report.kind = kind;
  report.total = counter.total();
  report.alpha = alpha;
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : elements_of(p.incomparable_to(x) & ~full_mask(x + 1))) {
      Ratio r(before[x][y], report.total);
      Ratio level = std::min(r, r.complement());
      if (!report.best_level || level > *report.best_level) {
        report.best_level = level;
        report.best_pair = Pair{x, y};
      }
      report.pairs.push_back(PairBalance{x, y, before[x][y], std::move(r)});
    }
  }
  if (alpha) report.meets_alpha = report.best_level && *report.best_level >= *alpha;
  return report;
}

LinearExtension apply_automorphism(const Poset& p, std::span<const ElementId> f,
                                   const LinearExtension& l) {
  if (!is_automorphism(p, f)) {
    throw Error(ErrorCode::NotAutomorphism, "map is not an automorphism of the poset");
  }
  if (!is_linear_extension(p, l.order()) || !is_greedy(p, l)) {
    throw Error(ErrorCode::NotGreedy, "extension is not a greedy linear extension");
  }
  std::vector<ElementId> image;
  image.reserve(l.size());
  for (ElementId x : l.order()) image.push_back(f[x]);
  return LinearExtension(std::move(image));
}

LinearExtension dual_extension(const LinearExtension& l) {
  std::vector<ElementId> reversed(l.order().rbegin(), l.order().rend());
  return LinearExtension(std::move(reversed));
}

bool is_reversible(const Poset& p, std::uint64_t cap) {
  const Poset d = dual(p);
  bool reversible = true;
  for_each_extension(
      p, ExtensionKind::Greedy,
      [&](const LinearExtension& l) {
        if (reversible && !is_greedy(d, dual_extension(l))) reversible = false;
      },
      cap);
  return reversible;
}

std::optional<LinearExtension> exists_greedy_before(const Poset& p, ElementId x, ElementId y) {
  if (x >= p.size() || y >= p.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  }
  if (p.leq(y, x)) {
    throw Error(ErrorCode::PreconditionViolated,
                "no extension can place " + p.name(x) + " before " + p.name(y));
  }
  std::vector<ElementId> prefix;
  // (remaining, last) states with x unplaced from which x cannot precede y
  std::set<std::pair<Mask, std::size_t>> dead;

  auto key = [&](Mask remaining) {
    return std::pair{remaining, prefix.empty() ? kNoLast : prefix.back()};
  };
  // Once x is placed ahead of y every continuation works; take the least one.
  auto complete = [&](Mask remaining) {
    while (remaining != 0) {
      std::optional<ElementId> last;
      if (!prefix.empty()) last = prefix.back();
      const ElementId c =
          static_cast<ElementId>(std::countr_zero(greedy_choices(p, remaining, last)));
      prefix.push_back(c);
      remaining &= ~bit(c);
    }
  };
  auto search = [&](auto& self, Mask remaining) -> bool {
    const auto k = key(remaining);
    if (dead.contains(k)) return false;
    std::optional<ElementId> last;
    if (!prefix.empty()) last = prefix.back();
    for (ElementId c : elements_of(greedy_choices(p, remaining, last))) {
      if (c == y) continue;
      prefix.push_back(c);
      if (c == x) {
        complete(remaining & ~bit(c));
        return true;
      }
      if (self(self, remaining & ~bit(c))) return true;
      prefix.pop_back();
    }
    dead.insert(k);
    return false;
  };
  if (!search(search, p.all())) return std::nullopt;
  return LinearExtension(std::move(prefix));
}

}  // namespace gbp
