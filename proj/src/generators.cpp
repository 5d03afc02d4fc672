#include "gbp/generators.hpp"

#include <cctype>
#include <string>

#include "gbp/error.hpp"

namespace gbp {

namespace {

class SpParser {
 public:
  explicit SpParser(std::string_view text) : text_(text) {}

  SpExpr parse() {
    SpExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                "expression column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  SpExpr expr() {
    const std::string head = word();
    if (head == "chain" || head == "antichain") {
      expect('(');
      const std::size_t k = number();
      expect(')');
      return head == "chain" ? SpExpr::chain(k) : SpExpr::antichain(k);
    }
    if (head == "lin" || head == "dis") {
      expect('(');
      std::vector<SpExpr> children{expr()};
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(expr());
        skip_space();
      }
      expect(')');
      return head == "lin" ? SpExpr::lin(std::move(children)) : SpExpr::dis(std::move(children));
    }
    fail(head.empty() ? "expected chain, antichain, lin or dis"
                      : "unknown constructor '" + head + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpExpr parse_sp(std::string_view text) { return SpParser(text).parse(); }

std::string format_sp(const SpExpr& e) {
  switch (e.kind) {
    case SpExpr::Kind::Chain: return "chain(" + std::to_string(e.size) + ")";
    case SpExpr::Kind::Antichain: return "antichain(" + std::to_string(e.size) + ")";
    case SpExpr::Kind::Lin:
    case SpExpr::Kind::Dis: {
      std::string out = e.kind == SpExpr::Kind::Lin ? "lin(" : "dis(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += ",";
        out += format_sp(e.children[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::size_t sp_size(const SpExpr& e) {
  if (e.kind == SpExpr::Kind::Chain || e.kind == SpExpr::Kind::Antichain) return e.size;
  std::size_t total = 0;
  for (const SpExpr& c : e.children) total += sp_size(c);
  return total;
}

Poset eval_sp(const SpExpr& e) {
  switch (e.kind) {
    case SpExpr::Kind::Chain:
    case SpExpr::Kind::Antichain:
      if (e.size == 0) throw Error(ErrorCode::ArityMismatch, "leaf of size 0");
      if (e.size > kMaxElements) throw Error(ErrorCode::SizeError, "leaf too large");
      return e.kind == SpExpr::Kind::Chain ? chain(e.size) : antichain(e.size);
    case SpExpr::Kind::Lin:
    case SpExpr::Kind::Dis: {
      if (e.children.size() < 2) {
        throw Error(ErrorCode::ArityMismatch, "sum node needs at least two operands");
      }
      std::vector<Poset> parts;
      parts.reserve(e.children.size());
      for (const SpExpr& c : e.children) parts.push_back(eval_sp(c));
      return e.kind == SpExpr::Kind::Lin ? linear_sum(parts) : disjoint_sum(parts);
    }
  }
  return {};
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

void check_n(std::size_t n) {
  if (n < 1 || n > kMaxElements) {
    throw Error(ErrorCode::SizeError,
                "size must be in [1, " + std::to_string(kMaxElements) + "], got " +
                    std::to_string(n));
  }
}

SpExpr grow_sp(std::size_t n, Rng& rng) {
  if (n == 1) return SpExpr::chain(1);
  if (rng.chance(0.25)) {
    return rng.chance(0.5) ? SpExpr::chain(n) : SpExpr::antichain(n);
  }
  std::size_t arity = rng.chance(0.75) ? 2 : 3;
  if (arity > n) arity = n;
  std::vector<std::size_t> parts(arity, 1);
  for (std::size_t left = n - arity; left > 0; --left) ++parts[rng.below(arity)];
  const bool linear = rng.chance(0.5);
  std::vector<SpExpr> children;
  children.reserve(arity);
  for (std::size_t part : parts) children.push_back(grow_sp(part, rng));
  return linear ? SpExpr::lin(std::move(children)) : SpExpr::dis(std::move(children));
}

}  // namespace

SpExpr random_sp_expr(std::size_t n, std::uint64_t seed) {
  check_n(n);
  Rng rng(seed);
  return grow_sp(n, rng);
}

Poset random_sp(std::size_t n, std::uint64_t seed) { return eval_sp(random_sp_expr(n, seed)); }

Poset random_poset(std::size_t n, double edge_probability, std::uint64_t seed) {
  check_n(n);
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorCode::ProbabilityRange, "edge probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Pair> edges;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      if (rng.chance(edge_probability)) edges.emplace_back(i, j);
    }
  }
  return Poset::from_pairs(n, edges);
}

NFreeSample random_nfree_sample(std::size_t n, std::uint64_t seed, std::size_t max_attempts) {
  check_n(n);
  Rng rng(seed);
  NFreeSample out;
  while (out.attempts < max_attempts) {
    ++out.attempts;
    const double p = 0.1 + 0.5 * rng.unit();
    Poset candidate = random_poset(n, p, rng.next());
    if (is_n_free(candidate)) {
      out.poset = std::move(candidate);
      return out;
    }
  }
  out.used_fallback = true;
  out.poset = random_sp(n, rng.next());
  return out;
}

Poset random_nfree(std::size_t n, std::uint64_t seed, std::size_t max_attempts) {
  return random_nfree_sample(n, seed, max_attempts).poset;
}

namespace {

bool down_closed(const std::vector<Mask>& below, Mask set) {
  for (ElementId x : elements_of(set)) {
    if ((below[x] & ~set) != 0) return false;
  }
  return true;
}

void extend_labeled(std::vector<Mask>& above, std::vector<Mask>& below, std::size_t n,
                    const PosetVisitor& visit) {
  const std::size_t k = above.size();
  if (k == n) {
    visit(Poset::from_closed_rows(above));
    return;
  }
  const Mask universe = full_mask(k);
  for (Mask down = 0;; ++down) {
    if (down_closed(below, down)) {
      // Everything above the new element must lie above all of `down`.
      Mask common_up = universe & ~down;
      for (ElementId d : elements_of(down)) common_up &= above[d];
      // Enumerate subsets of common_up that are up-closed.
      for (Mask up = common_up;; up = (up - 1) & common_up) {
        bool closed = true;
        for (ElementId u : elements_of(up)) closed = closed && (above[u] & ~up) == 0;
        if (closed) {
          for (ElementId d : elements_of(down)) above[d] |= bit(k);
          for (ElementId u : elements_of(up)) below[u] |= bit(k);
          above.push_back(up);
          below.push_back(down);
          extend_labeled(above, below, n, visit);
          above.pop_back();
          below.pop_back();
          for (ElementId d : elements_of(down)) above[d] &= ~bit(k);
          for (ElementId u : elements_of(up)) below[u] &= ~bit(k);
        }
        if (up == 0) break;
      }
    }
    if (down == universe) break;
  }
}

}  // namespace

void for_each_labeled_poset(std::size_t n, const PosetVisitor& visit, std::size_t limit) {
  if (n > limit) {
    throw Error(ErrorCode::LimitExceeded,
                "labeled enumeration is limited to n <= " + std::to_string(limit));
  }
  check_n(n);
  std::vector<Mask> above, below;
  above.reserve(n);
  below.reserve(n);
  extend_labeled(above, below, n, visit);
}

std::vector<Poset> enumerate_labeled_posets(std::size_t n, const PosetPredicate& keep,
                                            std::size_t limit) {
  std::vector<Poset> out;
  for_each_labeled_poset(
      n,
      [&](const Poset& p) {
        if (!keep || keep(p)) out.push_back(p);
      },
      limit);
  return out;
}

}  // namespace gbp
