#include "gbp/poset.hpp"

#include <gtest/gtest.h>

#include "gbp/error.hpp"
#include "gbp/fixtures.hpp"
#include "gbp/generators.hpp"
#include "oracle.hpp"

namespace gbp {
namespace {

using Ids = std::vector<ElementId>;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gbp::Error thrown";
  return ErrorCode::PreconditionViolated;
}

TEST(Poset, ClosureFromCovers) {
  const std::vector<Pair> covers{{0, 1}, {1, 2}};
  const Poset p = build_poset(3, covers);
  EXPECT_TRUE(leq(p, 0, 2));
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.covered_by(0, 2));
  EXPECT_EQ(p.cover_pairs(), (std::vector<Pair>{{0, 1}, {1, 2}}));
}

TEST(Poset, EmptyRelationIsAntichain) {
  const Poset p = build_poset(3, {});
  EXPECT_TRUE(is_antichain(p));
  EXPECT_EQ(width(p), 3u);
}

TEST(Poset, ConstructionErrors) {
  const std::vector<Pair> cycle{{0, 1}, {1, 0}};
  EXPECT_EQ(code_of([&] { build_poset(2, cycle); }), ErrorCode::CycleDetected);
  const std::vector<Pair> loop{{1, 1}};
  EXPECT_EQ(code_of([&] { build_poset(2, loop); }), ErrorCode::CycleDetected);
  const std::vector<Pair> far{{0, 5}};
  EXPECT_EQ(code_of([&] { build_poset(3, far); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { antichain(kMaxElements + 1); }), ErrorCode::SizeError);
}

TEST(Poset, NFixture) {
  const Poset n = fixtures::n_poset();
  EXPECT_EQ(minimals(n), (Ids{0, 2}));
  EXPECT_EQ(maximals(n), (Ids{1, 3}));
  EXPECT_EQ(upper_covers(n, 2), (Ids{1, 3}));
  EXPECT_EQ(lower_covers(n, 1), (Ids{0, 2}));
  EXPECT_EQ(upper_set(n, 2), (Ids{1, 3}));
  EXPECT_TRUE(upper_set(antichain(3), 0).empty());
  EXPECT_EQ(width(n), 2u);
  const auto w = find_n(n);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (NWitness{0, 1, 2, 3}));
  EXPECT_FALSE(is_n_free(n));
}

TEST(Poset, SmallShapesAreNFree) {
  EXPECT_TRUE(is_n_free(fixtures::v_poset()));
  EXPECT_TRUE(is_n_free(chain(5)));
  EXPECT_TRUE(is_n_free(antichain(4)));
  EXPECT_FALSE(is_n_free(fixtures::n_plus_point()));
}

TEST(Poset, NWithExtraRelationIsNotAnN) {
  // With a < d added the four elements form a bowtie, which contains no N.
  const std::vector<Pair> covers{{0, 1}, {2, 1}, {2, 3}, {0, 3}};
  EXPECT_TRUE(is_n_free(build_poset(4, covers)));
}

TEST(Poset, DeletionReindexes) {
  const Poset n = fixtures::n_poset();
  const Deletion d = delete_element(n, 0);
  EXPECT_EQ(d.poset.size(), 3u);
  EXPECT_EQ(d.new_to_old, (Ids{1, 2, 3}));
  EXPECT_FALSE(d.old_to_new[0].has_value());
  EXPECT_EQ(*d.old_to_new[2], 1u);
  EXPECT_EQ(d.poset.cover_pairs(), (std::vector<Pair>{{1, 0}, {1, 2}}));
  EXPECT_EQ(code_of([] { delete_element(chain(1), 0); }), ErrorCode::Underflow);
  EXPECT_EQ(code_of([&] { delete_element(n, 4); }), ErrorCode::IndexOutOfRange);
}

TEST(Poset, SumsConcatenateIndices) {
  const std::vector<Poset> parts{chain(2), antichain(2)};
  const Poset dis = disjoint_sum(parts);
  EXPECT_EQ(dis.cover_pairs(), (std::vector<Pair>{{0, 1}}));
  const Poset lin = linear_sum(parts);
  EXPECT_EQ(lin.cover_pairs(), (std::vector<Pair>{{0, 1}, {1, 2}, {1, 3}}));
  const std::vector<Poset> one{chain(3)};
  EXPECT_EQ(disjoint_sum(one), chain(3));
  EXPECT_EQ(code_of([] { disjoint_sum(std::span<const Poset>{}); }), ErrorCode::ArityMismatch);
}

TEST(Poset, LexSum) {
  const std::vector<Poset> parts{antichain(2), chain(1)};
  const Poset p = lex_sum(chain(2), parts);
  EXPECT_EQ(p, fixtures::v_poset());
  EXPECT_EQ(code_of([&] { lex_sum(chain(3), parts); }), ErrorCode::ArityMismatch);
  const std::vector<Poset> single{chain(2)};
  EXPECT_EQ(code_of([&] { lex_sum(chain(1), single); }), ErrorCode::ArityMismatch);
}

TEST(Poset, Automorphisms) {
  const Poset v = fixtures::v_poset();
  EXPECT_TRUE(is_automorphism(v, transposition(3, 0, 1)));
  EXPECT_FALSE(is_automorphism(v, transposition(3, 0, 2)));
  const Ids not_bijective{0, 0, 2};
  EXPECT_FALSE(is_automorphism(v, not_bijective));
  const Ids short_map{0, 1};
  EXPECT_EQ(code_of([&] { is_automorphism(v, short_map); }), ErrorCode::SizeMismatch);
}

TEST(Poset, AutonomousSets) {
  const Poset v = fixtures::v_poset();
  EXPECT_TRUE(is_autonomous(v, Ids{0, 1}));
  EXPECT_FALSE(is_autonomous(v, Ids{0, 2}));
  EXPECT_FALSE(is_autonomous(fixtures::n_poset(), Ids{0, 2}));
}

TEST(Poset, ConnectedComponents) {
  const auto comps = connected_components(fixtures::n_plus_point());
  EXPECT_EQ(comps, (std::vector<Ids>{{0, 1, 2, 3}, {4}}));
}

TEST(PosetProperty, MatchesOracleOnAllSmallPosets) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Poset& p : oracle::all_labeled_posets(n)) {
      const Poset d = dual(p);
      EXPECT_EQ(dual(d), p);
      EXPECT_EQ(minimals(p), maximals(d));
      EXPECT_EQ(width(p), oracle::width(p));
      EXPECT_EQ(is_n_free(p), !oracle::has_n(p));
      for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
          EXPECT_EQ(p.covered_by(x, y), oracle::covers(p, x, y));
    }
  }
}

TEST(PosetProperty, DeletingMinimalKeepsOtherCovers) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Poset p = random_nfree(7, seed);
    for (ElementId a : minimals(p)) {
      const Deletion d = delete_element(p, a);
      for (const auto& [x, y] : p.cover_pairs()) {
        if (x == a || y == a) continue;
        EXPECT_TRUE(d.poset.covered_by(*d.old_to_new[x], *d.old_to_new[y]));
      }
      EXPECT_EQ(d.poset.cover_count() + upper_covers(p, a).size(), p.cover_count());
    }
  }
}

TEST(PosetProperty, SumsOfNFreeAreNFree) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::vector<Poset> parts{random_sp(3, seed), random_sp(4, seed + 1000)};
    EXPECT_TRUE(is_n_free(disjoint_sum(parts)));
    EXPECT_TRUE(is_n_free(linear_sum(parts)));
  }
}

TEST(PosetProperty, AutonomyInvariantUnderAutomorphisms) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Poset p = random_poset(6, 0.3, seed);
    const auto autos = oracle::automorphisms(p);
    for (Mask s = 1; s < p.all(); ++s) {
      const bool base = is_autonomous(p, s);
      EXPECT_EQ(base, oracle::autonomous(p, elements_of(s)));
      for (const auto& f : autos) {
        Mask image = 0;
        for (ElementId x : elements_of(s)) image |= bit(f[x]);
        EXPECT_EQ(is_autonomous(p, image), base);
      }
    }
  }
}

}  // namespace
}  // namespace gbp
