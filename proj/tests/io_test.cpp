#include "gbp/io.hpp"

#include <gtest/gtest.h>

#include "gbp/error.hpp"
#include "gbp/fixtures.hpp"
#include "gbp/generators.hpp"
#include "gbp/report.hpp"

namespace gbp {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gbp::Error thrown";
  return ErrorCode::PreconditionViolated;
}

TEST(Io, ParsesCommentsAndLabels) {
  const PosetDocument doc = parse_document(
      "# two chains\n"
      "\n"
      "poset 4\n"
      "cover 0 1\n"
      "cover 2 3\n"
      "cover 0 1\n"
      "label 3 top\n");
  EXPECT_EQ(doc.comments, (std::vector<std::string>{"two chains"}));
  EXPECT_EQ(doc.poset.cover_pairs(), (std::vector<Pair>{{0, 1}, {2, 3}}));
  EXPECT_EQ(doc.poset.name(3), "top");
  EXPECT_EQ(doc.poset.name(0), "0");
}

TEST(Io, TransitivePairsAreAbsorbed) {
  const Poset p = parse_poset("poset 3\ncover 0 1\ncover 1 2\ncover 0 2\n");
  EXPECT_EQ(format_poset(p), "poset 3\ncover 0 1\ncover 1 2\n");
}

TEST(Io, Errors) {
  EXPECT_EQ(code_of([] { parse_poset("cover 0 1\n"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_poset("poset 2\nedge 0 1\n"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_poset("poset 2\ncover 0\n"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_poset("poset 2\ncover 0 1\ncover 1 0\n"); }),
            ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { parse_poset("poset 2\ncover 0 2\n"); }), ErrorCode::IndexOutOfRange);
  try {
    parse_poset("poset 2\n\nbogus\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Io, FixtureFileMatchesBuiltIn) {
  const PosetDocument doc = read_document(GBP_DATA_DIR "/fig3.poset");
  EXPECT_TRUE(doc.poset.same_order(fixtures::n_plus_point()));
  EXPECT_EQ(doc.poset.name(4), "e");
  EXPECT_FALSE(doc.comments.empty());
}

TEST(IoProperty, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Poset p = seed % 2 ? random_poset(1 + seed % 9, 0.35, seed) : random_sp(1 + seed % 9, seed);
    PosetDocument doc{p, {"seed " + std::to_string(seed)}};
    if (seed % 3 == 0) {
      std::vector<std::string> labels;
      for (ElementId x = 0; x < p.size(); ++x) labels.push_back("v" + std::to_string(x));
      doc.poset = Poset::from_pairs(p.size(), p.cover_pairs(), labels);
    }
    const std::string text = format_document(doc);
    const PosetDocument back = parse_document(text);
    EXPECT_EQ(back.poset, doc.poset);
    EXPECT_EQ(back.comments, doc.comments);
    EXPECT_EQ(format_document(back), text);
  }
}

TEST(IoProperty, BalanceJsonRederivesLosslessly) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Poset p = random_poset(6, 0.3, seed);
    const BalanceReport r = balance_report(p, Ratio(1, 3));
    const auto doc = nlohmann::ordered_json::parse(balance_json(p, r).dump());
    const BalanceVerdict v = rederive_balance(doc);
    EXPECT_EQ(v.best_level, r.best_level);
    EXPECT_EQ(v.best_pair, r.best_pair);
    EXPECT_EQ(v.meets_alpha, r.meets_alpha);
    for (const auto& pair : doc.at("pairs")) EXPECT_TRUE(pair.at("ratio").is_string());
  }
}

}  // namespace
}  // namespace gbp
