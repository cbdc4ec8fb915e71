#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "doxa/bisim.hpp"
#include "doxa/fixtures.hpp"
#include "doxa/generator.hpp"
#include "doxa/semantics.hpp"

using namespace doxa;

namespace {

const BisimKind kAllKinds[] = {BisimKind::Collective, BisimKind::Cautious, BisimKind::BoldV1,
                               BisimKind::BoldV2};

BeliefModel sample_model(std::uint64_t seed) {
  GeneratorConfig cfg;
  Rng rng(seed);
  cfg.worlds = 2 + static_cast<int>(rng.below(4));
  cfg.agents = 2 + static_cast<int>(rng.below(2));
  cfg.density = 0.15 + 0.1 * static_cast<double>(rng.below(3));
  cfg.seed = rng.next();
  return generate_model(cfg);
}

std::vector<std::pair<int, int>> diagonal(const BeliefModel& m) {
  std::vector<std::pair<int, int>> pairs;
  for (int w = 0; w < m.world_count(); ++w) pairs.emplace_back(w, w);
  return pairs;
}

Lang lang_for(BisimKind kind) {
  switch (kind) {
    case BisimKind::Collective:
      return Lang::D;
    case BisimKind::Cautious:
      return Lang::DCaut;
    default:
      return Lang::DBold;
  }
}

}  // namespace

TEST_CASE("the identity relation is a bisimulation of every kind") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    BeliefModel m = sample_model(seed);
    for (BisimKind kind : kAllKinds) {
      BisimCheck check = check_bisim(m, m, diagonal(m), kind);
      CAPTURE(bisim_kind_name(kind));
      CHECK(check.ok);
      GreatestBisim greatest = greatest_bisim(m, m, kind);
      for (int w = 0; w < m.world_count(); ++w) CHECK(greatest.contains(w, w));
    }
  }
}

TEST_CASE("empty candidate passes vacuously") {
  BeliefModel m = sample_model(9);
  for (BisimKind kind : kAllKinds) CHECK(check_bisim(m, m, {}, kind).ok);
}

TEST_CASE("distributed-belief separation witness") {
  const Fixture& fx = fixture("bot-separation");
  const BeliefModel& left = fx.left;
  const BeliefModel& right = *fx.right;
  const std::vector<std::pair<int, int>> pairs = {
      {left.world_index("w"), right.world_index("w'")},
      {left.world_index("u"), right.world_index("u'1")},
      {left.world_index("u"), right.world_index("u'2")},
  };

  BisimCheck collective = check_bisim(left, right, pairs, BisimKind::Collective);
  CHECK_FALSE(collective.ok);
  CHECK(collective.pair == std::make_pair(left.world_index("w"), right.world_index("w'")));
  CHECK(collective.clause == "forth {a,b}");

  CHECK(check_bisim(left, right, pairs, BisimKind::Cautious).ok);
  CHECK(check_bisim(left, right, pairs, BisimKind::BoldV1).ok);
  CHECK(check_bisim(left, right, pairs, BisimKind::BoldV2).ok);
}

TEST_CASE("greatest bisimulation output passes its own check") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    BeliefModel left = sample_model(100 + i);
    BeliefModel right = sample_model(200 + i);
    if (left.agents() != right.agents()) continue;
    for (BisimKind kind : kAllKinds) {
      GreatestBisim greatest = greatest_bisim(left, right, kind);
      CHECK(check_bisim(left, right, greatest.pairs, kind).ok);
      CHECK(std::is_sorted(greatest.pairs.begin(), greatest.pairs.end()));
      for (const auto& [lw, rw] : greatest.pairs) CHECK(greatest.contains(lw, rw));
    }
  }
}

TEST_CASE("removed in round zero exactly when the atoms disagree") {
  GeneratorConfig cfg;
  cfg.agents = 2;
  cfg.worlds = 4;
  cfg.seed = 31;
  BeliefModel left = generate_model(cfg);
  cfg.seed = 37;
  BeliefModel right = generate_model(cfg);
  GreatestBisim greatest = greatest_bisim(left, right, BisimKind::Collective);
  std::set<std::string> atoms;
  for (const auto& [atom, mask] : left.valuation()) atoms.insert(atom);
  for (const auto& [atom, mask] : right.valuation()) atoms.insert(atom);
  for (int lw = 0; lw < left.world_count(); ++lw)
    for (int rw = 0; rw < right.world_count(); ++rw) {
      bool agree = true;
      for (const std::string& atom : atoms)
        if (mask_has(left.atom_extension(atom), lw) != mask_has(right.atom_extension(atom), rw))
          agree = false;
      auto it = greatest.removed_round.find({lw, rw});
      if (!agree) {
        REQUIRE(it != greatest.removed_round.end());
        CHECK(it->second == 0);
      } else if (it != greatest.removed_round.end()) {
        CHECK(it->second > 0);
      }
    }
}

TEST_CASE("excluded pairs get an evaluation-verified distinguishing formula") {
  for (std::uint64_t i = 0; i < 12; ++i) {
    BeliefModel left = sample_model(300 + i);
    BeliefModel right = sample_model(400 + i);
    if (left.agents() != right.agents()) continue;
    for (BisimKind kind : {BisimKind::Collective, BisimKind::Cautious, BisimKind::BoldV2}) {
      Lang lang = lang_for(kind);
      GreatestBisim greatest = greatest_bisim(left, right, kind);
      for (int lw = 0; lw < left.world_count(); ++lw)
        for (int rw = 0; rw < right.world_count(); ++rw) {
          auto found = distinguishing_formula(left, lw, right, rw, lang);
          if (greatest.contains(lw, rw)) {
            CHECK_FALSE(found.has_value());
          } else {
            REQUIRE(found.has_value());
            CAPTURE(print(*found));
            CHECK(in_language(*found, lang));
            CHECK(eval(left, lw, *found));
            CHECK_FALSE(eval(right, rw, *found));
          }
        }
    }
  }
}

TEST_CASE("the two bold formulations accept the same candidates") {
  Rng rng(55);
  int checked = 0;
  for (std::uint64_t i = 0; i < 500 && checked < 50; ++i) {
    BeliefModel left = sample_model(500 + i);
    BeliefModel right = sample_model(600 + i);
    if (left.agents() != right.agents()) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int lw = 0; lw < left.world_count(); ++lw)
      for (int rw = 0; rw < right.world_count(); ++rw)
        if (rng.chance(0.3)) pairs.emplace_back(lw, rw);
    BisimCheck v1 = check_bisim(left, right, pairs, BisimKind::BoldV1);
    BisimCheck v2 = check_bisim(left, right, pairs, BisimKind::BoldV2);
    CHECK(v1.ok == v2.ok);
    CHECK(greatest_bisim(left, right, BisimKind::BoldV1).pairs ==
          greatest_bisim(left, right, BisimKind::BoldV2).pairs);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("named separation pairs produce the expected distinguishing formulas") {
  {
    const Fixture& fx = fixture("bot-separation");
    auto found = distinguishing_formula(fx.left, fx.left.world_index("w"), *fx.right,
                                        fx.right->world_index("w'"), Lang::D);
    REQUIRE(found.has_value());
    CHECK(in_language(*found, Lang::D));
    CHECK(eval(fx.left, fx.left.world_index("w"), *found));
    CHECK_FALSE(eval(*fx.right, fx.right->world_index("w'"), *found));
  }
  {
    const Fixture& fx = fixture("cautious-separation");
    auto found = distinguishing_formula(fx.left, fx.left.world_index("w"), *fx.right,
                                        fx.right->world_index("w'"), Lang::DCaut);
    REQUIRE(found.has_value());
    CHECK(in_language(*found, Lang::DCaut));
    CHECK(eval(fx.left, fx.left.world_index("w"), *found));
    CHECK_FALSE(eval(*fx.right, fx.right->world_index("w'"), *found));
  }
}

TEST_CASE("differing agent sets are rejected") {
  GeneratorConfig two;
  two.agents = 2;
  GeneratorConfig three;
  three.agents = 3;
  BeliefModel left = generate_model(two);
  BeliefModel right = generate_model(three);
  CHECK_THROWS_AS(check_bisim(left, right, {{0, 0}}, BisimKind::Collective), ModelError);
  CHECK_THROWS_AS(greatest_bisim(left, right, BisimKind::Cautious), ModelError);
}
