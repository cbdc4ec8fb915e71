#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "doxa/fixtures.hpp"
#include "doxa/frames.hpp"
#include "doxa/generator.hpp"
#include "doxa/model_io.hpp"
#include "doxa/reproduce.hpp"

using namespace doxa;

namespace {

#ifndef DOXA_DATA_DIR
#define DOXA_DATA_DIR "data"
#endif

const char* const kDataDir = DOXA_DATA_DIR;

}  // namespace

TEST_CASE("models survive a save and reload round trip") {
  for (const Fixture& fx : fixtures()) {
    std::map<std::string, int> points;
    for (const auto& [name, world] : fx.points) points[name] = fx.left.world_index(world);
    std::string text = model_to_text(fx.left, points);
    LoadedModel loaded = parse_model_text(text);
    CHECK(loaded.model == fx.left);
    CHECK(loaded.points == points);
    // A canonical file reprints byte for byte.
    CHECK(model_to_text(loaded.model, loaded.points) == text);
    if (fx.right) {
      LoadedModel other = parse_model_text(model_to_text(*fx.right));
      CHECK(other.model == *fx.right);
    }
  }
}

TEST_CASE("malformed model documents are rejected") {
  CHECK_THROWS_AS(parse_model_text("not json"), IoError);
  CHECK_THROWS_AS(parse_model_text("[]"), IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"worlds": ["w1"]})"), IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a"]})"), IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a"], "worlds": ["w1"], "extra": 1})"),
                  IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a"], "worlds": ["w1"],
                                       "relations": {"a": [["w1"]]}})"),
                  IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a"], "worlds": ["w1"],
                                       "relations": {"a": [["w1", "w9"]]}})"),
                  IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a"], "worlds": ["w1"],
                                       "relations": {"z": []}})"),
                  IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a"], "worlds": ["w1"],
                                       "valuation": {"p": ["w9"]}})"),
                  IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a"], "worlds": ["w1"],
                                       "points": {"main": "w9"}})"),
                  IoError);
  CHECK_THROWS_AS(parse_model_text(R"({"agents": ["a", "a"], "worlds": ["w1"]})"), IoError);
  CHECK_THROWS_AS(load_model("/nonexistent/path/model.json"), IoError);
}

TEST_CASE("the shipped example model loads") {
  LoadedModel loaded = load_model(std::string(kDataDir) + "/example.json");
  CHECK(loaded.model.world_count() == 4);
  CHECK(loaded.model.agent_count() == 3);
  CHECK(loaded.model == fixture("example").left);
  REQUIRE(loaded.points.count("main") == 1);
  CHECK(loaded.points.at("main") == loaded.model.world_index("w1"));
}

TEST_CASE("fixture registry") {
  std::set<std::string> ids;
  for (const Fixture& fx : fixtures()) ids.insert(fx.id);
  CHECK(ids.size() == fixtures().size());
  CHECK(fixtures().size() == 17);
  CHECK(fixture("example").left.world_count() == 4);
  CHECK_THROWS_AS(fixture("no-such-fixture"), std::out_of_range);
}

TEST_CASE("generation is deterministic in the seed") {
  GeneratorConfig cfg;
  cfg.worlds = 5;
  cfg.agents = 3;
  cfg.seed = 99;
  cfg.conditions = parse_frame_class("KD45");
  BeliefModel first = generate_model(cfg);
  BeliefModel second = generate_model(cfg);
  CHECK(first == second);
  cfg.seed = 100;
  CHECK_FALSE(generate_model(cfg) == first);
}

TEST_CASE("generated models satisfy the requested frame class") {
  GeneratorConfig cfg;
  cfg.worlds = 5;
  cfg.agents = 2;
  cfg.conditions = parse_frame_class("KD45");
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    cfg.seed = seed;
    BeliefModel m = generate_model(cfg);
    for (int a = 0; a < m.agent_count(); ++a)
      for (RelCond c : cfg.conditions)
        CHECK(check_relational(m.relation_rows(a), m.world_count(), c).holds);
  }
}

TEST_CASE("reflexive euclidean generation stays sound") {
  GeneratorConfig cfg;
  cfg.worlds = 6;
  cfg.agents = 2;
  cfg.conditions = parse_frame_class("S5");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    BeliefModel m = generate_model(cfg);
    for (int a = 0; a < m.agent_count(); ++a) {
      CHECK(check_relational(m.relation_rows(a), m.world_count(), RelCond::Reflexive).holds);
      CHECK(check_relational(m.relation_rows(a), m.world_count(), RelCond::Euclidean).holds);
    }
  }
}

TEST_CASE("out-of-range generator configs are rejected") {
  GeneratorConfig cfg;
  cfg.worlds = 0;
  CHECK_THROWS_AS(generate_model(cfg), GenerationError);
  cfg.worlds = kMaxWorlds + 1;
  CHECK_THROWS_AS(generate_model(cfg), GenerationError);
  cfg.worlds = 4;
  cfg.agents = 0;
  CHECK_THROWS_AS(generate_model(cfg), GenerationError);
  cfg.agents = kMaxAgents + 1;
  CHECK_THROWS_AS(generate_model(cfg), GenerationError);
}

TEST_CASE("random formulas respect language and depth") {
  const std::vector<std::string> atoms = {"p", "q"};
  const std::vector<std::string> agents = {"a", "b"};
  const Lang langs[] = {Lang::D,        Lang::DCaut,    Lang::DBold,
                        Lang::DCautInc, Lang::DBoldInc, Lang::Full};
  Rng rng(2024);
  for (Lang lang : langs)
    for (int i = 0; i < 100; ++i) {
      FormulaPtr f = random_formula(rng, lang, 2, atoms, agents);
      CAPTURE(lang_name(lang));
      CAPTURE(print(f));
      CHECK(in_language(f, lang));
      CHECK(modal_depth(f) <= 2);
    }
  Rng left(7);
  Rng right(7);
  for (int i = 0; i < 50; ++i)
    CHECK(print(random_formula(left, Lang::Full, 2, atoms, agents)) ==
          print(random_formula(right, Lang::Full, 2, atoms, agents)));
}

TEST_CASE("reproduction registry answers filters") {
  SuiteOptions tiny;
  tiny.samples = 2;
  std::vector<SuiteResult> all = run_suites("", tiny);
  CHECK(all.size() == 16);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].id < all[i].id);
  for (const SuiteResult& suite : all) {
    CAPTURE(suite.id);
    CAPTURE(suite.detail);
    CHECK(suite.passed);
  }
  CHECK(run_suites("no-such-suite", tiny).empty());
  std::vector<SuiteResult> one = run_suites("c02", tiny);
  REQUIRE(one.size() == 1);
  CHECK(one[0].id == "c02");
  CHECK(one[0].passed);
  CHECK_FALSE(one[0].title.empty());
}
