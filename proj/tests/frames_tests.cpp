#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "doxa/fixtures.hpp"
#include "doxa/frames.hpp"
#include "doxa/generator.hpp"

using namespace doxa;

namespace {

// Quantifier-by-quantifier restatement of each relational condition,
// independent of the bitmask tricks in the library.
bool naive_relational(const std::vector<WorldSet>& rel, int n, RelCond c) {
  auto has = [&](int w, int u) { return mask_has(rel[static_cast<size_t>(w)], u); };
  switch (c) {
    case RelCond::Serial:
      for (int w = 0; w < n; ++w) {
        bool any = false;
        for (int u = 0; u < n; ++u) any = any || has(w, u);
        if (!any) return false;
      }
      return true;
    case RelCond::Reflexive:
      for (int w = 0; w < n; ++w)
        if (!has(w, w)) return false;
      return true;
    case RelCond::Transitive:
      for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v)
            if (has(w, u) && has(u, v) && !has(w, v)) return false;
      return true;
    case RelCond::Symmetric:
      for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
          if (has(w, u) && !has(u, w)) return false;
      return true;
    case RelCond::Euclidean:
      for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v)
            if (has(w, u) && has(w, v) && !has(u, v)) return false;
      return true;
  }
  return true;
}

std::vector<WorldSet> random_relation(Rng& rng, int n, double density) {
  std::vector<WorldSet> rel(static_cast<size_t>(n), 0);
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      if (rng.chance(density)) rel[static_cast<size_t>(w)] |= WorldSet{1} << u;
  return rel;
}

// A witness is only believable if plugging it back into the condition
// exhibits the violation.
void check_witness(const std::vector<WorldSet>& rel, RelCond c, const std::vector<int>& w) {
  auto has = [&](int a, int b) { return mask_has(rel[static_cast<size_t>(a)], b); };
  switch (c) {
    case RelCond::Serial:
      REQUIRE(w.size() == 1);
      CHECK(rel[static_cast<size_t>(w[0])] == 0);
      break;
    case RelCond::Reflexive:
      REQUIRE(w.size() == 1);
      CHECK_FALSE(has(w[0], w[0]));
      break;
    case RelCond::Transitive:
      REQUIRE(w.size() == 3);
      CHECK(has(w[0], w[1]));
      CHECK(has(w[1], w[2]));
      CHECK_FALSE(has(w[0], w[2]));
      break;
    case RelCond::Symmetric:
      REQUIRE(w.size() == 2);
      CHECK(has(w[0], w[1]));
      CHECK_FALSE(has(w[1], w[0]));
      break;
    case RelCond::Euclidean:
      REQUIRE(w.size() == 3);
      CHECK(has(w[0], w[1]));
      CHECK(has(w[0], w[2]));
      CHECK_FALSE(has(w[1], w[2]));
      break;
  }
}

// Materialized neighbourhood of one subject at one world: the upward
// closure (within the powerset of W) of its conjecture-set cores.
std::set<WorldSet> materialize(const BeliefModel& m, const NbSubject& subject, int w) {
  std::vector<WorldSet> cores;
  if (subject.individual)
    cores = m.individual_neighbourhood_core(subject.agent, w);
  else
    cores = m.neighbourhood_cores(subject.group, w);
  std::set<WorldSet> out;
  const WorldSet full = m.world_count() == 64 ? ~WorldSet{0}
                                              : (WorldSet{1} << m.world_count()) - 1;
  for (WorldSet u = 0;; ++u) {
    for (WorldSet core : cores)
      if ((core & ~u) == 0) {
        out.insert(u);
        break;
      }
    if (u == full) break;
  }
  return out;
}

// Table-style restatement of the neighbourhood conditions against the
// materialized family.  n(w) is the neighbourhood of world w.
bool naive_neighbourhood(const BeliefModel& m, const NbSubject& subject, NbCond c) {
  const int count = m.world_count();
  const WorldSet full = count == 64 ? ~WorldSet{0} : (WorldSet{1} << count) - 1;
  std::vector<std::set<WorldSet>> n(static_cast<size_t>(count));
  for (int w = 0; w < count; ++w) n[static_cast<size_t>(w)] = materialize(m, subject, w);
  auto in = [&](int w, WorldSet u) { return n[static_cast<size_t>(w)].count(u) > 0; };
  for (int w = 0; w < count; ++w)
    for (WorldSet u = 0;; ++u) {
      switch (c) {
        case NbCond::SerialN:
          if (in(w, u) && in(w, full & ~u)) return false;
          break;
        case NbCond::ReflexiveN:
          if (in(w, u) && !mask_has(u, w)) return false;
          break;
        case NbCond::TransitiveN: {
          WorldSet box = 0;
          for (int v = 0; v < count; ++v)
            if (in(v, u)) box |= WorldSet{1} << v;
          if (in(w, u) && !in(w, box)) return false;
          break;
        }
        case NbCond::SymmetricN: {
          if (mask_has(u, w)) {
            WorldSet safe = 0;
            for (int v = 0; v < count; ++v)
              if (!in(v, full & ~u)) safe |= WorldSet{1} << v;
            if (!in(w, safe)) return false;
          }
          break;
        }
        case NbCond::EuclideanN: {
          if (!in(w, u)) {
            WorldSet outside = 0;
            for (int v = 0; v < count; ++v)
              if (!in(v, u)) outside |= WorldSet{1} << v;
            if (!in(w, outside)) return false;
          }
          break;
        }
      }
      if (u == full) break;
    }
  return true;
}

BeliefModel small_model(std::uint64_t seed, std::set<RelCond> conds = {}) {
  GeneratorConfig cfg;
  Rng rng(seed);
  cfg.worlds = 2 + static_cast<int>(rng.below(3));
  cfg.agents = 2;
  cfg.density = 0.2 + 0.1 * static_cast<double>(rng.below(3));
  cfg.conditions = std::move(conds);
  cfg.seed = rng.next();
  return generate_model(cfg);
}

}  // namespace

TEST_CASE("relational checks agree with the naive restatement") {
  Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng.below(6));
    std::vector<WorldSet> rel = random_relation(rng, n, 0.3);
    for (RelCond c : kRelConds) {
      RelCheck check = check_relational(rel, n, c);
      CHECK(check.holds == naive_relational(rel, n, c));
      if (!check.holds) check_witness(rel, c, check.witness);
    }
  }
}

TEST_CASE("relational checks on handmade relations") {
  // w1 -> w2 -> w3 arranged as indices 0,1,2.
  std::vector<WorldSet> chain = {0b010, 0b100, 0b000};
  CHECK_FALSE(check_relational(chain, 3, RelCond::Serial).holds);
  CHECK(check_relational(chain, 2, RelCond::Serial).holds);
  CHECK_FALSE(check_relational(chain, 3, RelCond::Transitive).holds);
  CHECK(check_relational({0b11, 0b11}, 2, RelCond::Transitive).holds);
  CHECK(check_relational({0b01, 0b10}, 2, RelCond::Reflexive).holds);
  CHECK_FALSE(check_relational({0b10, 0b10}, 2, RelCond::Symmetric).holds);
  CHECK(check_relational({0b10, 0b01}, 2, RelCond::Symmetric).holds);
  CHECK_FALSE(check_relational({0b110, 0b010, 0b100}, 3, RelCond::Euclidean).holds);
  CHECK(check_relational({}, 0, RelCond::Serial).holds);
}

TEST_CASE("neighbourhood checks agree with the naive restatement") {
  const NbCond all[] = {NbCond::SerialN, NbCond::ReflexiveN, NbCond::TransitiveN,
                        NbCond::SymmetricN, NbCond::EuclideanN};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    BeliefModel m = small_model(1000 + seed);
    if (m.world_count() > 4) continue;
    std::vector<NbSubject> subjects;
    for (int a = 0; a < m.agent_count(); ++a) subjects.push_back(NbSubject::Agent(a));
    subjects.push_back(NbSubject::GroupOf(m.all_agents()));
    for (const NbSubject& subject : subjects)
      for (NbCond c : all) {
        NbCheck check = check_neighbourhood(m, subject, c);
        CAPTURE(seed);
        CAPTURE(nb_cond_name(c));
        CHECK(check.holds == naive_neighbourhood(m, subject, c));
        if (!check.holds) CHECK(check.world >= 0);
      }
  }
}

TEST_CASE("neighbourhood checks reject oversized models") {
  GeneratorConfig cfg;
  cfg.worlds = kNeighbourhoodWorldCap + 1;
  cfg.agents = 2;
  BeliefModel m = generate_model(cfg);
  CHECK_THROWS_AS(check_neighbourhood(m, NbSubject::Agent(0), NbCond::SerialN), FrameError);
}

TEST_CASE("preservation report is a TSV with one row per group and condition") {
  const Fixture& fx = fixture("cautious-f1");
  std::vector<PreservationRow> rows = preservation_report(fx.left, GroupNotion::Cautious);
  CHECK_FALSE(rows.empty());
  std::string tsv = format_preservation_report(rows);
  CHECK(tsv.rfind("group\tmembers_satisfy\tproperty\tverdict\twitness", 0) == 0);
  bool found = false;
  for (const PreservationRow& row : rows)
    if (row.group_text == "{a,b}" && row.property == "t" && !row.preserved) found = true;
  CHECK(found);
  for (const PreservationRow& row : rows) {
    CHECK(row.preserved == row.witness.empty());
    for (char ch : row.member_conditions) CHECK(std::string("lrtse").find(ch) != std::string::npos);
  }
}

TEST_CASE("condition names and counterparts") {
  CHECK(rel_cond_letter(RelCond::Serial) == 'l');
  CHECK(rel_cond_letter(RelCond::Reflexive) == 'r');
  CHECK(rel_cond_letter(RelCond::Transitive) == 't');
  CHECK(rel_cond_letter(RelCond::Symmetric) == 's');
  CHECK(rel_cond_letter(RelCond::Euclidean) == 'e');
  CHECK(nb_cond_name(NbCond::SerialN) == "l_N");
  CHECK(nb_cond_name(NbCond::EuclideanN) == "e_N");
  for (RelCond c : kRelConds)
    CHECK(nb_cond_name(nb_counterpart(c)) == std::string(1, rel_cond_letter(c)) + "_N");
}

TEST_CASE("frame class names") {
  CHECK(frame_class_name({}) == "K");
  CHECK(frame_class_name({RelCond::Serial}) == "D");
  CHECK(frame_class_name({RelCond::Reflexive}) == "T");
  CHECK(frame_class_name({RelCond::Transitive}) == "K4");
  CHECK(frame_class_name({RelCond::Symmetric}) == "KB");
  CHECK(frame_class_name({RelCond::Euclidean}) == "K5");
  CHECK(frame_class_name({RelCond::Reflexive, RelCond::Transitive}) == "S4");
  CHECK(frame_class_name({RelCond::Reflexive, RelCond::Euclidean}) == "S5");
  CHECK(frame_class_name({RelCond::Serial, RelCond::Transitive, RelCond::Euclidean}) == "KD45");
  CHECK(frame_class_name({RelCond::Reflexive, RelCond::Symmetric}) == "B");
  CHECK(frame_class_name({RelCond::Serial, RelCond::Symmetric, RelCond::Euclidean}) == "S5");
  CHECK(frame_class_name({RelCond::Reflexive, RelCond::Serial, RelCond::Transitive}) == "S4");
}

TEST_CASE("frame class parsing") {
  CHECK(parse_frame_class("S5") == std::set<RelCond>{RelCond::Reflexive, RelCond::Euclidean});
  CHECK(parse_frame_class("re") == std::set<RelCond>{RelCond::Reflexive, RelCond::Euclidean});
  CHECK(parse_frame_class("r,e") == std::set<RelCond>{RelCond::Reflexive, RelCond::Euclidean});
  CHECK(parse_frame_class("lte") ==
        std::set<RelCond>{RelCond::Serial, RelCond::Transitive, RelCond::Euclidean});
  CHECK(parse_frame_class("K") == std::set<RelCond>{});
  CHECK(parse_frame_class("KD45") ==
        std::set<RelCond>{RelCond::Serial, RelCond::Transitive, RelCond::Euclidean});
  CHECK_THROWS_AS(parse_frame_class("X9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_frame_class("rx"), std::invalid_argument);
  for (std::uint64_t g = 0; g < 32; ++g) {
    std::set<RelCond> conds;
    for (int b = 0; b < 5; ++b)
      if (g & (1u << b)) conds.insert(kRelConds[b]);
    CHECK(frame_class_name(parse_frame_class(frame_class_name(conds))) == frame_class_name(conds));
  }
}
