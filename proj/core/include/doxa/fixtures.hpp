#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doxa/bisim.hpp"
#include "doxa/frames.hpp"
#include "doxa/model.hpp"

namespace doxa {

// Hand-encoded benchmark models with their documented expectations.  The
// expectations are data for the reproduction suites: every claim stored here
// is re-checked through the ordinary evaluation / bisimulation / frame
// machinery, never assumed.

struct TruthExpectation {
  std::string formula;  // concrete syntax, fed to the parser
  std::string world;
  bool expected;
};

struct BisimExpectation {
  BisimKind kind;
  std::string left_world;
  std::string right_world;
  bool related;  // expected membership in the greatest bisimulation
};

struct CautiousRelationExpectation {
  std::vector<std::string> group;
  std::vector<std::pair<std::string, std::string>> pairs;  // the full relation
};

struct PreservationExpectation {
  GroupNotion notion;
  std::set<RelCond> premise;          // satisfied by every member's relation
  std::vector<RelCond> violated_rel;  // failed by the full group's cautious relation
  std::vector<NbCond> violated_nb;    // failed by the full group's neighbourhood
};

struct Fixture {
  Fixture(std::string id_, BeliefModel left_) : id(std::move(id_)), left(std::move(left_)) {}

  std::string id;
  BeliefModel left;
  std::optional<BeliefModel> right;           // second model of a two-model fixture
  std::map<std::string, std::string> points;  // point name -> world name (in left)
  std::vector<TruthExpectation> truths;        // evaluated in left
  std::vector<TruthExpectation> right_truths;  // evaluated in right
  std::vector<BisimExpectation> bisims;        // left vs right
  std::vector<CautiousRelationExpectation> cautious_relations;  // in left
  std::optional<PreservationExpectation> preservation;          // left only
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& id);  // throws std::out_of_range if unknown

}  // namespace doxa
