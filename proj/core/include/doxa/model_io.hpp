#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "doxa/model.hpp"

namespace doxa {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk model format (JSON, UTF-8):
//
//   { "agents": ["a","b"], "worlds": ["w","u"],
//     "relations": { "a": [["w","u"],["u","u"]], "b": [["w","u"],["u","u"]] },
//     "valuation": { "p": ["w"] }, "points": { "main": "w" } }
//
// "agents" and "worlds" are required; "relations", "valuation" and
// "points" default to empty (an agent without a relations entry has the
// empty relation).  Any other key is an error.  Saving always writes all
// five keys, so canonical files round-trip byte-for-byte through
// load + save.
struct LoadedModel {
  BeliefModel model;
  std::map<std::string, int> points;  // named evaluation points
};

LoadedModel parse_model_text(const std::string& text);
LoadedModel load_model(const std::string& path);

std::string model_to_text(const BeliefModel& m, const std::map<std::string, int>& points = {});
void save_model(const BeliefModel& m, const std::string& path,
                const std::map<std::string, int>& points = {});

}  // namespace doxa
