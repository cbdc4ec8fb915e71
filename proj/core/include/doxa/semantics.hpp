#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "doxa/formula.hpp"
#include "doxa/model.hpp"

namespace doxa {

struct BindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bottom-up model checker.  extension() computes the set of worlds
// satisfying a formula, memoized per structurally distinct subformula (the
// printed form is the key), so shared subtrees are evaluated once.  An
// Evaluator owns private caches: cheap to create, not meant to be shared
// across threads.  Atoms missing from the model's valuation are false
// everywhere; modal operators over agents the model does not know throw
// BindingError.
class Evaluator {
public:
  explicit Evaluator(const BeliefModel& m) : m_(&m), analysis_(m) {}

  WorldSet extension(const FormulaPtr& f);
  bool eval(int world, const FormulaPtr& f);
  bool valid(const FormulaPtr& f);  // true in every world of this model

  const BeliefModel& model() const { return *m_; }
  ModelAnalysis& analysis() { return analysis_; }

private:
  Group bind(const std::vector<std::string>& agents);

  const BeliefModel* m_;
  ModelAnalysis analysis_;
  std::unordered_map<std::string, WorldSet> memo_;
};

bool eval(const BeliefModel& m, int world, const FormulaPtr& f);
WorldSet extension(const BeliefModel& m, const FormulaPtr& f);
bool valid_in_model(const BeliefModel& m, const FormulaPtr& f);

// Evaluation transcript for one pointed model: every distinct subformula
// with its extension (post-order, innermost first), plus the maximal
// consistent subgroup family at the point for every group mentioned by a
// modality.  Human-oriented output for the command line's --trace.
struct TraceLine {
  std::string formula;
  std::vector<std::string> worlds;
};
struct GroupTraceLine {
  std::string group;
  std::vector<std::string> subgroups;  // the MCS family at the point, rendered
};
struct Trace {
  std::vector<TraceLine> extensions;
  std::vector<GroupTraceLine> mcs_at_point;
  bool verdict;
};
Trace trace_eval(const BeliefModel& m, int world, const FormulaPtr& f);

}  // namespace doxa
