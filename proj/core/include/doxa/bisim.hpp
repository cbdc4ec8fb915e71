#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doxa/formula.hpp"
#include "doxa/model.hpp"

namespace doxa {

// Which back-and-forth conditions a relation must satisfy.  Collective
// works on the intersection relations (one per group), Cautious on the
// relations behind the cautious modality, and Bold matches successor
// structure at the level of neighbourhood cores.  BoldV1 quantifies over
// maximal consistent subgroups, BoldV2 over their (deduplicated) conjecture
// sets; the two are equivalent and BoldV1 exists to cross-check BoldV2.
enum class BisimKind { Collective, Cautious, BoldV1, BoldV2 };

std::string bisim_kind_name(BisimKind kind);

struct BisimCheck {
  bool ok = true;
  std::pair<int, int> pair{-1, -1};  // first violating pair when !ok
  std::string clause;                // "atom p" / "forth {a,b}" / "back {a,b}"
};

// Verifies a candidate relation (given as (left world, right world) index
// pairs) clause by clause.  Both models must carry the same agent-name set.
// An empty candidate passes vacuously.
BisimCheck check_bisim(const BeliefModel& left, const BeliefModel& right,
                       const std::vector<std::pair<int, int>>& pairs, BisimKind kind);

struct GreatestBisim {
  std::vector<std::pair<int, int>> pairs;            // sorted; may be empty
  std::map<std::pair<int, int>, int> removed_round;  // 0 = atom disagreement
  int rounds = 0;                                    // refinement rounds run

  bool contains(int left_world, int right_world) const;
};

// Largest bisimulation of the given kind: start from all atom-agreeing
// pairs and synchronously delete pairs violating forth/back until stable.
// The per-pair deletion round is kept so a distinguishing formula can be
// replayed from the refinement trace.
GreatestBisim greatest_bisim(const BeliefModel& left, const BeliefModel& right, BisimKind kind);

// A formula of `lang` (one of Lang::D, Lang::DCaut, Lang::DBold) true at
// (left, left_world) and false at (right, right_world), or nullopt when the
// pair sits in the greatest bisimulation of the matching kind.  The result
// is re-checked by evaluation before it is returned; it is not minimized.
std::optional<FormulaPtr> distinguishing_formula(const BeliefModel& left, int left_world,
                                                 const BeliefModel& right, int right_world,
                                                 Lang lang);

}  // namespace doxa
