#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doxa/model.hpp"

namespace doxa {

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relational frame conditions, written l r t s e in reports and class
// strings: serial, reflexive, transitive, symmetric, euclidean.
enum class RelCond { Serial, Reflexive, Transitive, Symmetric, Euclidean };

// Their neighbourhood-level counterparts, written l_N r_N t_N s_N e_N.
enum class NbCond { SerialN, ReflexiveN, TransitiveN, SymmetricN, EuclideanN };

inline constexpr RelCond kRelConds[] = {RelCond::Serial, RelCond::Reflexive, RelCond::Transitive,
                                        RelCond::Symmetric, RelCond::Euclidean};

char rel_cond_letter(RelCond c);
std::string nb_cond_name(NbCond c);
NbCond nb_counterpart(RelCond c);

struct RelCheck {
  bool holds = true;
  std::vector<int> witness;  // offending world tuple when !holds
};

// rel[w] is the successor set of world w; world_count bounds the indices.
RelCheck check_relational(const std::vector<WorldSet>& rel, int world_count, RelCond c);

// What a neighbourhood condition is checked against: one agent's
// single-core neighbourhood, or a group's core family.
struct NbSubject {
  bool individual;
  int agent;
  Group group;
  static NbSubject Agent(int a) { return {true, a, 0}; }
  static NbSubject GroupOf(Group g) { return {false, -1, g}; }
};

struct NbCheck {
  bool holds = true;
  int world = -1;   // offending world when !holds
  WorldSet set = 0; // offending subset U
};

// Checks the condition clause literally, quantifying U over the full
// powerset of worlds; membership of U in a neighbourhood is "some core is
// contained in U".  Models larger than 12 worlds are rejected.
NbCheck check_neighbourhood(const BeliefModel& m, const NbSubject& subject, NbCond c);

inline constexpr int kNeighbourhoodWorldCap = 12;

// Preservation: for every group whose members all individually satisfy a
// condition, does the group-level object (cautious relation, or the group
// neighbourhood) still satisfy it?
enum class GroupNotion { Cautious, Bold };

struct PreservationRow {
  Group group = 0;
  std::string group_text;
  std::string member_conditions;  // letters all members satisfy, e.g. "lte"
  std::string property;           // the condition checked, "t" or "t_N"
  bool preserved = true;
  std::string witness;            // rendering of the violation, empty if none
};

std::vector<PreservationRow> preservation_report(const BeliefModel& m, GroupNotion notion);
std::string format_preservation_report(const std::vector<PreservationRow>& rows);  // TSV

// Generic modal-logic name of a condition combination (K, D, T, K4, KB,
// K5, KD4, KDB, KD5, S4, B, S5, K4B, K45, KD45); equivalent combinations
// share a name.
std::string frame_class_name(const std::set<RelCond>& conds);

// Accepts a canonical name ("S5") or a condition list ("re", "r,e").
std::set<RelCond> parse_frame_class(const std::string& text);

}  // namespace doxa
