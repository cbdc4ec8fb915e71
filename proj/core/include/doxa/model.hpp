#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace doxa {

// A model holds at most 64 worlds and 16 agents, so a set of worlds fits in
// one 64-bit mask and a group of agents in a 32-bit mask.  All set algebra
// below (intersection of relations, subset tests, subgroup enumeration) is
// plain bit arithmetic on these masks.
using WorldSet = std::uint64_t;
using Group = std::uint32_t;

inline constexpr int kMaxAgents = 16;
inline constexpr int kMaxWorlds = 64;

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int mask_size(std::uint64_t mask);
bool mask_has(std::uint64_t mask, int index);
std::vector<int> mask_indices(std::uint64_t mask);

// Order two masks by their index sequences (lowest first), not by numeric
// value: {0,2} sorts before {1}.  Used wherever sets of groups or sets of
// world-sets must come out in a reproducible order.
bool mask_lex_less(std::uint64_t a, std::uint64_t b);

// All non-empty subsets of `mask`, in the order above.
std::vector<std::uint32_t> submasks_lex(std::uint32_t mask);

class BeliefModel {
public:
  // Relations are given per agent name as ordered (from, to) world-name
  // pairs; the valuation maps an atom to the worlds where it is true.
  // Agents/worlds must be non-empty lists of unique names; every name used
  // in a relation or the valuation must be declared.
  BeliefModel(std::vector<std::string> agents,
              std::vector<std::string> worlds,
              std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations,
              std::map<std::string, std::vector<std::string>> valuation);

  int agent_count() const { return static_cast<int>(agents_.size()); }
  int world_count() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& worlds() const { return worlds_; }

  // Name lookup; -1 when absent.
  int agent_index(const std::string& name) const;
  int world_index(const std::string& name) const;
  const std::string& agent_name(int a) const { return agents_.at(a); }
  const std::string& world_name(int w) const { return worlds_.at(w); }

  WorldSet all_worlds() const;
  Group all_agents() const;

  // Successor set of one agent at one world; the conjecture set.
  WorldSet conjecture_set(int agent, int world) const;
  // Intersection over the group's members.  Throws on the empty group.
  WorldSet group_conjecture_set(Group g, int world) const;

  // Inclusion-maximal consistent (non-empty conjecture set) subgroups of g
  // at `world`, found by walking all non-empty subsets of g.  Sorted
  // lexicographically.  Empty exactly when every member of g is
  // individually inconsistent at `world`.
  std::vector<Group> max_consistent_subgroups(Group g, int world) const;

  // Union of the conjecture sets of the maximal consistent subgroups.
  WorldSet consistent_conjecture_set(Group g, int world) const;

  // Per-world rows of the relation behind the cautious group modality:
  // w -> consistent_conjecture_set(g, w).
  WorldSet cautious_successors(Group g, int world) const;
  std::vector<std::pair<int, int>> cautious_relation(Group g) const;

  // Minimal elements of the group neighbourhood at a world: the conjecture
  // sets of the maximal consistent subgroups, deduplicated and sorted.  The
  // neighbourhood itself is their upward closure and is never materialized;
  // membership of U is "some core is a subset of U".  Group cores never
  // contain the empty set.
  std::vector<WorldSet> neighbourhood_cores(Group g, int world) const;
  std::vector<WorldSet> mcs_targets(Group g, int world) const { return neighbourhood_cores(g, world); }

  // The individual neighbourhood has a single core: the agent's conjecture
  // set, which MAY be empty.  (For an inconsistent agent this differs from
  // the singleton-group neighbourhood, which has no cores at all.)
  std::vector<WorldSet> individual_neighbourhood_core(int agent, int world) const;

  WorldSet atom_extension(const std::string& atom) const;  // 0 when unknown
  const std::map<std::string, WorldSet>& valuation() const { return valuation_; }

  bool edge(int agent, int from, int to) const;
  std::vector<std::pair<int, int>> relation_pairs(int agent) const;
  const std::vector<WorldSet>& relation_rows(int agent) const { return relations_.at(agent); }

  Group group_of(const std::vector<std::string>& agent_names) const;  // throws on unknown / empty
  std::string group_name(Group g) const;                              // "{a,b}"

  bool operator==(const BeliefModel& other) const;

private:
  void check_agent(int a) const;
  void check_world(int w) const;

  std::vector<std::string> agents_;
  std::vector<std::string> worlds_;
  std::map<std::string, int> agent_index_;
  std::map<std::string, int> world_index_;
  std::vector<std::vector<WorldSet>> relations_;  // [agent][world] -> successors
  std::map<std::string, WorldSet> valuation_;
};

// Memoizing wrapper for the derived per-(group, world) objects.  A
// BeliefModel is immutable and its queries are pure but recompute from
// scratch; evaluation and bisimulation loops construct one of these per run
// and share it internally.  Not safe for concurrent use; make one per
// thread instead.
class ModelAnalysis {
public:
  explicit ModelAnalysis(const BeliefModel& m) : m_(&m) {}

  const BeliefModel& model() const { return *m_; }
  WorldSet group_conjecture_set(Group g, int world);
  const std::vector<Group>& max_consistent_subgroups(Group g, int world);
  WorldSet consistent_conjecture_set(Group g, int world);
  const std::vector<WorldSet>& neighbourhood_cores(Group g, int world);

private:
  const BeliefModel* m_;
  std::map<std::pair<Group, int>, WorldSet> gcs_;
  std::map<std::pair<Group, int>, std::vector<Group>> mcs_;
  std::map<std::pair<Group, int>, WorldSet> ccs_;
  std::map<std::pair<Group, int>, std::vector<WorldSet>> cores_;
};

}  // namespace doxa
