#include "doxa/model.hpp"

#include <algorithm>
#include <bit>

namespace doxa {

int mask_size(std::uint64_t mask) { return std::popcount(mask); }

bool mask_has(std::uint64_t mask, int index) {
  return (mask >> index) & 1u;
}

std::vector<int> mask_indices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    int i = std::countr_zero(a);
    int j = std::countr_zero(b);
    if (i != j) return i < j;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // a is a proper prefix of b
}

std::vector<std::uint32_t> submasks_lex(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) out.push_back(s);
  std::sort(out.begin(), out.end(), [](std::uint32_t x, std::uint32_t y) { return mask_lex_less(x, y); });
  return out;
}

BeliefModel::BeliefModel(std::vector<std::string> agents,
                         std::vector<std::string> worlds,
                         std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations,
                         std::map<std::string, std::vector<std::string>> valuation)
    : agents_(std::move(agents)), worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw ModelError("a model needs at least one world");
  if (agents_.empty()) throw ModelError("a model needs at least one agent");
  if (static_cast<int>(agents_.size()) > kMaxAgents)
    throw ModelError("too many agents (cap " + std::to_string(kMaxAgents) + ")");
  if (static_cast<int>(worlds_.size()) > kMaxWorlds)
    throw ModelError("too many worlds (cap " + std::to_string(kMaxWorlds) + ")");

  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (!agent_index_.emplace(agents_[i], static_cast<int>(i)).second)
      throw ModelError("duplicate agent name: " + agents_[i]);
  }
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (!world_index_.emplace(worlds_[i], static_cast<int>(i)).second)
      throw ModelError("duplicate world name: " + worlds_[i]);
  }

  relations_.assign(agents_.size(), std::vector<WorldSet>(worlds_.size(), 0));
  for (const auto& [agent, pairs] : relations) {
    int a = agent_index(agent);
    if (a < 0) throw ModelError("relation for undeclared agent: " + agent);
    for (const auto& [from, to] : pairs) {
      int u = world_index(from);
      int v = world_index(to);
      if (u < 0) throw ModelError("relation uses undeclared world: " + from);
      if (v < 0) throw ModelError("relation uses undeclared world: " + to);
      relations_[a][u] |= WorldSet{1} << v;
    }
  }

  for (const auto& [atom, names] : valuation) {
    if (atom.empty()) throw ModelError("empty atom name in valuation");
    WorldSet set = 0;
    for (const auto& name : names) {
      int w = world_index(name);
      if (w < 0) throw ModelError("valuation of '" + atom + "' uses undeclared world: " + name);
      set |= WorldSet{1} << w;
    }
    valuation_[atom] = set;
  }
}

int BeliefModel::agent_index(const std::string& name) const {
  auto it = agent_index_.find(name);
  return it == agent_index_.end() ? -1 : it->second;
}

int BeliefModel::world_index(const std::string& name) const {
  auto it = world_index_.find(name);
  return it == world_index_.end() ? -1 : it->second;
}

WorldSet BeliefModel::all_worlds() const {
  int n = world_count();
  return n == 64 ? ~WorldSet{0} : (WorldSet{1} << n) - 1;
}

Group BeliefModel::all_agents() const {
  return static_cast<Group>((1u << agent_count()) - 1);
}

void BeliefModel::check_agent(int a) const {
  if (a < 0 || a >= agent_count()) throw ModelError("agent index out of range");
}

void BeliefModel::check_world(int w) const {
  if (w < 0 || w >= world_count()) throw ModelError("world index out of range");
}

WorldSet BeliefModel::conjecture_set(int agent, int world) const {
  check_agent(agent);
  check_world(world);
  return relations_[agent][world];
}

WorldSet BeliefModel::group_conjecture_set(Group g, int world) const {
  check_world(world);
  if (g == 0) throw ModelError("groups are non-empty");
  if (g >= (1u << agent_count())) throw ModelError("group uses agents outside the model");
  WorldSet acc = all_worlds();
  for (Group rest = g; rest != 0; rest &= rest - 1)
    acc &= relations_[std::countr_zero(rest)][world];
  return acc;
}

std::vector<Group> BeliefModel::max_consistent_subgroups(Group g, int world) const {
  check_world(world);
  if (g == 0) throw ModelError("groups are non-empty");
  if (g >= (1u << agent_count())) throw ModelError("group uses agents outside the model");

  std::vector<Group> maximal;
  for (Group s = g; s != 0; s = (s - 1) & g) {
    if (group_conjecture_set(s, world) == 0) continue;
    // s is maximal iff every one-agent extension inside g is inconsistent;
    // consistency only shrinks as the group grows, so this settles every
    // larger superset as well.
    bool is_max = true;
    for (Group rest = g & ~s; rest != 0 && is_max; rest &= rest - 1) {
      Group extended = s | (rest & (~rest + 1));
      if (group_conjecture_set(extended, world) != 0) is_max = false;
    }
    if (is_max) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end(), [](Group x, Group y) { return mask_lex_less(x, y); });
  return maximal;
}

WorldSet BeliefModel::consistent_conjecture_set(Group g, int world) const {
  WorldSet acc = 0;
  for (Group sub : max_consistent_subgroups(g, world)) acc |= group_conjecture_set(sub, world);
  return acc;
}

WorldSet BeliefModel::cautious_successors(Group g, int world) const {
  return consistent_conjecture_set(g, world);
}

std::vector<std::pair<int, int>> BeliefModel::cautious_relation(Group g) const {
  std::vector<std::pair<int, int>> out;
  for (int w = 0; w < world_count(); ++w)
    for (int v : mask_indices(consistent_conjecture_set(g, w))) out.emplace_back(w, v);
  return out;
}

std::vector<WorldSet> BeliefModel::neighbourhood_cores(Group g, int world) const {
  std::vector<WorldSet> cores;
  for (Group sub : max_consistent_subgroups(g, world)) cores.push_back(group_conjecture_set(sub, world));
  std::sort(cores.begin(), cores.end(), [](WorldSet x, WorldSet y) { return mask_lex_less(x, y); });
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  return cores;
}

std::vector<WorldSet> BeliefModel::individual_neighbourhood_core(int agent, int world) const {
  return {conjecture_set(agent, world)};
}

WorldSet BeliefModel::atom_extension(const std::string& atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? 0 : it->second;
}

bool BeliefModel::edge(int agent, int from, int to) const {
  check_world(to);
  return mask_has(conjecture_set(agent, from), to);
}

std::vector<std::pair<int, int>> BeliefModel::relation_pairs(int agent) const {
  check_agent(agent);
  std::vector<std::pair<int, int>> out;
  for (int w = 0; w < world_count(); ++w)
    for (int v : mask_indices(relations_[agent][w])) out.emplace_back(w, v);
  return out;
}

Group BeliefModel::group_of(const std::vector<std::string>& agent_names) const {
  if (agent_names.empty()) throw ModelError("groups are non-empty");
  Group g = 0;
  for (const auto& name : agent_names) {
    int a = agent_index(name);
    if (a < 0) throw ModelError("unknown agent: " + name);
    g |= 1u << a;
  }
  return g;
}

std::string BeliefModel::group_name(Group g) const {
  std::string out = "{";
  bool first = true;
  for (int a : mask_indices(g)) {
    if (!first) out += ",";
    out += agent_name(a);
    first = false;
  }
  return out + "}";
}

bool BeliefModel::operator==(const BeliefModel& other) const {
  return agents_ == other.agents_ && worlds_ == other.worlds_ &&
         relations_ == other.relations_ && valuation_ == other.valuation_;
}

WorldSet ModelAnalysis::group_conjecture_set(Group g, int world) {
  auto key = std::make_pair(g, world);
  auto it = gcs_.find(key);
  if (it != gcs_.end()) return it->second;
  WorldSet v = m_->group_conjecture_set(g, world);
  gcs_.emplace(key, v);
  return v;
}

const std::vector<Group>& ModelAnalysis::max_consistent_subgroups(Group g, int world) {
  auto key = std::make_pair(g, world);
  auto it = mcs_.find(key);
  if (it != mcs_.end()) return it->second;
  return mcs_.emplace(key, m_->max_consistent_subgroups(g, world)).first->second;
}

WorldSet ModelAnalysis::consistent_conjecture_set(Group g, int world) {
  auto key = std::make_pair(g, world);
  auto it = ccs_.find(key);
  if (it != ccs_.end()) return it->second;
  WorldSet acc = 0;
  for (Group sub : max_consistent_subgroups(g, world)) acc |= group_conjecture_set(sub, world);
  ccs_.emplace(key, acc);
  return acc;
}

const std::vector<WorldSet>& ModelAnalysis::neighbourhood_cores(Group g, int world) {
  auto key = std::make_pair(g, world);
  auto it = cores_.find(key);
  if (it != cores_.end()) return it->second;
  std::vector<WorldSet> cores;
  for (Group sub : max_consistent_subgroups(g, world)) cores.push_back(group_conjecture_set(sub, world));
  std::sort(cores.begin(), cores.end(), [](WorldSet x, WorldSet y) { return mask_lex_less(x, y); });
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  return cores_.emplace(key, std::move(cores)).first->second;
}

}  // namespace doxa
