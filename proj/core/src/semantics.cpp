#include "doxa/semantics.hpp"

#include <algorithm>

namespace doxa {

Group Evaluator::bind(const std::vector<std::string>& agents) {
  Group g = 0;
  for (const auto& name : agents) {
    int a = m_->agent_index(name);
    if (a < 0) throw BindingError("formula mentions unknown agent: " + name);
    g |= 1u << a;
  }
  return g;
}

WorldSet Evaluator::extension(const FormulaPtr& f) {
  std::string key = print(f);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const WorldSet all = m_->all_worlds();
  WorldSet out = 0;
  switch (f->kind) {
    case Kind::Atom:
      out = m_->atom_extension(f->atom);
      break;
    case Kind::Top:
      out = all;
      break;
    case Kind::Bot:
      out = 0;
      break;
    case Kind::Not:
      out = all & ~extension(f->lhs);
      break;
    case Kind::And:
      out = extension(f->lhs) & extension(f->rhs);
      break;
    case Kind::Or:
      out = extension(f->lhs) | extension(f->rhs);
      break;
    case Kind::Imp:
      out = (all & ~extension(f->lhs)) | extension(f->rhs);
      break;
    case Kind::Iff: {
      WorldSet a = extension(f->lhs), b = extension(f->rhs);
      out = all & ~(a ^ b);
      break;
    }
    case Kind::B: {
      int agent = m_->agent_index(f->agents[0]);
      if (agent < 0) throw BindingError("formula mentions unknown agent: " + f->agents[0]);
      WorldSet body = extension(f->lhs);
      for (int w = 0; w < m_->world_count(); ++w)
        if ((m_->conjecture_set(agent, w) & ~body) == 0) out |= WorldSet{1} << w;
      break;
    }
    case Kind::D: {
      Group g = bind(f->agents);
      WorldSet body = extension(f->lhs);
      for (int w = 0; w < m_->world_count(); ++w)
        if ((analysis_.group_conjecture_set(g, w) & ~body) == 0) out |= WorldSet{1} << w;
      break;
    }
    case Kind::DC: {
      // Equivalent per-world reading: the union of the maximal consistent
      // subgroups' conjecture sets sits inside the body's extension.
      Group g = bind(f->agents);
      WorldSet body = extension(f->lhs);
      for (int w = 0; w < m_->world_count(); ++w)
        if ((analysis_.consistent_conjecture_set(g, w) & ~body) == 0) out |= WorldSet{1} << w;
      break;
    }
    case Kind::DB: {
      // Existential over the neighbourhood cores; false when the family is
      // empty (every member individually inconsistent).
      Group g = bind(f->agents);
      WorldSet body = extension(f->lhs);
      for (int w = 0; w < m_->world_count(); ++w) {
        for (WorldSet core : analysis_.neighbourhood_cores(g, w)) {
          if ((core & ~body) == 0) {
            out |= WorldSet{1} << w;
            break;
          }
        }
      }
      break;
    }
    case Kind::Inc: {
      Group g = bind(f->agents);
      for (int w = 0; w < m_->world_count(); ++w)
        if (analysis_.group_conjecture_set(g, w) == 0) out |= WorldSet{1} << w;
      break;
    }
  }
  memo_.emplace(std::move(key), out);
  return out;
}

bool Evaluator::eval(int world, const FormulaPtr& f) {
  if (world < 0 || world >= m_->world_count()) throw ModelError("world index out of range");
  return mask_has(extension(f), world);
}

bool Evaluator::valid(const FormulaPtr& f) { return extension(f) == m_->all_worlds(); }

bool eval(const BeliefModel& m, int world, const FormulaPtr& f) {
  Evaluator ev(m);
  return ev.eval(world, f);
}

WorldSet extension(const BeliefModel& m, const FormulaPtr& f) {
  Evaluator ev(m);
  return ev.extension(f);
}

bool valid_in_model(const BeliefModel& m, const FormulaPtr& f) {
  Evaluator ev(m);
  return ev.valid(f);
}

namespace {

void collect_postorder(const FormulaPtr& f, std::vector<FormulaPtr>& order,
                       std::vector<std::string>& seen) {
  if (f->lhs) collect_postorder(f->lhs, order, seen);
  if (f->rhs) collect_postorder(f->rhs, order, seen);
  std::string text = print(f);
  if (std::find(seen.begin(), seen.end(), text) == seen.end()) {
    seen.push_back(text);
    order.push_back(f);
  }
}

void collect_groups(const FormulaPtr& f, std::vector<std::vector<std::string>>& groups) {
  switch (f->kind) {
    case Kind::B:
    case Kind::D:
    case Kind::DC:
    case Kind::DB:
    case Kind::Inc:
      if (std::find(groups.begin(), groups.end(), f->agents) == groups.end())
        groups.push_back(f->agents);
      break;
    default:
      break;
  }
  if (f->lhs) collect_groups(f->lhs, groups);
  if (f->rhs) collect_groups(f->rhs, groups);
}

}  // namespace

Trace trace_eval(const BeliefModel& m, int world, const FormulaPtr& f) {
  Evaluator ev(m);
  Trace tr;
  tr.verdict = ev.eval(world, f);

  std::vector<FormulaPtr> order;
  std::vector<std::string> seen;
  collect_postorder(f, order, seen);
  for (const auto& sub : order) {
    TraceLine line;
    line.formula = print(sub);
    for (int w : mask_indices(ev.extension(sub))) line.worlds.push_back(m.world_name(w));
    tr.extensions.push_back(std::move(line));
  }

  std::vector<std::vector<std::string>> groups;
  collect_groups(f, groups);
  for (const auto& agents : groups) {
    Group g = m.group_of(agents);
    GroupTraceLine line;
    line.group = m.group_name(g);
    for (Group sub : m.max_consistent_subgroups(g, world)) line.subgroups.push_back(m.group_name(sub));
    tr.mcs_at_point.push_back(std::move(line));
  }
  return tr;
}

}  // namespace doxa
