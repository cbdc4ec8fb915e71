#include "doxa/bisim.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <set>
#include <stdexcept>

#include "doxa/semantics.hpp"

namespace doxa {

std::string bisim_kind_name(BisimKind kind) {
  switch (kind) {
    case BisimKind::Collective: return "collective";
    case BisimKind::Cautious: return "cautious";
    case BisimKind::BoldV1: return "bold_v1";
    case BisimKind::BoldV2: return "bold_v2";
  }
  return "?";
}

namespace {

// Shared state for one model pair: agent alignment, the group list, the
// union of atoms, and memoized per-model analyses.
struct Context {
  const BeliefModel& L;
  const BeliefModel& R;
  ModelAnalysis AL;
  ModelAnalysis AR;
  std::vector<int> right_agent;   // left agent index -> right agent index
  std::vector<Group> groups;      // all non-empty groups, left indices, lex order
  std::vector<std::string> atoms; // union of both valuations

  Context(const BeliefModel& l, const BeliefModel& r) : L(l), R(r), AL(l), AR(r) {
    if (L.agent_count() != R.agent_count())
      throw ModelError("bisimulation needs models over the same agents");
    right_agent.resize(L.agent_count());
    for (int a = 0; a < L.agent_count(); ++a) {
      int ra = R.agent_index(L.agent_name(a));
      if (ra < 0)
        throw ModelError("bisimulation needs models over the same agents (missing: " +
                         L.agent_name(a) + ")");
      right_agent[a] = ra;
    }
    groups = [&] {
      std::vector<Group> out;
      for (std::uint32_t s : submasks_lex(L.all_agents())) out.push_back(s);
      return out;
    }();
    std::set<std::string> names;
    for (const auto& [p, _] : L.valuation()) names.insert(p);
    for (const auto& [p, _] : R.valuation()) names.insert(p);
    atoms.assign(names.begin(), names.end());
  }

  Group right_group(Group g) const {
    Group out = 0;
    for (int a : mask_indices(g)) out |= 1u << right_agent[a];
    return out;
  }

  bool atoms_agree(int w, int w2, std::string* which = nullptr) const {
    for (const auto& p : atoms) {
      if (mask_has(L.atom_extension(p), w) != mask_has(R.atom_extension(p), w2)) {
        if (which) *which = p;
        return false;
      }
    }
    return true;
  }
};

struct Violation {
  enum What { Atom, Forth, Back } what;
  std::string atom;
  Group group = 0;          // left indices
  int witness = -1;         // collective/cautious: the unmatched successor
  WorldSet witness_set = 0; // bold: the unmatched core
};

WorldSet image(const std::vector<WorldSet>& z, WorldSet worlds) {
  WorldSet out = 0;
  for (int u : mask_indices(worlds)) out |= z[u];
  return out;
}

// First violated clause of `kind` for the pair (w, w2) against the relation
// z / zinv, scanning atoms, then groups in order, forth before back.
std::optional<Violation> find_violation(Context& ctx, BisimKind kind, int w, int w2,
                                        const std::vector<WorldSet>& z,
                                        const std::vector<WorldSet>& zinv,
                                        bool include_atom) {
  if (include_atom) {
    std::string p;
    if (!ctx.atoms_agree(w, w2, &p)) return Violation{Violation::Atom, p, 0, -1, 0};
  }
  for (Group g : ctx.groups) {
    Group rg = ctx.right_group(g);
    switch (kind) {
      case BisimKind::Collective:
      case BisimKind::Cautious: {
        WorldSet succ_l, succ_r;
        if (kind == BisimKind::Collective) {
          succ_l = ctx.AL.group_conjecture_set(g, w);
          succ_r = ctx.AR.group_conjecture_set(rg, w2);
        } else {
          succ_l = ctx.AL.consistent_conjecture_set(g, w);
          succ_r = ctx.AR.consistent_conjecture_set(rg, w2);
        }
        for (int u : mask_indices(succ_l))
          if ((z[u] & succ_r) == 0) return Violation{Violation::Forth, "", g, u, 0};
        for (int u2 : mask_indices(succ_r))
          if ((zinv[u2] & succ_l) == 0) return Violation{Violation::Back, "", g, u2, 0};
        break;
      }
      case BisimKind::BoldV1: {
        // Subgroup formulation: every maximal consistent subgroup on one
        // side needs a counterpart whose conjecture set its image covers.
        for (Group h : ctx.AL.max_consistent_subgroups(g, w)) {
          WorldSet u_img = image(z, ctx.AL.group_conjecture_set(h, w));
          bool matched = false;
          for (Group h2 : ctx.AR.max_consistent_subgroups(rg, w2))
            if ((ctx.AR.group_conjecture_set(h2, w2) & ~u_img) == 0) { matched = true; break; }
          if (!matched)
            return Violation{Violation::Forth, "", g, -1, ctx.AL.group_conjecture_set(h, w)};
        }
        for (Group h2 : ctx.AR.max_consistent_subgroups(rg, w2)) {
          WorldSet u_img = image(zinv, ctx.AR.group_conjecture_set(h2, w2));
          bool matched = false;
          for (Group h : ctx.AL.max_consistent_subgroups(g, w))
            if ((ctx.AL.group_conjecture_set(h, w) & ~u_img) == 0) { matched = true; break; }
          if (!matched)
            return Violation{Violation::Back, "", g, -1, ctx.AR.group_conjecture_set(h2, w2)};
        }
        break;
      }
      case BisimKind::BoldV2: {
        // Core formulation: U ranges over the deduplicated conjecture sets.
        for (WorldSet u_core : ctx.AL.neighbourhood_cores(g, w)) {
          WorldSet img = image(z, u_core);
          bool matched = false;
          for (WorldSet u2_core : ctx.AR.neighbourhood_cores(rg, w2))
            if ((u2_core & ~img) == 0) { matched = true; break; }
          if (!matched) return Violation{Violation::Forth, "", g, -1, u_core};
        }
        for (WorldSet u2_core : ctx.AR.neighbourhood_cores(rg, w2)) {
          WorldSet img = image(zinv, u2_core);
          bool matched = false;
          for (WorldSet u_core : ctx.AL.neighbourhood_cores(g, w))
            if ((u_core & ~img) == 0) { matched = true; break; }
          if (!matched) return Violation{Violation::Back, "", g, -1, u2_core};
        }
        break;
      }
    }
  }
  return std::nullopt;
}

std::string describe(const Context& ctx, const Violation& v) {
  switch (v.what) {
    case Violation::Atom: return "atom " + v.atom;
    case Violation::Forth: return "forth " + ctx.L.group_name(v.group);
    case Violation::Back: return "back " + ctx.L.group_name(v.group);
  }
  return "?";
}

}  // namespace

BisimCheck check_bisim(const BeliefModel& left, const BeliefModel& right,
                       const std::vector<std::pair<int, int>>& pairs, BisimKind kind) {
  Context ctx(left, right);
  std::vector<WorldSet> z(left.world_count(), 0), zinv(right.world_count(), 0);
  for (const auto& [w, w2] : pairs) {
    if (w < 0 || w >= left.world_count() || w2 < 0 || w2 >= right.world_count())
      throw ModelError("bisimulation pair out of range");
    z[w] |= WorldSet{1} << w2;
    zinv[w2] |= WorldSet{1} << w;
  }
  for (const auto& pr : pairs) {
    auto v = find_violation(ctx, kind, pr.first, pr.second, z, zinv, true);
    if (v) return BisimCheck{false, pr, describe(ctx, *v)};
  }
  return BisimCheck{};
}

bool GreatestBisim::contains(int left_world, int right_world) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(left_world, right_world));
}

GreatestBisim greatest_bisim(const BeliefModel& left, const BeliefModel& right, BisimKind kind) {
  Context ctx(left, right);
  GreatestBisim out;

  std::vector<WorldSet> z(left.world_count(), 0), zinv(right.world_count(), 0);
  for (int w = 0; w < left.world_count(); ++w) {
    for (int w2 = 0; w2 < right.world_count(); ++w2) {
      if (ctx.atoms_agree(w, w2)) {
        z[w] |= WorldSet{1} << w2;
        zinv[w2] |= WorldSet{1} << w;
      } else {
        out.removed_round[{w, w2}] = 0;
      }
    }
  }

  // Synchronous refinement: scan every surviving pair against the current
  // relation, then delete the violators all at once.
  for (;;) {
    std::vector<std::pair<int, int>> doomed;
    for (int w = 0; w < left.world_count(); ++w)
      for (int w2 : mask_indices(z[w]))
        if (find_violation(ctx, kind, w, w2, z, zinv, false)) doomed.emplace_back(w, w2);
    if (doomed.empty()) break;
    ++out.rounds;
    for (const auto& [w, w2] : doomed) {
      z[w] &= ~(WorldSet{1} << w2);
      zinv[w2] &= ~(WorldSet{1} << w);
      out.removed_round[{w, w2}] = out.rounds;
    }
  }

  for (int w = 0; w < left.world_count(); ++w)
    for (int w2 : mask_indices(z[w])) out.pairs.emplace_back(w, w2);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

namespace {

std::vector<std::string> group_agent_names(const BeliefModel& m, Group g) {
  std::vector<std::string> names;
  for (int a : mask_indices(g)) names.push_back(m.agent_name(a));
  return names;
}

// Rebuilds a distinguishing formula for a deleted pair from the refinement
// trace.  A pair deleted in round k violated some clause against the
// round-(k-1) relation, and every "missing partner" pair there was deleted
// strictly earlier, so recursion on deletion rounds terminates at atom
// disagreements.
class Replay {
public:
  Replay(Context& ctx, BisimKind kind, const GreatestBisim& g) : ctx_(ctx), kind_(kind) {
    for (const auto& [pr, round] : g.removed_round) rank_[pr] = round;
  }

  FormulaPtr build(int w, int w2) {
    auto key = std::make_pair(w, w2);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int k = rank_.at(key);
    FormulaPtr out;
    if (k == 0) {
      std::string p;
      ctx_.atoms_agree(w, w2, &p);
      out = mask_has(ctx_.L.atom_extension(p), w) ? Formula::Atom(p)
                                                  : Formula::Not(Formula::Atom(p));
    } else {
      const auto& [z, zinv] = relation_at(k - 1);
      auto v = find_violation(ctx_, kind_, w, w2, z, zinv, false);
      if (!v) throw std::logic_error("refinement trace lost a violation");
      out = from_violation(w, w2, *v, z, zinv);
    }
    memo_.emplace(key, out);
    return out;
  }

private:
  // The relation after round j: pairs whose deletion round exceeds j.
  const std::pair<std::vector<WorldSet>, std::vector<WorldSet>>& relation_at(int j) {
    auto it = levels_.find(j);
    if (it != levels_.end()) return it->second;
    std::vector<WorldSet> z(ctx_.L.world_count(), 0), zinv(ctx_.R.world_count(), 0);
    for (int w = 0; w < ctx_.L.world_count(); ++w) {
      for (int w2 = 0; w2 < ctx_.R.world_count(); ++w2) {
        auto r = rank_.find({w, w2});
        int rank = r == rank_.end() ? INT_MAX : r->second;
        if (rank > j) {
          z[w] |= WorldSet{1} << w2;
          zinv[w2] |= WorldSet{1} << w;
        }
      }
    }
    return levels_.emplace(j, std::make_pair(std::move(z), std::move(zinv))).first->second;
  }

  FormulaPtr from_violation(int w, int w2, const Violation& v,
                            const std::vector<WorldSet>& z, const std::vector<WorldSet>& zinv) {
    auto names = group_agent_names(ctx_.L, v.group);
    Group rg = ctx_.right_group(v.group);

    switch (kind_) {
      case BisimKind::Collective:
      case BisimKind::Cautious: {
        bool cautious = kind_ == BisimKind::Cautious;
        auto wrap_box = [&](FormulaPtr body) {
          return cautious ? Formula::DC(names, body) : Formula::D(names, body);
        };
        if (v.what == Violation::Forth) {
          // Successor u on the left no right successor matches: force a
          // diamond whose body only u satisfies.
          WorldSet succ_r = cautious ? ctx_.AR.consistent_conjecture_set(rg, w2)
                                     : ctx_.AR.group_conjecture_set(rg, w2);
          std::vector<FormulaPtr> parts;
          for (int u2 : mask_indices(succ_r)) parts.push_back(build(v.witness, u2));
          return Formula::Not(wrap_box(Formula::Not(fold_and(parts))));
        }
        // Back: right successor u2 nothing on the left maps to; box over a
        // disjunction every left successor satisfies but u2 falsifies.
        WorldSet succ_l = cautious ? ctx_.AL.consistent_conjecture_set(v.group, w)
                                   : ctx_.AL.group_conjecture_set(v.group, w);
        std::vector<FormulaPtr> parts;
        for (int u : mask_indices(succ_l)) parts.push_back(build(u, v.witness));
        return wrap_box(fold_or(parts));
      }
      case BisimKind::BoldV1:
      case BisimKind::BoldV2: {
        if (v.what == Violation::Forth) {
          // Left core U with no right core inside its image: each right
          // core keeps a world outside the image; pin each such world down.
          WorldSet img = image(z, v.witness_set);
          std::vector<FormulaPtr> conjuncts;
          for (WorldSet u2_core : ctx_.AR.neighbourhood_cores(rg, w2)) {
            int escapee = std::countr_zero(u2_core & ~img);
            std::vector<FormulaPtr> alts;
            for (int u : mask_indices(v.witness_set)) alts.push_back(build(u, escapee));
            conjuncts.push_back(fold_or(alts));
          }
          return Formula::DB(names, fold_and(conjuncts));
        }
        // Back: right core U2 no left core maps into; every left core
        // keeps a world u outside the preimage, and the formula says some
        // core avoids all of these u's "signatures".
        WorldSet img = image(zinv, v.witness_set);
        std::vector<FormulaPtr> conjuncts;
        for (WorldSet u_core : ctx_.AL.neighbourhood_cores(v.group, w)) {
          int escapee = std::countr_zero(u_core & ~img);
          std::vector<FormulaPtr> sig;
          for (int u2 : mask_indices(v.witness_set)) sig.push_back(build(escapee, u2));
          conjuncts.push_back(Formula::Not(fold_and(sig)));
        }
        return Formula::Not(Formula::DB(names, fold_and(conjuncts)));
      }
    }
    throw std::logic_error("unreachable bisimulation kind");
  }

  Context& ctx_;
  BisimKind kind_;
  std::map<std::pair<int, int>, int> rank_;
  std::map<std::pair<int, int>, FormulaPtr> memo_;
  std::map<int, std::pair<std::vector<WorldSet>, std::vector<WorldSet>>> levels_;
};

}  // namespace

std::optional<FormulaPtr> distinguishing_formula(const BeliefModel& left, int left_world,
                                                 const BeliefModel& right, int right_world,
                                                 Lang lang) {
  BisimKind kind;
  switch (lang) {
    case Lang::D: kind = BisimKind::Collective; break;
    case Lang::DCaut: kind = BisimKind::Cautious; break;
    case Lang::DBold: kind = BisimKind::BoldV2; break;
    default:
      throw std::invalid_argument("distinguishing formulas cover L_D, L_DCaut and L_DBold");
  }
  GreatestBisim g = greatest_bisim(left, right, kind);
  if (g.contains(left_world, right_world)) return std::nullopt;

  Context ctx(left, right);
  Replay replay(ctx, kind, g);
  FormulaPtr out = replay.build(left_world, right_world);

  if (!eval(left, left_world, out) || eval(right, right_world, out))
    throw std::logic_error("distinguishing formula failed its evaluation check");
  if (!in_language(out, lang))
    throw std::logic_error("distinguishing formula left its language");
  return out;
}

}  // namespace doxa
