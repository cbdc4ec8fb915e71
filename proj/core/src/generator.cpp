#include "doxa/generator.hpp"

#include <utility>

namespace doxa {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  return next() % n;
}

bool Rng::chance(double p) {
  // 53 uniform bits -> double in [0, 1); exact arithmetic, so the outcome
  // sequence for a given seed is platform independent.
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

namespace {

void close_rows(std::vector<WorldSet>& rows, const std::set<RelCond>& conds) {
  const int n = static_cast<int>(rows.size());
  if (conds.count(RelCond::Reflexive))
    for (int w = 0; w < n; ++w) rows[w] |= WorldSet{1} << w;
  if (conds.count(RelCond::Symmetric))
    for (int w = 0; w < n; ++w)
      for (int u : mask_indices(rows[w])) rows[u] |= WorldSet{1} << w;
  const bool trans = conds.count(RelCond::Transitive) != 0;
  const bool eucl = conds.count(RelCond::Euclidean) != 0;
  if (!trans && !eucl) return;
  for (bool changed = true; changed;) {
    changed = false;
    for (int w = 0; w < n; ++w)
      for (int u : mask_indices(rows[w])) {
        if (trans && (rows[w] | rows[u]) != rows[w]) {
          rows[w] |= rows[u];
          changed = true;
        }
        if (eucl && (rows[u] | rows[w]) != rows[u]) {
          rows[u] |= rows[w];
          changed = true;
        }
      }
  }
}

std::vector<WorldSet> generate_relation(Rng& rng, int n, double density,
                                        const std::set<RelCond>& conds) {
  std::vector<WorldSet> rows(n, 0);
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      if (rng.chance(density)) rows[w] |= WorldSet{1} << u;
  close_rows(rows, conds);
  if (conds.count(RelCond::Serial)) {
    for (;;) {
      bool repaired = false;
      for (int w = 0; w < n; ++w)
        if (rows[w] == 0) {
          rows[w] |= WorldSet{1} << static_cast<int>(rng.below(n));
          repaired = true;
        }
      if (!repaired) break;
      close_rows(rows, conds);
    }
  }
  return rows;
}

}  // namespace

BeliefModel generate_model(const GeneratorConfig& cfg) {
  if (cfg.worlds < 1 || cfg.worlds > kMaxWorlds)
    throw GenerationError("world count must be between 1 and " + std::to_string(kMaxWorlds));
  if (cfg.agents < 1 || cfg.agents > kMaxAgents)
    throw GenerationError("agent count must be between 1 and " + std::to_string(kMaxAgents));

  std::vector<std::string> agents;
  for (int a = 0; a < cfg.agents; ++a) agents.push_back(std::string(1, static_cast<char>('a' + a)));
  std::vector<std::string> worlds;
  for (int w = 1; w <= cfg.worlds; ++w) worlds.push_back("w" + std::to_string(w));

  Rng rng(cfg.seed);
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations;
  for (int a = 0; a < cfg.agents; ++a) {
    std::vector<WorldSet> rows = generate_relation(rng, cfg.worlds, cfg.density, cfg.conditions);
    for (RelCond cond : cfg.conditions) {
      RelCheck check = check_relational(rows, cfg.worlds, cond);
      if (!check.holds)
        throw GenerationError("generated relation for agent \"" + agents[a] +
                              "\" violates condition " + rel_cond_letter(cond));
    }
    auto& list = relations[agents[a]];
    for (int w = 0; w < cfg.worlds; ++w)
      for (int u : mask_indices(rows[w])) list.emplace_back(worlds[w], worlds[u]);
  }

  std::map<std::string, std::vector<std::string>> valuation;
  for (const std::string& atom : cfg.atoms) {
    auto& where = valuation[atom];
    for (int w = 0; w < cfg.worlds; ++w)
      if (rng.chance(cfg.atom_density)) where.push_back(worlds[w]);
  }

  return BeliefModel(std::move(agents), std::move(worlds), std::move(relations),
                     std::move(valuation));
}

namespace {

// Option codes for the weighted node picker below.
enum : int {
  kAtom, kTop, kBot, kNot, kAnd, kOr, kImp, kIff,
  kModB, kModD, kModDC, kModDB, kModInc,
};

std::vector<std::string> random_group(Rng& rng, const std::vector<std::string>& agents) {
  const auto n = static_cast<std::uint32_t>(agents.size());
  std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng.below((1u << n) - 1));
  std::vector<std::string> out;
  for (std::uint32_t a = 0; a < n; ++a)
    if (mask & (1u << a)) out.push_back(agents[a]);
  return out;
}

FormulaPtr random_formula_impl(Rng& rng, Lang lang, int depth, int modal,
                               const std::vector<std::string>& atoms,
                               const std::vector<std::string>& agents) {
  std::vector<int> options;
  auto add = [&options](int code, int weight) { options.insert(options.end(), weight, code); };
  if (!atoms.empty()) add(kAtom, 3);
  add(kTop, 1);
  add(kBot, 1);
  if (depth > 0) {
    add(kNot, 2);
    add(kAnd, 2);
    add(kOr, 2);
    add(kImp, 2);
    add(kIff, 1);
    if (modal > 0 && !agents.empty()) {
      unsigned mask = 0;
      switch (lang) {
        case Lang::D: mask = 1u; break;
        case Lang::DCaut: mask = 2u; break;
        case Lang::DBold: mask = 4u; break;
        case Lang::DCautInc: mask = 2u | 8u; break;
        case Lang::DBoldInc: mask = 4u | 8u; break;
        case Lang::Full: mask = 1u | 2u | 4u | 8u; break;
      }
      if (mask & 1u) {
        add(kModB, 2);
        add(kModD, 3);
      }
      if (mask & 2u) add(kModDC, 4);
      if (mask & 4u) add(kModDB, 4);
      if (mask & 8u) add(kModInc, 1);
    }
  }

  auto sub = [&](int d, int m) { return random_formula_impl(rng, lang, d, m, atoms, agents); };
  switch (options[rng.below(options.size())]) {
    case kAtom: return Formula::Atom(atoms[rng.below(atoms.size())]);
    case kTop: return Formula::Top();
    case kBot: return Formula::Bot();
    case kNot: return Formula::Not(sub(depth - 1, modal));
    case kAnd: return Formula::And(sub(depth - 1, modal), sub(depth - 1, modal));
    case kOr: return Formula::Or(sub(depth - 1, modal), sub(depth - 1, modal));
    case kImp: return Formula::Imp(sub(depth - 1, modal), sub(depth - 1, modal));
    case kIff: return Formula::Iff(sub(depth - 1, modal), sub(depth - 1, modal));
    case kModB: return Formula::B(agents[rng.below(agents.size())], sub(depth - 1, modal - 1));
    case kModD: return Formula::D(random_group(rng, agents), sub(depth - 1, modal - 1));
    case kModDC: return Formula::DC(random_group(rng, agents), sub(depth - 1, modal - 1));
    case kModDB: return Formula::DB(random_group(rng, agents), sub(depth - 1, modal - 1));
    case kModInc: return Formula::Inc(random_group(rng, agents));
  }
  return Formula::Top();  // unreachable
}

}  // namespace

FormulaPtr random_formula(Rng& rng, Lang lang, int max_modal_depth,
                          const std::vector<std::string>& atoms,
                          const std::vector<std::string>& agents) {
  const int depth = max_modal_depth + 2;  // room for connectives around the modalities
  return random_formula_impl(rng, lang, depth, max_modal_depth, atoms, agents);
}

}  // namespace doxa
