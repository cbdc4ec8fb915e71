#include "doxa/reproduce.hpp"

#include <chrono>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doxa/bisim.hpp"
#include "doxa/fixtures.hpp"
#include "doxa/formula.hpp"
#include "doxa/frames.hpp"
#include "doxa/generator.hpp"
#include "doxa/model.hpp"
#include "doxa/model_io.hpp"
#include "doxa/parser.hpp"
#include "doxa/semantics.hpp"
#include "doxa/translate.hpp"

namespace doxa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Ctx {
  const SuiteOptions& opt;
  long checks = 0;
  long failures = 0;
  std::string first;

  void pass() { ++checks; }
  void fail(const std::string& what) {
    ++checks;
    if (++failures == 1) first = what;
  }
  void check(bool ok, const std::string& what) {
    if (ok) pass();
    else fail(what);
  }
  int samples(int pinned) const { return opt.samples > 0 ? opt.samples : pinned; }
  std::string tally() const {
    std::ostringstream out;
    if (failures == 0) out << checks << " checks hold";
    else out << failures << "/" << checks << " checks failed; first: " << first;
    return out.str();
  }
};

BeliefModel random_model(Rng& rng, int max_worlds, int max_agents,
                         std::set<RelCond> conds = {}) {
  GeneratorConfig cfg;
  cfg.worlds = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_worlds - 1)));
  cfg.agents = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_agents - 1)));
  cfg.density = 0.15 + 0.1 * static_cast<double>(rng.below(3));
  cfg.conditions = std::move(conds);
  cfg.seed = rng.next();
  return generate_model(cfg);
}

std::vector<std::string> group_names(const BeliefModel& m, Group g) {
  std::vector<std::string> names;
  for (int a : mask_indices(g)) names.push_back(m.agent_name(a));
  return names;
}

FormulaPtr members_inconsistent(const std::vector<std::string>& names) {
  std::vector<FormulaPtr> parts;
  for (const std::string& name : names) parts.push_back(Formula::B(name, Formula::Bot()));
  return fold_and(parts);
}

const std::vector<std::string> kAtoms = {"p", "q", "r"};

// ---- fixture expectation helpers ------------------------------------------

void check_truths(Ctx& ctx, const std::string& id, const BeliefModel& m,
                  const std::vector<TruthExpectation>& truths) {
  Evaluator ev(m);
  for (const TruthExpectation& t : truths) {
    bool got = ev.eval(m.world_index(t.world), parse_formula(t.formula));
    ctx.check(got == t.expected, id + ": " + t.formula + " at " + t.world + " should be " +
                                     (t.expected ? "true" : "false"));
  }
}

void check_bisim_expectations(Ctx& ctx, const Fixture& f) {
  std::map<BisimKind, GreatestBisim> greatest;
  for (const BisimExpectation& e : f.bisims) {
    auto it = greatest.find(e.kind);
    if (it == greatest.end())
      it = greatest.emplace(e.kind, greatest_bisim(f.left, *f.right, e.kind)).first;
    bool got = it->second.contains(f.left.world_index(e.left_world),
                                   f.right->world_index(e.right_world));
    ctx.check(got == e.related, f.id + ": (" + e.left_world + "," + e.right_world + ") should be " +
                                    (e.related ? "in" : "outside") + " the greatest " +
                                    bisim_kind_name(e.kind) + " bisimulation");
  }
}

void check_cautious_relations(Ctx& ctx, const Fixture& f) {
  for (const CautiousRelationExpectation& e : f.cautious_relations) {
    Group g = f.left.group_of(e.group);
    std::vector<std::pair<int, int>> got = f.left.cautious_relation(g);
    std::set<std::pair<int, int>> want;
    for (const auto& [from, to] : e.pairs)
      want.emplace(f.left.world_index(from), f.left.world_index(to));
    ctx.check(std::set<std::pair<int, int>>(got.begin(), got.end()) == want,
              f.id + ": cautious relation for " + f.left.group_name(g) + " differs");
  }
}

void check_preservation(Ctx& ctx, const Fixture& f) {
  const PreservationExpectation& exp = *f.preservation;
  const BeliefModel& m = f.left;
  for (int a = 0; a < m.agent_count(); ++a)
    for (RelCond c : exp.premise) {
      ctx.check(check_relational(m.relation_rows(a), m.world_count(), c).holds,
                f.id + ": agent " + m.agent_name(a) + " should satisfy " + rel_cond_letter(c));
      if (exp.notion == GroupNotion::Bold)
        ctx.check(check_neighbourhood(m, NbSubject::Agent(a), nb_counterpart(c)).holds,
                  f.id + ": agent " + m.agent_name(a) + " should satisfy " +
                      nb_cond_name(nb_counterpart(c)));
    }
  Group full = m.all_agents();
  for (RelCond c : exp.violated_rel) {
    std::vector<WorldSet> rows;
    for (int w = 0; w < m.world_count(); ++w) rows.push_back(m.cautious_successors(full, w));
    RelCheck check = check_relational(rows, m.world_count(), c);
    ctx.check(!check.holds && !check.witness.empty(),
              f.id + ": cautious relation should violate " + rel_cond_letter(c) +
                  " with a witness");
  }
  for (NbCond c : exp.violated_nb) {
    NbCheck check = check_neighbourhood(m, NbSubject::GroupOf(full), c);
    ctx.check(!check.holds && check.world >= 0,
              f.id + ": group neighbourhood should violate " + nb_cond_name(c) +
                  " with a witness");
  }
}

// ---- suites ----------------------------------------------------------------

void suite_fixtures(Ctx& ctx, SuiteResult&) {
  for (const Fixture& f : fixtures()) {
    check_truths(ctx, f.id, f.left, f.truths);
    if (f.right) check_truths(ctx, f.id, *f.right, f.right_truths);
    if (!f.bisims.empty()) check_bisim_expectations(ctx, f);
    check_cautious_relations(ctx, f);
    if (f.preservation) check_preservation(ctx, f);
    std::map<std::string, int> points;
    for (const auto& [name, world] : f.points) points[name] = f.left.world_index(world);
    LoadedModel back = parse_model_text(model_to_text(f.left, points));
    ctx.check(back.model == f.left && back.points == points, f.id + ": file round trip");
  }
}

void suite_c01(Ctx& ctx, SuiteResult&) {
  const Fixture& f = fixture("example");
  auto start = Clock::now();
  Evaluator ev(f.left);
  // The fixture lists the cited verdict table first, extras after it.
  const int cited = 14;
  for (int i = 0; i < cited; ++i) {
    const TruthExpectation& t = f.truths[static_cast<std::size_t>(i)];
    ctx.check(ev.eval(f.left.world_index(t.world), parse_formula(t.formula)) == t.expected,
              t.formula + " at " + t.world);
  }
  ctx.check(seconds_since(start) < 1.0, "verdict table took one second or more");
}

void suite_c02(Ctx& ctx, SuiteResult&) {
  const BeliefModel& m = fixture("example").left;
  const int w1 = m.world_index("w1");
  auto worlds_of = [&m](std::initializer_list<const char*> names) {
    WorldSet s = 0;
    for (const char* n : names) s |= WorldSet{1} << m.world_index(n);
    return s;
  };
  const Group ab = m.group_of({"a", "b"});
  const Group abc = m.group_of({"a", "b", "c"});
  const std::vector<Group> want_ab = {m.group_of({"a"}), m.group_of({"b"})};
  const std::vector<Group> want_abc = {m.group_of({"a"}), m.group_of({"b", "c"})};
  ctx.check(m.max_consistent_subgroups(ab, w1) == want_ab,
            "maximal consistent subgroups of {a,b} at w1");
  ctx.check(m.max_consistent_subgroups(abc, w1) == want_abc,
            "maximal consistent subgroups of {a,b,c} at w1");
  ctx.check(m.consistent_conjecture_set(ab, w1) == worlds_of({"w1", "w2", "w3"}),
            "consistent conjecture set of {a,b} at w1");
  ctx.check(m.consistent_conjecture_set(abc, w1) == worlds_of({"w1", "w2"}),
            "consistent conjecture set of {a,b,c} at w1");
}

void separation_pairs(Ctx& ctx, const Fixture& f, BisimKind kind,
                      const std::vector<std::pair<const char*, const char*>>& pairs) {
  GreatestBisim gb = greatest_bisim(f.left, *f.right, kind);
  for (const auto& [lw, rw] : pairs)
    ctx.check(gb.contains(f.left.world_index(lw), f.right->world_index(rw)),
              f.id + ": (" + lw + "," + rw + ") missing from greatest " + bisim_kind_name(kind) +
                  " bisimulation");
}

void suite_c03(Ctx& ctx, SuiteResult&) {
  const Fixture& f = fixture("bot-separation");
  separation_pairs(ctx, f, BisimKind::Cautious, {{"w", "w'"}, {"u", "u'1"}, {"u", "u'2"}});
  FormulaPtr probe = parse_formula("D{a,b}bot");
  ctx.check(!eval(f.left, f.left.world_index("w"), probe), "D{a,b}bot should be false at (M,w)");
  ctx.check(eval(*f.right, f.right->world_index("w'"), probe),
            "D{a,b}bot should be true at (M',w')");
  GreatestBisim coll = greatest_bisim(f.left, *f.right, BisimKind::Collective);
  ctx.check(!coll.contains(f.left.world_index("w"), f.right->world_index("w'")),
            "(w,w') should be outside the greatest collective bisimulation");
}

void suite_c04(Ctx& ctx, SuiteResult&) {
  const Fixture& f = fixture("bot-separation");
  for (BisimKind kind : {BisimKind::BoldV1, BisimKind::BoldV2})
    separation_pairs(ctx, f, kind, {{"w", "w'"}, {"u", "u'1"}, {"u", "u'2"}});
  FormulaPtr probe = parse_formula("D{a,b}bot");
  ctx.check(!eval(f.left, f.left.world_index("w"), probe), "D{a,b}bot should be false at (M,w)");
  ctx.check(eval(*f.right, f.right->world_index("w'"), probe),
            "D{a,b}bot should be true at (M',w')");
}

void suite_c05(Ctx& ctx, SuiteResult&) {
  const Fixture& f = fixture("cautious-separation");
  const std::vector<std::pair<const char*, const char*>> dashed = {
      {"w", "w'"}, {"u1", "u'1"}, {"u2", "u'2"}, {"u3", "u'2"}, {"u3", "u'3"}};
  for (BisimKind kind : {BisimKind::BoldV1, BisimKind::BoldV2})
    separation_pairs(ctx, f, kind, dashed);
  FormulaPtr probe = parse_formula("DC{a,b}p");
  ctx.check(!eval(f.left, f.left.world_index("w"), probe), "DC{a,b}p should be false at (M,w)");
  ctx.check(eval(*f.right, f.right->world_index("w'"), probe),
            "DC{a,b}p should be true at (M',w')");
}

void suite_c06(Ctx& ctx, SuiteResult&) {
  const Fixture& group = fixture("non-normal-group");
  check_truths(ctx, group.id, group.left, group.truths);
  const Fixture& dual = fixture("non-normal-dual");
  check_truths(ctx, dual.id, dual.left, dual.truths);
}

void suite_c07(Ctx& ctx, SuiteResult&) {
  const Fixture& f = fixture("conjunction-failure");
  check_truths(ctx, f.id, f.left, f.truths);
}

void suite_c08(Ctx& ctx, SuiteResult&) {
  int frames = 0;
  for (const Fixture& f : fixtures())
    if (f.preservation) {
      ++frames;
      check_preservation(ctx, f);
      check_cautious_relations(ctx, f);
    }
  ctx.check(frames == 11, "expected the 11 counterexample frames");
}

struct CautiousRow {
  RelCond property;
  std::set<RelCond> conditions;
};
const CautiousRow kCautiousRows[] = {
    {RelCond::Serial, {RelCond::Serial}},
    {RelCond::Reflexive, {RelCond::Reflexive}},
    {RelCond::Transitive, {RelCond::Reflexive, RelCond::Transitive}},
    {RelCond::Transitive, {RelCond::Symmetric, RelCond::Transitive}},
    {RelCond::Symmetric, {RelCond::Reflexive, RelCond::Symmetric}},
    {RelCond::Symmetric, {RelCond::Serial, RelCond::Euclidean, RelCond::Symmetric}},
    {RelCond::Euclidean, {RelCond::Reflexive, RelCond::Euclidean}},
    {RelCond::Euclidean, {RelCond::Serial, RelCond::Symmetric, RelCond::Euclidean}},
};

struct BoldRow {
  NbCond property;
  std::set<RelCond> conditions;
};
const BoldRow kBoldRows[] = {
    {NbCond::ReflexiveN, {RelCond::Reflexive}},
    {NbCond::SerialN, {RelCond::Serial, RelCond::Reflexive}},
    {NbCond::SerialN, {RelCond::Serial, RelCond::Symmetric, RelCond::Transitive}},
    {NbCond::SerialN, {RelCond::Serial, RelCond::Symmetric, RelCond::Euclidean}},
    {NbCond::TransitiveN, {RelCond::Reflexive, RelCond::Transitive}},
    {NbCond::TransitiveN, {RelCond::Symmetric, RelCond::Transitive}},
    {NbCond::TransitiveN, {RelCond::Euclidean, RelCond::Transitive}},
    {NbCond::SymmetricN, {RelCond::Reflexive, RelCond::Symmetric}},
    {NbCond::SymmetricN, {RelCond::Serial, RelCond::Transitive, RelCond::Symmetric}},
    {NbCond::SymmetricN, {RelCond::Serial, RelCond::Euclidean, RelCond::Symmetric}},
    {NbCond::EuclideanN, {RelCond::Reflexive, RelCond::Euclidean}},
    {NbCond::EuclideanN, {RelCond::Serial, RelCond::Symmetric, RelCond::Euclidean}},
};

void suite_c09(Ctx& ctx, SuiteResult&) {
  auto start = Clock::now();
  const int n = ctx.samples(1000);
  std::uint64_t row_seed = ctx.opt.seed;
  for (const CautiousRow& row : kCautiousRows) {
    Rng rng(row_seed += 100000);
    for (int i = 0; i < n; ++i) {
      BeliefModel m = random_model(rng, 6, 3, row.conditions);
      for (Group g : submasks_lex(m.all_agents())) {
        std::vector<WorldSet> rows;
        for (int w = 0; w < m.world_count(); ++w) rows.push_back(m.cautious_successors(g, w));
        if (check_relational(rows, m.world_count(), row.property).holds) ctx.pass();
        else
          ctx.fail(std::string("cautious relation loses ") + rel_cond_letter(row.property) +
                   " for " + m.group_name(g) + " (sample " + std::to_string(i) + ")");
      }
    }
  }
  for (const BoldRow& row : kBoldRows) {
    Rng rng(row_seed += 100000);
    for (int i = 0; i < n; ++i) {
      BeliefModel m = random_model(rng, 6, 3, row.conditions);
      for (Group g : submasks_lex(m.all_agents())) {
        if (check_neighbourhood(m, NbSubject::GroupOf(g), row.property).holds) ctx.pass();
        else
          ctx.fail("group neighbourhood loses " + nb_cond_name(row.property) + " for " +
                   m.group_name(g) + " (sample " + std::to_string(i) + ")");
      }
    }
  }
  ctx.check(seconds_since(start) < 60.0, "preservation sweep took a minute or more");
}

struct TranslationCase {
  const char* name;
  Lang source;
  FormulaPtr (*fn)(const FormulaPtr&);
};
const TranslationCase kTranslations[] = {
    {"cautious-to-d", Lang::DCaut, cautious_to_d},
    {"bold-to-d", Lang::DBold, bold_to_d},
    {"d-to-cautious", Lang::D, d_to_cautious_inc},
    {"d-to-bold", Lang::D, d_to_bold_inc},
    {"bold-to-cautious", Lang::DBold, bold_to_cautious},
};

void suite_c10(Ctx& ctx, SuiteResult&) {
  const int models = ctx.samples(500);
  std::uint64_t seed = ctx.opt.seed + 1000000;
  for (const TranslationCase& tc : kTranslations) {
    Rng rng(seed += 100000);
    for (int i = 0; i < models; ++i) {
      BeliefModel m = random_model(rng, 5, 3);
      Evaluator ev(m);
      for (int j = 0; j < 20; ++j) {
        FormulaPtr f = random_formula(rng, tc.source, 2, kAtoms, m.agents());
        FormulaPtr g = tc.fn(f);
        if (ev.extension(f) == ev.extension(g)) ctx.pass();
        else ctx.fail(std::string(tc.name) + " changes the extension of " + print(f));
      }
    }
  }
}

void suite_c11(Ctx& ctx, SuiteResult&) {
  const int pair_count = ctx.samples(200);
  const int formula_count = 200;
  const struct {
    BisimKind kind;
    Lang lang;
  } kinds[] = {{BisimKind::Collective, Lang::D},
               {BisimKind::Cautious, Lang::DCaut},
               {BisimKind::BoldV2, Lang::DBold}};
  Rng rng(ctx.opt.seed + 11000000);
  for (int i = 0; i < pair_count; ++i) {
    const int agent_count = 2 + static_cast<int>(rng.below(2));
    auto make_side = [&rng, agent_count] {
      GeneratorConfig cfg;
      cfg.worlds = 2 + static_cast<int>(rng.below(4));
      cfg.agents = agent_count;
      cfg.density = 0.2 + 0.1 * static_cast<double>(rng.below(3));
      cfg.seed = rng.next();
      return generate_model(cfg);
    };
    BeliefModel left = make_side();
    BeliefModel right = make_side();
    std::set<std::string> atoms;
    for (const auto& [atom, mask] : left.valuation()) atoms.insert(atom);
    for (const auto& [atom, mask] : right.valuation()) atoms.insert(atom);
    for (const auto& kl : kinds) {
      GreatestBisim gb = greatest_bisim(left, right, kl.kind);
      std::vector<FormulaPtr> fs;
      for (int k = 0; k < formula_count; ++k)
        fs.push_back(random_formula(rng, kl.lang, 3, kAtoms, left.agents()));
      Evaluator el(left), er(right);
      std::vector<std::pair<WorldSet, WorldSet>> exts;
      for (const FormulaPtr& f : fs) exts.emplace_back(el.extension(f), er.extension(f));
      for (int w = 0; w < left.world_count(); ++w)
        for (int w2 = 0; w2 < right.world_count(); ++w2) {
          bool agree = true;
          for (const std::string& atom : atoms)
            if (mask_has(left.atom_extension(atom), w) !=
                mask_has(right.atom_extension(atom), w2)) {
              agree = false;
              break;
            }
          if (!agree) continue;
          if (gb.contains(w, w2)) {
            int bad = -1;
            for (int k = 0; k < formula_count && bad < 0; ++k)
              if (mask_has(exts[k].first, w) != mask_has(exts[k].second, w2)) bad = k;
            if (bad < 0) ctx.pass();
            else
              ctx.fail("bisimilar pair disagrees on " + print(fs[static_cast<std::size_t>(bad)]));
          } else {
            auto d = distinguishing_formula(left, w, right, w2, kl.lang);
            if (!d) {
              ctx.fail("no distinguishing formula for a pair outside the greatest " +
                       bisim_kind_name(kl.kind) + " bisimulation");
              continue;
            }
            bool verified = eval(left, w, *d) && !eval(right, w2, *d) && in_language(*d, kl.lang);
            ctx.check(verified, "distinguishing formula fails verification: " + print(*d));
          }
        }
    }
  }
}

void suite_c12(Ctx& ctx, SuiteResult&) {
  const int n = ctx.samples(500);
  Rng rng(ctx.opt.seed + 12000000);
  for (int i = 0; i < n; ++i) {
    const int agent_count = 2 + static_cast<int>(rng.below(2));
    auto make_side = [&rng, agent_count] {
      GeneratorConfig cfg;
      cfg.worlds = 2 + static_cast<int>(rng.below(4));
      cfg.agents = agent_count;
      cfg.density = 0.2 + 0.1 * static_cast<double>(rng.below(3));
      cfg.seed = rng.next();
      return generate_model(cfg);
    };
    BeliefModel left = make_side();
    BeliefModel right = make_side();
    // Mix arbitrary candidates with near-bisimulations so both verdicts occur.
    std::vector<std::pair<int, int>> z;
    switch (rng.below(3)) {
      case 0:
        for (int w = 0; w < left.world_count(); ++w)
          for (int w2 = 0; w2 < right.world_count(); ++w2)
            if (rng.chance(0.3)) z.emplace_back(w, w2);
        break;
      case 1:
        z = greatest_bisim(left, right, BisimKind::BoldV2).pairs;
        break;
      default:
        z = greatest_bisim(left, right, BisimKind::BoldV2).pairs;
        z.emplace_back(static_cast<int>(rng.below(left.world_count())),
                       static_cast<int>(rng.below(right.world_count())));
        break;
    }
    BisimCheck v1 = check_bisim(left, right, z, BisimKind::BoldV1);
    BisimCheck v2 = check_bisim(left, right, z, BisimKind::BoldV2);
    if (v1.ok == v2.ok) ctx.pass();
    else ctx.fail("bold formulations disagree on candidate " + std::to_string(i));
  }
}

void suite_c13(Ctx& ctx, SuiteResult&) {
  const int n = ctx.samples(1000);
  Rng rng(ctx.opt.seed + 13000000);
  for (int i = 0; i < n; ++i) {
    BeliefModel m = random_model(rng, 5, 3);
    Evaluator ev(m);
    std::vector<FormulaPtr> bodies;
    for (int k = 0; k < 3; ++k)
      bodies.push_back(random_formula(rng, Lang::Full, 2, kAtoms, m.agents()));
    const std::vector<Group> groups = submasks_lex(m.all_agents());
    for (Group g : groups) {
      const std::vector<std::string> names = group_names(m, g);
      const WorldSet inconsistent = ev.extension(members_inconsistent(names));
      ctx.check(ev.extension(Formula::DC(names, Formula::Bot())) == inconsistent,
                "DC{G}bot should hold exactly where every member is inconsistent");
      ctx.check(ev.extension(Formula::DB(names, Formula::Bot())) == 0,
                "DB{G}bot should never hold");
      ctx.check(ev.extension(Formula::Not(Formula::DB(names, Formula::Top()))) == inconsistent,
                "~DB{G}top should hold exactly where every member is inconsistent");
      ctx.check(ev.extension(Formula::Inc(names)) ==
                    ev.extension(Formula::D(names, Formula::Bot())),
                "Inc{G} should match D{G}bot");
      for (const FormulaPtr& body : bodies) {
        const WorldSet d = ev.extension(Formula::D(names, body));
        ctx.check((ev.extension(Formula::DC(names, body)) & ~d) == 0,
                  "DC{G} should imply D{G}");
        ctx.check((ev.extension(Formula::DB(names, body)) & ~d) == 0,
                  "DB{G} should imply D{G}");
      }
    }
    for (Group g : groups)
      for (Group h : groups) {
        if (g == h || (g & h) != g) continue;
        const std::vector<std::string> gn = group_names(m, g);
        const std::vector<std::string> hn = group_names(m, h);
        for (const FormulaPtr& body : bodies) {
          ctx.check((ev.extension(Formula::D(gn, body)) &
                     ~ev.extension(Formula::D(hn, body))) == 0,
                    "D should be monotone in the group");
          ctx.check((ev.extension(Formula::DB(gn, body)) &
                     ~ev.extension(Formula::DB(hn, body))) == 0,
                    "DB should be monotone in the group");
        }
      }
  }
  const Fixture& ex = fixture("example");
  Evaluator ev(ex.left);
  const int w1 = ex.left.world_index("w1");
  ctx.check(ev.eval(w1, parse_formula("DC{b}q")), "DC{b}q should hold at w1");
  ctx.check(!ev.eval(w1, parse_formula("DC{a,b}q")),
            "DC{a,b}q should fail at w1 (cautious belief is not group monotone)");
}

void suite_c14(Ctx& ctx, SuiteResult&) {
  const int n = ctx.samples(300);
  Rng rng(ctx.opt.seed + 14000000);
  for (int i = 0; i < n; ++i) {
    BeliefModel m = random_model(rng, 5, 3, {RelCond::Reflexive});
    Evaluator ev(m);
    const std::vector<Group> groups = submasks_lex(m.all_agents());
    for (int j = 0; j < 20; ++j) {
      FormulaPtr body = random_formula(rng, Lang::Full, 2, kAtoms, m.agents());
      const std::vector<std::string> names =
          group_names(m, groups[rng.below(groups.size())]);
      const WorldSet d = ev.extension(Formula::D(names, body));
      if (d == ev.extension(Formula::DC(names, body)) &&
          d == ev.extension(Formula::DB(names, body)))
        ctx.pass();
      else
        ctx.fail("D/DC/DB should coincide on reflexive models (body " + print(body) + ")");
    }
  }
  for (int i = 0; i < n; ++i) {
    BeliefModel m = random_model(rng, 5, 3, {RelCond::Serial});
    Evaluator ev(m);
    const std::vector<Group> groups = submasks_lex(m.all_agents());
    for (int j = 0; j < 20; ++j) {
      FormulaPtr body = random_formula(rng, Lang::Full, 2, kAtoms, m.agents());
      const std::vector<std::string> names =
          group_names(m, groups[rng.below(groups.size())]);
      const WorldSet dc = ev.extension(Formula::DC(names, body));
      const WorldSet db = ev.extension(Formula::DB(names, body));
      if ((dc & ~db) == 0) ctx.pass();
      else ctx.fail("DC should imply DB on serial models (body " + print(body) + ")");
    }
  }
}

void suite_c15(Ctx& ctx, SuiteResult&) {
  const int n = ctx.samples(500);
  Rng rng(ctx.opt.seed + 15000000);
  const std::set<RelCond> classes[] = {
      {},
      {RelCond::Serial},
      {RelCond::Reflexive},
      {RelCond::Transitive},
      {RelCond::Symmetric},
      {RelCond::Euclidean},
      {RelCond::Serial, RelCond::Transitive, RelCond::Euclidean},
  };
  for (int i = 0; i < n; ++i) {
    BeliefModel m = random_model(rng, 5, 3, classes[i % 7]);
    for (int a = 0; a < m.agent_count(); ++a)
      for (RelCond c : kRelConds) {
        const bool rel = check_relational(m.relation_rows(a), m.world_count(), c).holds;
        const bool nb = check_neighbourhood(m, NbSubject::Agent(a), nb_counterpart(c)).holds;
        if (rel == nb) ctx.pass();
        else
          ctx.fail(std::string("agent ") + m.agent_name(a) + ": " + rel_cond_letter(c) +
                   " and " + nb_cond_name(nb_counterpart(c)) + " disagree (sample " +
                   std::to_string(i) + ")");
      }
  }
}

struct Suite {
  const char* id;
  const char* title;
  void (*run)(Ctx&, SuiteResult&);
};

const Suite kSuites[] = {
    {"c01", "example model verdict table", suite_c01},
    {"c02", "maximal consistent subgroup enumeration", suite_c02},
    {"c03", "cautious belief is weaker than distributed belief", suite_c03},
    {"c04", "bold belief is weaker than distributed belief", suite_c04},
    {"c05", "bold belief is weaker than cautious belief", suite_c05},
    {"c06", "bold belief is not a normal modality", suite_c06},
    {"c07", "bold belief is not closed under conjunction", suite_c07},
    {"c08", "preservation counterexample frames", suite_c08},
    {"c09", "preservation positive sweeps", suite_c09},
    {"c10", "translations preserve extensions", suite_c10},
    {"c11", "bisimilarity matches formula agreement", suite_c11},
    {"c12", "bold bisimulation formulations agree", suite_c12},
    {"c13", "validity sweep", suite_c13},
    {"c14", "reflexive and serial class collapses", suite_c14},
    {"c15", "relational and neighbourhood conditions agree per agent", suite_c15},
    {"fixtures", "fixture expectation lists", suite_fixtures},
};

}  // namespace

std::vector<SuiteResult> run_suites(const std::string& filter, const SuiteOptions& options) {
  std::vector<SuiteResult> results;
  for (const Suite& suite : kSuites) {
    const std::string id = suite.id;
    const std::string title = suite.title;
    if (!filter.empty() && id.find(filter) == std::string::npos &&
        title.find(filter) == std::string::npos)
      continue;
    SuiteResult result;
    result.id = id;
    result.title = title;
    Ctx ctx{options};
    const auto start = Clock::now();
    try {
      suite.run(ctx, result);
      result.passed = ctx.failures == 0;
      result.detail = ctx.tally();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = seconds_since(start);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace doxa
