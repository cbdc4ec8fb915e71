#include <vector>

#include "doctest.h"
#include "doxa/fixtures.hpp"
#include "doxa/generator.hpp"
#include "doxa/parser.hpp"
#include "doxa/semantics.hpp"

using namespace doxa;

namespace {

BeliefModel sample_model(std::uint64_t seed) {
  GeneratorConfig cfg;
  Rng rng(seed);
  cfg.worlds = 2 + static_cast<int>(rng.below(4));
  cfg.agents = 2 + static_cast<int>(rng.below(2));
  cfg.density = 0.15 + 0.1 * static_cast<double>(rng.below(3));
  cfg.seed = rng.next();
  return generate_model(cfg);
}

// Reference semantics for the three group modalities, written directly
// against subgroup enumeration rather than the cached machinery.  Bold
// belief uses the equivalent "some consistent subgroup settles the body"
// reading: every consistent subgroup extends to a maximal one with a
// smaller conjecture set.
bool naive_d(const BeliefModel& m, Group g, int w, WorldSet body) {
  return (m.group_conjecture_set(g, w) & ~body) == 0;
}

bool naive_db(const BeliefModel& m, Group g, int w, WorldSet body) {
  for (Group s : submasks_lex(g)) {
    WorldSet gcs = m.group_conjecture_set(s, w);
    if (gcs != 0 && (gcs & ~body) == 0) return true;
  }
  return false;
}

bool naive_dc(const BeliefModel& m, Group g, int w, WorldSet body) {
  // ccs from a from-scratch maximality scan.
  WorldSet ccs = 0;
  for (Group s : submasks_lex(g)) {
    if (m.group_conjecture_set(s, w) == 0) continue;
    bool maximal = true;
    for (Group t : submasks_lex(g))
      if (t != s && (s & t) == s && m.group_conjecture_set(t, w) != 0) maximal = false;
    if (maximal) ccs |= m.group_conjecture_set(s, w);
  }
  return (ccs & ~body) == 0;
}

}  // namespace

TEST_CASE("example model verdicts") {
  const Fixture& f = fixture("example");
  Evaluator ev(f.left);
  for (const TruthExpectation& t : f.truths) {
    CAPTURE(t.formula);
    CHECK(ev.eval(f.left.world_index(t.world), parse_formula(t.formula)) == t.expected);
  }
}

TEST_CASE("propositional connectives and constants") {
  BeliefModel m({"a"}, {"w", "u"}, {{"a", {{"w", "u"}}}}, {{"p", {"w"}}, {"q", {"w", "u"}}});
  Evaluator ev(m);
  CHECK(ev.extension(parse_formula("top")) == 0b11);
  CHECK(ev.extension(parse_formula("bot")) == 0);
  CHECK(ev.extension(parse_formula("p")) == 0b01);
  CHECK(ev.extension(parse_formula("unknown_atom")) == 0);
  CHECK(ev.extension(parse_formula("~p")) == 0b10);
  CHECK(ev.extension(parse_formula("p & q")) == 0b01);
  CHECK(ev.extension(parse_formula("p | ~q")) == 0b01);
  CHECK(ev.extension(parse_formula("p -> q")) == 0b11);
  CHECK(ev.extension(parse_formula("q -> p")) == 0b01);
  CHECK(ev.extension(parse_formula("p <-> q")) == 0b01);
  CHECK(ev.valid(parse_formula("q")));
  CHECK_FALSE(ev.valid(parse_formula("p")));
}

TEST_CASE("belief is universal over the conjecture set, vacuously on empty") {
  BeliefModel m({"a", "b"}, {"w", "u"}, {{"a", {{"w", "u"}}}}, {{"p", {"u"}}});
  Evaluator ev(m);
  CHECK(ev.eval(0, parse_formula("B{a}p")));
  CHECK_FALSE(ev.eval(0, parse_formula("B{a}~p")));
  // b has no successors anywhere: believes everything, even bot.
  CHECK(ev.valid(parse_formula("B{b}bot")));
  CHECK(ev.eval(0, parse_formula("D{a,b}bot")));
  CHECK(ev.eval(0, parse_formula("Inc{a,b}")));
  CHECK_FALSE(ev.eval(0, parse_formula("Inc{a}")));
  // With every member inconsistent, the MCS family is empty: cautious
  // belief holds vacuously, bold belief fails.
  CHECK(ev.eval(1, parse_formula("Inc{b}")));
  CHECK(ev.eval(1, parse_formula("DC{b}bot")));
  CHECK_FALSE(ev.eval(1, parse_formula("DB{b}top")));
}

TEST_CASE("group modalities match the subgroup-enumeration reference") {
  const std::vector<std::string> atoms = {"p", "q", "r"};
  Rng rng(515);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    BeliefModel m = sample_model(seed);
    Evaluator ev(m);
    for (int k = 0; k < 10; ++k) {
      FormulaPtr body = random_formula(rng, Lang::Full, 1, atoms, m.agents());
      WorldSet body_ext = ev.extension(body);
      for (Group g : submasks_lex(m.all_agents())) {
        std::vector<std::string> names;
        for (int a : mask_indices(g)) names.push_back(m.agent_name(a));
        WorldSet d = ev.extension(Formula::D(names, body));
        WorldSet dc = ev.extension(Formula::DC(names, body));
        WorldSet db = ev.extension(Formula::DB(names, body));
        WorldSet inc = ev.extension(Formula::Inc(names));
        for (int w = 0; w < m.world_count(); ++w) {
          CHECK(mask_has(d, w) == naive_d(m, g, w, body_ext));
          CHECK(mask_has(dc, w) == naive_dc(m, g, w, body_ext));
          CHECK(mask_has(db, w) == naive_db(m, g, w, body_ext));
          CHECK(mask_has(inc, w) == (m.group_conjecture_set(g, w) == 0));
        }
      }
    }
  }
}

TEST_CASE("individual belief is distributed belief of the singleton") {
  Rng rng(99);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    BeliefModel m = sample_model(seed);
    Evaluator ev(m);
    FormulaPtr body = random_formula(rng, Lang::Full, 1, {"p", "q"}, m.agents());
    for (const std::string& agent : m.agents())
      CHECK(ev.extension(Formula::B(agent, body)) ==
            ev.extension(Formula::D({agent}, body)));
  }
}

TEST_CASE("unknown agents are binding errors") {
  const BeliefModel& m = fixture("example").left;
  Evaluator ev(m);
  CHECK_THROWS_AS(ev.eval(0, parse_formula("B{z}p")), BindingError);
  CHECK_THROWS_AS(ev.extension(parse_formula("D{a,z}p")), BindingError);
  CHECK_THROWS_AS(ev.extension(parse_formula("Inc{z}")), BindingError);
}

TEST_CASE("free functions agree with the evaluator") {
  const BeliefModel& m = fixture("example").left;
  FormulaPtr f = parse_formula("DC{a,b,c}p & ~DC{a,b,c}q");
  Evaluator ev(m);
  CHECK(eval(m, 0, f) == ev.eval(0, f));
  CHECK(extension(m, f) == ev.extension(f));
  CHECK(valid_in_model(m, parse_formula("~DB{a,b}bot")));
}

TEST_CASE("trace lists subformulas innermost first and the point's MCS families") {
  const BeliefModel& m = fixture("example").left;
  FormulaPtr f = parse_formula("DC{a,b}p -> D{a,b,c}q");
  Trace t = trace_eval(m, m.world_index("w1"), f);
  REQUIRE(!t.extensions.empty());
  CHECK(t.extensions.back().formula == print(f));
  // Subformulas appear before the formulas containing them.
  bool seen_p = false, seen_dc = false;
  for (const TraceLine& line : t.extensions) {
    if (line.formula == "p") seen_p = true;
    if (line.formula == "DC{a,b}p") {
      CHECK(seen_p);
      seen_dc = true;
    }
  }
  CHECK(seen_dc);
  REQUIRE(t.mcs_at_point.size() == 2);  // {a,b} and {a,b,c}
  CHECK(t.verdict == eval(m, m.world_index("w1"), f));
  // The {a,b} family at w1 is {a}, {b}.
  for (const GroupTraceLine& line : t.mcs_at_point)
    if (line.group == "{a,b}")
      CHECK(line.subgroups == std::vector<std::string>({"{a}", "{b}"}));
}
