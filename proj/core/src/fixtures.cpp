#include "doxa/fixtures.hpp"

#include <stdexcept>

namespace doxa {

namespace {

using Rel = std::map<std::string, std::vector<std::pair<std::string, std::string>>>;
using Val = std::map<std::string, std::vector<std::string>>;

BeliefModel make(std::vector<std::string> agents, std::vector<std::string> worlds, Rel rel,
                 Val val = {}) {
  return BeliefModel(std::move(agents), std::move(worlds), std::move(rel), std::move(val));
}

// Four worlds, three agents; the running example.  Every individual relation
// is serial, transitive and euclidean.
Fixture example_fixture() {
  Fixture f("example",
            make({"a", "b", "c"}, {"w1", "w2", "w3", "w4"},
                 {{"a", {{"w1", "w2"}, {"w2", "w2"}, {"w3", "w3"}, {"w4", "w4"}}},
                  {"b", {{"w1", "w1"}, {"w1", "w3"}, {"w2", "w2"}, {"w3", "w3"}, {"w4", "w4"}}},
                  {"c", {{"w1", "w1"}, {"w1", "w4"}, {"w2", "w2"}, {"w3", "w3"}, {"w4", "w4"}}}},
                 {{"p", {"w1", "w2", "w4"}}, {"q", {"w1", "w3"}}}));
  f.points = {{"main", "w1"}};
  // Individual beliefs, then the three group notions for {a,b} and {a,b,c},
  // then the bold claims.  All hold at w1.
  for (const char* text : {
           "B{a}p & B{a}~q",
           "~B{b}p & ~B{b}~p",
           "B{b}q",
           "B{c}p",
           "~B{c}q & ~B{c}~q",
           "~DC{a,b}p & ~DC{a,b}q",
           "D{a,b}p & D{a,b}q",
           "D{a,b}bot",
           "DC{a,b,c}p & ~DC{a,b,c}q",
           "D{a,b,c}p & D{a,b,c}q & D{a,b,c}bot",
           "DB{a,b}p & DB{a,b}q",
           "DB{a,b}~q",
           "~DB{a,b}bot & ~DB{a,b}(q & ~q)",
           "DB{a,b,c}(p & q)",
       })
    f.truths.push_back({text, "w1", true});
  // Cautious belief is not monotone in the group: b alone accepts q, the
  // pair {a,b} does not.
  f.truths.push_back({"DC{b}q", "w1", true});
  f.truths.push_back({"DC{a,b}q", "w1", false});
  return f;
}

// Two models no cautious or bold formula can tell apart at (w, w'), although
// D{a,b}bot can: the pair {a,b} is consistent at w but inconsistent at w'.
Fixture bot_separation_fixture() {
  Fixture f("bot-separation",
            make({"a", "b"}, {"w", "u"},
                 {{"a", {{"w", "u"}, {"u", "u"}}}, {"b", {{"w", "u"}, {"u", "u"}}}},
                 {{"p", {"w"}}}));
  f.right = make({"a", "b"}, {"w'", "u'1", "u'2"},
                 {{"a", {{"w'", "u'1"}, {"u'1", "u'1"}, {"u'2", "u'2"}}},
                  {"b", {{"w'", "u'2"}, {"u'1", "u'1"}, {"u'2", "u'2"}}}},
                 {{"p", {"w'"}}});
  f.points = {{"main", "w"}};
  f.truths.push_back({"D{a,b}bot", "w", false});
  f.right_truths.push_back({"D{a,b}bot", "w'", true});
  for (BisimKind kind : {BisimKind::Cautious, BisimKind::BoldV2}) {
    f.bisims.push_back({kind, "w", "w'", true});
    f.bisims.push_back({kind, "u", "u'1", true});
    f.bisims.push_back({kind, "u", "u'2", true});
  }
  f.bisims.push_back({BisimKind::Collective, "w", "w'", false});
  f.bisims.push_back({BisimKind::Collective, "u", "u'1", true});
  f.bisims.push_back({BisimKind::Collective, "u", "u'2", true});
  return f;
}

// Two models no bold formula can tell apart at (w, w'), although DC{a,b}p
// can: only on the right does every maximal consistent subgroup accept p.
Fixture cautious_separation_fixture() {
  Fixture f("cautious-separation",
            make({"a", "b"}, {"w", "u1", "u2", "u3"},
                 {{"a", {{"w", "u1"}, {"w", "u2"}}}, {"b", {{"w", "u3"}}}},
                 {{"p", {"u2", "u3"}}}));
  f.right = make({"a", "b"}, {"w'", "u'1", "u'2", "u'3"},
                 {{"a", {{"w'", "u'1"}, {"w'", "u'2"}}}, {"b", {{"w'", "u'2"}, {"w'", "u'3"}}}},
                 {{"p", {"u'2", "u'3"}}});
  f.points = {{"main", "w"}};
  f.truths.push_back({"DC{a,b}p", "w", false});
  f.right_truths.push_back({"DC{a,b}p", "w'", true});
  f.bisims.push_back({BisimKind::BoldV2, "w", "w'", true});
  f.bisims.push_back({BisimKind::BoldV2, "u1", "u'1", true});
  f.bisims.push_back({BisimKind::BoldV2, "u2", "u'2", true});
  f.bisims.push_back({BisimKind::BoldV2, "u3", "u'2", true});
  f.bisims.push_back({BisimKind::BoldV2, "u3", "u'3", true});
  f.bisims.push_back({BisimKind::Cautious, "w", "w'", false});
  return f;
}

// Bold group belief breaks the K axiom: the group boldly believes p -> q and
// p, yet not q.
Fixture non_normal_group_fixture() {
  Fixture f("non-normal-group",
            make({"a", "b"}, {"w1", "w2", "w3"},
                 {{"a", {{"w1", "w2"}, {"w2", "w2"}, {"w3", "w3"}}},
                  {"b", {{"w1", "w3"}, {"w2", "w2"}, {"w3", "w3"}}}},
                 {{"p", {"w3"}}}));
  f.points = {{"main", "w1"}};
  f.truths.push_back({"DB{a,b}(p -> q)", "w1", true});
  f.truths.push_back({"DB{a,b}p", "w1", true});
  f.truths.push_back({"DB{a,b}q", "w1", false});
  return f;
}

// The dual of bold belief breaks K already for one agent.
Fixture non_normal_dual_fixture() {
  Fixture f("non-normal-dual",
            make({"a"}, {"w1", "w2", "w3"},
                 {{"a", {{"w1", "w2"}, {"w1", "w3"}, {"w2", "w2"}, {"w3", "w3"}}}},
                 {{"p", {"w3"}}}));
  f.points = {{"main", "w1"}};
  f.truths.push_back({"dDB{a}(p -> q)", "w1", true});
  f.truths.push_back({"dDB{a}p", "w1", true});
  f.truths.push_back({"dDB{a}q", "w1", false});
  return f;
}

// Bold group belief is not closed under conjunction: p via one maximal
// consistent subgroup, q via the other, p & q via neither.
Fixture conjunction_failure_fixture() {
  Fixture f("conjunction-failure",
            make({"a", "b"}, {"w1", "w2"},
                 {{"a", {{"w1", "w1"}, {"w2", "w2"}}}, {"b", {{"w1", "w2"}, {"w2", "w2"}}}},
                 {{"p", {"w1"}}, {"q", {"w2"}}}));
  f.points = {{"main", "w1"}};
  f.truths.push_back({"DB{a,b}p & DB{a,b}q", "w1", true});
  f.truths.push_back({"DB{a,b}(p & q)", "w1", false});
  return f;
}

Fixture cautious_frame(std::string id, std::vector<std::string> worlds, Rel rel,
                       std::set<RelCond> premise, RelCond violated,
                       std::vector<std::pair<std::string, std::string>> cautious_pairs) {
  Fixture f(std::move(id), make({"a", "b"}, std::move(worlds), std::move(rel)));
  f.preservation = PreservationExpectation{GroupNotion::Cautious, std::move(premise), {violated}, {}};
  f.cautious_relations.push_back({{"a", "b"}, std::move(cautious_pairs)});
  return f;
}

Fixture bold_frame(std::string id, std::vector<std::string> worlds, Rel rel,
                   std::set<RelCond> premise, std::vector<NbCond> violated) {
  Fixture f(std::move(id), make({"a", "b"}, std::move(worlds), std::move(rel)));
  f.preservation =
      PreservationExpectation{GroupNotion::Bold, std::move(premise), {}, std::move(violated)};
  return f;
}

std::vector<Fixture> build() {
  std::vector<Fixture> all;
  all.push_back(example_fixture());
  all.push_back(bot_separation_fixture());
  all.push_back(cautious_separation_fixture());
  all.push_back(non_normal_group_fixture());
  all.push_back(non_normal_dual_fixture());
  all.push_back(conjunction_failure_fixture());

  // Frames witnessing that transitivity, symmetry and euclidicity of the
  // members do not carry over to the cautious group relation.
  all.push_back(cautious_frame(
      "cautious-f1", {"w1", "w2", "w3"},
      {{"a", {{"w1", "w2"}, {"w2", "w2"}, {"w3", "w3"}}},
       {"b", {{"w1", "w1"}, {"w2", "w3"}, {"w3", "w3"}}}},
      {RelCond::Transitive, RelCond::Serial, RelCond::Euclidean}, RelCond::Transitive,
      {{"w1", "w1"}, {"w1", "w2"}, {"w2", "w2"}, {"w2", "w3"}, {"w3", "w3"}}));
  all.push_back(cautious_frame(
      "cautious-f2", {"w1", "w2"},
      {{"a", {{"w1", "w1"}, {"w1", "w2"}, {"w2", "w1"}, {"w2", "w2"}}}, {"b", {{"w2", "w2"}}}},
      {RelCond::Symmetric, RelCond::Transitive, RelCond::Euclidean}, RelCond::Symmetric,
      {{"w1", "w1"}, {"w1", "w2"}, {"w2", "w2"}}));
  all.push_back(cautious_frame(
      "cautious-f3", {"w1", "w2", "w3"},
      {{"a", {{"w1", "w2"}, {"w2", "w1"}, {"w2", "w2"}, {"w3", "w3"}}},
       {"b", {{"w1", "w3"}, {"w3", "w1"}, {"w2", "w2"}, {"w3", "w3"}}}},
      {RelCond::Symmetric, RelCond::Serial}, RelCond::Symmetric,
      {{"w1", "w2"}, {"w1", "w3"}, {"w2", "w2"}, {"w3", "w3"}}));
  all.push_back(cautious_frame(
      "cautious-f4", {"w1", "w2", "w3"},
      {{"a", {{"w1", "w2"}, {"w2", "w2"}, {"w3", "w3"}}},
       {"b", {{"w1", "w3"}, {"w2", "w2"}, {"w3", "w3"}}}},
      {RelCond::Euclidean, RelCond::Serial, RelCond::Transitive}, RelCond::Euclidean,
      {{"w1", "w2"}, {"w1", "w3"}, {"w2", "w2"}, {"w3", "w3"}}));
  all.push_back(cautious_frame(
      "cautious-f5", {"w1", "w2", "w3"},
      {{"a",
        {{"w1", "w1"},
         {"w1", "w2"},
         {"w1", "w3"},
         {"w2", "w1"},
         {"w2", "w2"},
         {"w2", "w3"},
         {"w3", "w1"},
         {"w3", "w2"},
         {"w3", "w3"}}},
       {"b", {{"w2", "w2"}}}},
      {RelCond::Euclidean, RelCond::Symmetric, RelCond::Transitive}, RelCond::Euclidean,
      {{"w1", "w1"},
       {"w1", "w2"},
       {"w1", "w3"},
       {"w2", "w2"},
       {"w3", "w1"},
       {"w3", "w2"},
       {"w3", "w3"}}));

  // Frames witnessing the failed neighbourhood conditions for the bold
  // group neighbourhood.
  all.push_back(bold_frame("bold-f1", {"w1", "w2"},
                           {{"a", {{"w1", "w2"}, {"w2", "w2"}}}, {"b", {{"w1", "w1"}, {"w2", "w2"}}}},
                           {RelCond::Serial, RelCond::Transitive, RelCond::Euclidean},
                           {NbCond::SerialN}));
  all.push_back(bold_frame("bold-f2", {"w1", "w2"},
                           {{"a", {{"w1", "w2"}, {"w2", "w1"}}}, {"b", {{"w1", "w1"}, {"w2", "w2"}}}},
                           {RelCond::Serial, RelCond::Symmetric}, {NbCond::SerialN}));
  all.push_back(bold_frame(
      "bold-f3", {"w1", "w2", "w3", "w4"},
      {{"a", {{"w1", "w2"}, {"w1", "w3"}, {"w2", "w3"}, {"w3", "w3"}, {"w4", "w4"}}},
       {"b", {{"w1", "w2"}, {"w1", "w4"}, {"w2", "w4"}, {"w3", "w3"}, {"w4", "w4"}}}},
      {RelCond::Serial, RelCond::Transitive}, {NbCond::TransitiveN}));
  all.push_back(bold_frame(
      "bold-f4", {"w1", "w2", "w3"},
      {{"a", {{"w1", "w2"}, {"w2", "w1"}, {"w2", "w2"}, {"w3", "w3"}}},
       {"b", {{"w1", "w3"}, {"w3", "w1"}, {"w2", "w2"}, {"w3", "w3"}}}},
      {RelCond::Serial, RelCond::Symmetric}, {NbCond::SymmetricN}));
  all.push_back(bold_frame(
      "bold-f5", {"w1", "w2", "w3"},
      {{"a", {{"w1", "w1"}, {"w1", "w2"}, {"w2", "w1"}, {"w2", "w2"}}},
       {"b", {{"w2", "w2"}, {"w2", "w3"}, {"w3", "w2"}, {"w3", "w3"}}}},
      {RelCond::Transitive, RelCond::Symmetric, RelCond::Euclidean},
      {NbCond::SymmetricN, NbCond::EuclideanN}));
  all.push_back(bold_frame(
      "bold-f6", {"w1", "w2", "w3", "w4"},
      {{"a", {{"w1", "w2"}, {"w2", "w2"}, {"w3", "w4"}, {"w4", "w4"}}},
       {"b", {{"w1", "w3"}, {"w3", "w3"}, {"w2", "w4"}, {"w4", "w4"}}}},
      {RelCond::Serial, RelCond::Transitive, RelCond::Euclidean}, {NbCond::EuclideanN}));
  return all;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(const std::string& id) {
  for (const Fixture& f : fixtures()) {
    if (f.id == id) return f;
  }
  throw std::out_of_range("no fixture named \"" + id + "\"");
}

}  // namespace doxa
