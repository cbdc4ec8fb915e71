#include "doxa/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace doxa {

namespace {

FormulaPtr make(Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

std::vector<std::string> canonical_group(std::vector<std::string> group) {
  if (group.empty()) throw std::invalid_argument("modal groups are non-empty");
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  return group;
}

}  // namespace

FormulaPtr Formula::Atom(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->atom = std::move(name);
  return f;
}

FormulaPtr Formula::Top() { return make(Kind::Top); }
FormulaPtr Formula::Bot() { return make(Kind::Bot); }

FormulaPtr Formula::Not(FormulaPtr f) {
  auto n = std::make_shared<Formula>();
  n->kind = Kind::Not;
  n->lhs = std::move(f);
  return n;
}

static FormulaPtr binary(Kind k, FormulaPtr a, FormulaPtr b) {
  auto n = std::make_shared<Formula>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

FormulaPtr Formula::And(FormulaPtr a, FormulaPtr b) { return binary(Kind::And, std::move(a), std::move(b)); }
FormulaPtr Formula::Or(FormulaPtr a, FormulaPtr b) { return binary(Kind::Or, std::move(a), std::move(b)); }
FormulaPtr Formula::Imp(FormulaPtr a, FormulaPtr b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
FormulaPtr Formula::Iff(FormulaPtr a, FormulaPtr b) { return binary(Kind::Iff, std::move(a), std::move(b)); }

FormulaPtr Formula::B(std::string agent, FormulaPtr body) {
  if (agent.empty()) throw std::invalid_argument("B wants a named agent");
  auto n = std::make_shared<Formula>();
  n->kind = Kind::B;
  n->agents = {std::move(agent)};
  n->lhs = std::move(body);
  return n;
}

static FormulaPtr modal(Kind k, std::vector<std::string> group, FormulaPtr body) {
  auto n = std::make_shared<Formula>();
  n->kind = k;
  n->agents = canonical_group(std::move(group));
  n->lhs = std::move(body);
  return n;
}

FormulaPtr Formula::D(std::vector<std::string> group, FormulaPtr body) { return modal(Kind::D, std::move(group), std::move(body)); }
FormulaPtr Formula::DC(std::vector<std::string> group, FormulaPtr body) { return modal(Kind::DC, std::move(group), std::move(body)); }
FormulaPtr Formula::DB(std::vector<std::string> group, FormulaPtr body) { return modal(Kind::DB, std::move(group), std::move(body)); }

FormulaPtr Formula::Inc(std::vector<std::string> group) {
  auto n = std::make_shared<Formula>();
  n->kind = Kind::Inc;
  n->agents = canonical_group(std::move(group));
  return n;
}

FormulaPtr fold_and(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return Formula::Top();
  FormulaPtr acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::And(acc, fs[i]);
  return acc;
}

FormulaPtr fold_or(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return Formula::Bot();
  FormulaPtr acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::Or(acc, fs[i]);
  return acc;
}

namespace {

// Binding strength, loosest first.  A node is parenthesized when printed in
// a slot that requires tighter binding than the node itself provides.
enum Level { kIff = 0, kImp = 1, kOr = 2, kAnd = 3, kUnary = 4 };

std::string group_text(const std::vector<std::string>& agents) {
  std::string out = "{";
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (i) out += ",";
    out += agents[i];
  }
  return out + "}";
}

void print_at(const FormulaPtr& f, int min_level, std::string& out) {
  switch (f->kind) {
    case Kind::Atom:
      out += f->atom;
      return;
    case Kind::Top:
      out += "top";
      return;
    case Kind::Bot:
      out += "bot";
      return;
    case Kind::Inc:
      out += "Inc" + group_text(f->agents);
      return;
    case Kind::Not:
      out += "~";
      print_at(f->lhs, kUnary, out);
      return;
    case Kind::B:
    case Kind::D:
    case Kind::DC:
    case Kind::DB: {
      const char* name = f->kind == Kind::B ? "B" : f->kind == Kind::D ? "D" : f->kind == Kind::DC ? "DC" : "DB";
      out += name;
      out += group_text(f->agents);
      print_at(f->lhs, kUnary, out);
      return;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
    case Kind::Iff: {
      int level;
      const char* op;
      int left_min, right_min;
      switch (f->kind) {
        case Kind::And: level = kAnd; op = " & "; left_min = kAnd; right_min = kUnary; break;
        case Kind::Or: level = kOr; op = " | "; left_min = kOr; right_min = kAnd; break;
        case Kind::Imp: level = kImp; op = " -> "; left_min = kOr; right_min = kImp; break;
        default: level = kIff; op = " <-> "; left_min = kIff; right_min = kImp; break;
      }
      bool parens = level < min_level;
      if (parens) out += "(";
      print_at(f->lhs, left_min, out);
      out += op;
      print_at(f->rhs, right_min, out);
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print(const FormulaPtr& f) {
  std::string out;
  print_at(f, kIff, out);
  return out;
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->atom != b->atom || a->agents != b->agents) return false;
  if ((a->lhs == nullptr) != (b->lhs == nullptr)) return false;
  if ((a->rhs == nullptr) != (b->rhs == nullptr)) return false;
  if (a->lhs && !structurally_equal(a->lhs, b->lhs)) return false;
  if (a->rhs && !structurally_equal(a->rhs, b->rhs)) return false;
  return true;
}

int node_count(const FormulaPtr& f) {
  int n = 1;
  if (f->lhs) n += node_count(f->lhs);
  if (f->rhs) n += node_count(f->rhs);
  return n;
}

int modal_depth(const FormulaPtr& f) {
  int sub = 0;
  if (f->lhs) sub = std::max(sub, modal_depth(f->lhs));
  if (f->rhs) sub = std::max(sub, modal_depth(f->rhs));
  switch (f->kind) {
    case Kind::B:
    case Kind::D:
    case Kind::DC:
    case Kind::DB:
    case Kind::Inc:
      return sub + 1;
    default:
      return sub;
  }
}

namespace {

// Bit 0: D-style modalities (B and D), bit 1: DC, bit 2: DB, bit 3: Inc.
unsigned modality_mask(const FormulaPtr& f) {
  unsigned m = 0;
  switch (f->kind) {
    case Kind::B:
    case Kind::D: m |= 1u; break;
    case Kind::DC: m |= 2u; break;
    case Kind::DB: m |= 4u; break;
    case Kind::Inc: m |= 8u; break;
    default: break;
  }
  if (f->lhs) m |= modality_mask(f->lhs);
  if (f->rhs) m |= modality_mask(f->rhs);
  return m;
}

unsigned lang_mask(Lang lang) {
  switch (lang) {
    case Lang::D: return 1u;
    case Lang::DCaut: return 2u;
    case Lang::DBold: return 4u;
    case Lang::DCautInc: return 2u | 8u;
    case Lang::DBoldInc: return 4u | 8u;
    case Lang::Full: return 1u | 2u | 4u | 8u;
  }
  return 0;
}

}  // namespace

Lang language_of(const FormulaPtr& f) {
  unsigned used = modality_mask(f);
  for (Lang lang : {Lang::D, Lang::DCaut, Lang::DBold, Lang::DCautInc, Lang::DBoldInc, Lang::Full})
    if ((used & ~lang_mask(lang)) == 0) return lang;
  return Lang::Full;
}

bool in_language(const FormulaPtr& f, Lang lang) {
  return (modality_mask(f) & ~lang_mask(lang)) == 0;
}

std::string lang_name(Lang lang) {
  switch (lang) {
    case Lang::D: return "L_D";
    case Lang::DCaut: return "L_DCaut";
    case Lang::DBold: return "L_DBold";
    case Lang::DCautInc: return "L_DCaut_Inc";
    case Lang::DBoldInc: return "L_DBold_Inc";
    case Lang::Full: return "L_full";
  }
  return "?";
}

bool lang_from_name(const std::string& name, Lang& out) {
  for (Lang lang : {Lang::D, Lang::DCaut, Lang::DBold, Lang::DCautInc, Lang::DBoldInc, Lang::Full}) {
    if (lang_name(lang) == name) {
      out = lang;
      return true;
    }
  }
  return false;
}

}  // namespace doxa
