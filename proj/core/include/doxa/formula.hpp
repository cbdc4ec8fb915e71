#pragma once

#include <memory>
#include <string>
#include <vector>

namespace doxa {

// One node kind per primitive operator.  Duals (dB, dD, dDC, dDB) are
// surface syntax only; the parser expands them to Not(Op(..., Not(body)))
// and nothing ever re-sugars them.
enum class Kind {
  Atom,
  Top,
  Bot,
  Not,
  And,
  Or,
  Imp,
  Iff,
  B,    // individual belief, one agent
  D,    // distributed belief
  DC,   // cautious distributed belief
  DB,   // bold distributed belief
  Inc,  // group inconsistency constant (no body)
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable tree.  Group modalities store sorted, deduplicated agent names;
// binding names to a concrete model happens at evaluation time.
struct Formula {
  Kind kind;
  std::string atom;                 // Kind::Atom
  std::vector<std::string> agents;  // modal kinds; exactly one for B
  FormulaPtr lhs;                   // unary body or left operand
  FormulaPtr rhs;                   // right operand of binary connectives

  static FormulaPtr Atom(std::string name);
  static FormulaPtr Top();
  static FormulaPtr Bot();
  static FormulaPtr Not(FormulaPtr f);
  static FormulaPtr And(FormulaPtr a, FormulaPtr b);
  static FormulaPtr Or(FormulaPtr a, FormulaPtr b);
  static FormulaPtr Imp(FormulaPtr a, FormulaPtr b);
  static FormulaPtr Iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr B(std::string agent, FormulaPtr body);
  static FormulaPtr D(std::vector<std::string> group, FormulaPtr body);
  static FormulaPtr DC(std::vector<std::string> group, FormulaPtr body);
  static FormulaPtr DB(std::vector<std::string> group, FormulaPtr body);
  static FormulaPtr Inc(std::vector<std::string> group);
};

// Left folds; the empty conjunction is top and the empty disjunction bot.
FormulaPtr fold_and(const std::vector<FormulaPtr>& fs);
FormulaPtr fold_or(const std::vector<FormulaPtr>& fs);

std::string print(const FormulaPtr& f);
bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);
int node_count(const FormulaPtr& f);
int modal_depth(const FormulaPtr& f);

// The sublanguages, ordered from least expressive to full.  B counts as a
// D-modality (it is D over a singleton).
enum class Lang { D, DCaut, DBold, DCautInc, DBoldInc, Full };

// Smallest language whose modalities cover everything used in f; a purely
// Boolean formula lands in Lang::D.
Lang language_of(const FormulaPtr& f);
bool in_language(const FormulaPtr& f, Lang lang);
std::string lang_name(Lang lang);     // "L_D", "L_DCaut", ...
bool lang_from_name(const std::string& name, Lang& out);

}  // namespace doxa
