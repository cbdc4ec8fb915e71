#include "doxa/translate.hpp"

#include <cstdint>
#include <functional>

#include "doxa/model.hpp"

namespace doxa {

namespace {

// Subsets of a sorted name list, as name lists, lexicographically ordered.
// Positions in the sorted list are enumerated as bitmasks; position order
// equals name order, so mask order gives name order.
std::vector<std::string> names_of(const std::vector<std::string>& sorted, std::uint32_t mask) {
  std::vector<std::string> out;
  for (int i : mask_indices(mask)) out.push_back(sorted[i]);
  return out;
}

using ModalRewrite = std::function<FormulaPtr(const Formula&, FormulaPtr body)>;

FormulaPtr rewrite(const FormulaPtr& f, Lang source, const ModalRewrite& on_modal) {
  switch (f->kind) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot:
      return f;
    case Kind::Not:
      return Formula::Not(rewrite(f->lhs, source, on_modal));
    case Kind::And:
      return Formula::And(rewrite(f->lhs, source, on_modal), rewrite(f->rhs, source, on_modal));
    case Kind::Or:
      return Formula::Or(rewrite(f->lhs, source, on_modal), rewrite(f->rhs, source, on_modal));
    case Kind::Imp:
      return Formula::Imp(rewrite(f->lhs, source, on_modal), rewrite(f->rhs, source, on_modal));
    case Kind::Iff:
      return Formula::Iff(rewrite(f->lhs, source, on_modal), rewrite(f->rhs, source, on_modal));
    case Kind::B:
    case Kind::D:
    case Kind::DC:
    case Kind::DB:
      return on_modal(*f, rewrite(f->lhs, source, on_modal));
    case Kind::Inc:
      return on_modal(*f, nullptr);
  }
  throw TranslateError("unreachable formula kind");
}

void require_language(const FormulaPtr& f, Lang source, const char* op) {
  if (!in_language(f, source))
    throw TranslateError(std::string(op) + " expects a formula of " + lang_name(source));
}

}  // namespace

FormulaPtr cautious_to_d(const FormulaPtr& f) {
  require_language(f, Lang::DCaut, "cautious_to_d");
  return rewrite(f, Lang::DCaut, [](const Formula& node, FormulaPtr body) -> FormulaPtr {
    const auto& g = node.agents;
    std::uint32_t full = (1u << g.size()) - 1;
    std::vector<FormulaPtr> clauses;
    for (std::uint32_t sub : submasks_lex(full)) {
      std::vector<FormulaPtr> supersets_inconsistent;
      for (std::uint32_t super : submasks_lex(full))
        if (super != sub && (super & sub) == sub)
          supersets_inconsistent.push_back(Formula::D(names_of(g, super), Formula::Bot()));
      FormulaPtr guard = Formula::And(Formula::Not(Formula::D(names_of(g, sub), Formula::Bot())),
                                      fold_and(supersets_inconsistent));
      clauses.push_back(Formula::Imp(guard, Formula::D(names_of(g, sub), body)));
    }
    return fold_and(clauses);
  });
}

FormulaPtr bold_to_d(const FormulaPtr& f) {
  require_language(f, Lang::DBold, "bold_to_d");
  return rewrite(f, Lang::DBold, [](const Formula& node, FormulaPtr body) -> FormulaPtr {
    const auto& g = node.agents;
    std::uint32_t full = (1u << g.size()) - 1;
    std::vector<FormulaPtr> branches;
    for (std::uint32_t sub : submasks_lex(full)) {
      branches.push_back(Formula::And(Formula::Not(Formula::D(names_of(g, sub), Formula::Bot())),
                                      Formula::D(names_of(g, sub), body)));
    }
    return fold_or(branches);
  });
}

FormulaPtr d_to_cautious_inc(const FormulaPtr& f) {
  require_language(f, Lang::D, "d_to_cautious_inc");
  return rewrite(f, Lang::D, [](const Formula& node, FormulaPtr body) -> FormulaPtr {
    return Formula::Or(Formula::Inc(node.agents), Formula::DC(node.agents, body));
  });
}

FormulaPtr d_to_bold_inc(const FormulaPtr& f) {
  require_language(f, Lang::D, "d_to_bold_inc");
  return rewrite(f, Lang::D, [](const Formula& node, FormulaPtr body) -> FormulaPtr {
    return Formula::Or(Formula::Inc(node.agents), Formula::DB(node.agents, body));
  });
}

FormulaPtr bold_to_cautious(const FormulaPtr& f) {
  require_language(f, Lang::DBold, "bold_to_cautious");
  return rewrite(f, Lang::DBold, [](const Formula& node, FormulaPtr body) -> FormulaPtr {
    const auto& g = node.agents;
    std::uint32_t full = (1u << g.size()) - 1;
    std::vector<FormulaPtr> branches;
    for (std::uint32_t sub : submasks_lex(full)) {
      branches.push_back(Formula::And(Formula::DC(names_of(g, sub), body),
                                      Formula::Not(Formula::DC(names_of(g, sub), Formula::Bot()))));
    }
    return fold_or(branches);
  });
}

}  // namespace doxa
