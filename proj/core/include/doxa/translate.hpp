#pragma once

#include <stdexcept>

#include "doxa/formula.hpp"

namespace doxa {

struct TranslateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntactic eliminations between the sublanguages.  Each walks the tree
// innermost-first, replaces every occurrence of the source modality by its
// defining Boolean combination, and leaves everything else untouched.  No
// simplification is performed, so outputs grow by design (one subgroup
// enumeration per modal layer; subgroups are emitted in lexicographic
// order of their sorted agent names).  A formula outside the declared
// source language throws TranslateError.

// DC{G}x  =>  AND over non-empty G' <= G of
//             (~D{G'}bot & AND over G' < H <= G of D{H}bot) -> D{G'}x
FormulaPtr cautious_to_d(const FormulaPtr& f);

// DB{G}x  =>  OR over non-empty G' <= G of (~D{G'}bot & D{G'}x)
FormulaPtr bold_to_d(const FormulaPtr& f);

// D{G}x  =>  Inc{G} | DC{G}x      (B{a}x treated as D over the singleton)
FormulaPtr d_to_cautious_inc(const FormulaPtr& f);

// D{G}x  =>  Inc{G} | DB{G}x
FormulaPtr d_to_bold_inc(const FormulaPtr& f);

// DB{G}x  =>  OR over non-empty G' <= G of (DC{G'}x & ~DC{G'}bot)
FormulaPtr bold_to_cautious(const FormulaPtr& f);

}  // namespace doxa
