#pragma once

#include <map>
#include <string>
#include <vector>

#include "affine/formula.hpp"
#include "affine/structure.hpp"

namespace affine::fo {

/// Uniform one-dimensional interpretation of a sigma-structure inside a
/// tau-structure: a domain formula with one free variable plus one defining
/// formula per sigma-relation.
struct InterpretationScheme {
  Vocabulary source;  // sigma (purely relational)
  Vocabulary target;  // tau
  std::string dom_var;
  FormulaPtr dom;
  struct RelDef {
    std::vector<std::string> params;  // free variables, in argument order
    FormulaPtr formula;
  };
  std::map<std::string, RelDef> rels;
};

/// Syntactic translation I: atoms become their defining formulas with
/// substituted arguments, equality and connectives pass through, E x. p
/// becomes E x. (dom(x) & I(p)) and A x. p becomes A x. (dom(x) -> I(p)).
/// Counting and set quantifiers are rejected; so are atoms the scheme does
/// not define.
FormulaPtr translate(const InterpretationScheme& scheme, const FormulaPtr& f);

/// The sigma-structure the scheme carves out of C: universe = elements
/// satisfying dom, relations = tuples of that universe satisfying the
/// defining formulas. Element ids are reused from C. The universe may come
/// out empty.
FiniteStructure induced_structure(const InterpretationScheme& scheme,
                                  const FiniteStructure& C);

/// True iff [C |= translate(scheme, f)] agrees with
/// [induced_structure(scheme, C) |= f], for a sentence f.
bool check_equivalence(const InterpretationScheme& scheme, const FormulaPtr& f,
                       const FiniteStructure& C);

}  // namespace affine::fo
