#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace affine::fo {

struct Vocabulary;

enum class Kind {
  App,       // R(x,...) — also covers set membership X(x)
  Eq,        // x = y
  Not,
  And,
  Or,
  Implies,
  Exists,
  Forall,
  CountExists,   // E=N x. body
  SetExists,     // strong
  SetForall,
  SetExistsWeak,
  SetForallWeak,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node. Which fields are live depends on kind:
///   App: name (relation/set symbol) + args (variable or constant names)
///   Eq: args[0], args[1]
///   Not: child
///   And/Or/Implies: left, right
///   quantifiers: name (bound variable), child (body); CountExists also count
struct Formula {
  Kind kind;
  std::string name;
  std::vector<std::string> args;
  long count = 0;
  FormulaPtr child;
  FormulaPtr left, right;
};

// ---- builders ----
FormulaPtr app(std::string name, std::vector<std::string> args);
FormulaPtr eq(std::string a, std::string b);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
/// Left-folded conjunction; empty list is not allowed.
FormulaPtr mk_and(std::vector<FormulaPtr> fs);
FormulaPtr mk_or(std::vector<FormulaPtr> fs);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr count_exists(long n, std::string var, FormulaPtr body);
FormulaPtr quantifier(Kind k, std::string var, FormulaPtr body, long count = 0);

/// Canonical text form; parse(print(f)) reproduces f node for node.
std::string print(const FormulaPtr& f);

/// Structural equality.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

/// Free variables, treating every identifier in atom argument position as a
/// variable. The vocabulary-aware overload drops constant symbols.
std::set<std::string> free_vars(const FormulaPtr& f);
std::set<std::string> free_vars(const FormulaPtr& f, const Vocabulary& v);

/// Free set symbols: names of App atoms bound by no enclosing set quantifier.
/// Includes ordinary relation symbols; callers filter against a vocabulary.
std::set<std::string> free_set_symbols(const FormulaPtr& f);

/// Simultaneous capture-avoiding substitution of element variables/constants
/// in atom argument positions. Bound variables are renamed with prime
/// suffixes when a replacement would be captured.
FormulaPtr substitute(const FormulaPtr& f,
                      const std::vector<std::pair<std::string, std::string>>& subst);

/// Renames a relation/set symbol everywhere (atom heads and set-quantifier
/// binders); does not touch element variables.
FormulaPtr rename_symbol(const FormulaPtr& f, const std::string& from,
                         const std::string& to);

/// Negation normal form of ~f: negation pushed to atoms (counting
/// quantifiers keep an outer ~, which cannot be pushed through).
FormulaPtr negate_nnf(const FormulaPtr& f);

/// Rewrites every counting quantifier into pure FO with equality:
/// E=0 x. p  ->  A x. ~p;   E=N x. p  ->  N pairwise-distinct witnesses
/// plus a universal closure.
FormulaPtr expand_counting(const FormulaPtr& f);

/// Replaces weak set quantifiers by strong ones guarded by `finite`, a
/// formula with one free set symbol `finite_set_symbol`:
///   ESW X. p  ->  ES X. (finite[X] & p)
///   ASW X. p  ->  AS X. (finite[X] -> p)
FormulaPtr weak_to_strong(const FormulaPtr& f, const FormulaPtr& finite,
                          const std::string& finite_set_symbol);

}  // namespace affine::fo
