#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "affine/formula.hpp"
#include "affine/structure.hpp"

namespace affine::fo {

/// Model checker over one fixed structure. Caches survive across eval()
/// calls, so reuse one Evaluator when checking many formulas/assignments on
/// the same structure (shared subformula nodes then pay for themselves).
///
/// Beyond plain Tarskian recursion the evaluator:
///  - flattens conjunctions under a quantifier and evaluates conjuncts not
///    mentioning the bound variable before enumerating candidates;
///  - caches, per formula node, the satisfier set of any conjunct whose only
///    free variable is the bound one, and enumerates candidates from the
///    intersection of such sets instead of the whole universe;
///  - memoizes node results keyed by the values of the node's free variables;
///  - evaluates A x. p as ~E x. ~p with a cached negation-normal-form copy,
///    so universal clauses benefit from the same conjunct scheduling.
/// Caching is bypassed inside set-quantifier scopes (universes there are
/// capped at 16 elements, so brute force is fine).
class Evaluator {
 public:
  explicit Evaluator(const FiniteStructure& m) : m_(m) {}

  bool eval(const FormulaPtr& f);  // sentence
  bool eval(const FormulaPtr& f, const std::map<std::string, int>& env);

  /// All elements e with eval true under env extended by var=e.
  std::vector<int> satisfiers(const FormulaPtr& f, const std::string& var,
                              const std::map<std::string, int>& env = {});

 private:
  struct Env {
    std::vector<std::pair<std::string, int>> vars;  // innermost last
    std::map<std::string, unsigned long> set_bits;  // quantified set vars
    const int* lookup(const std::string& name) const {
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        if (it->first == name) return &it->second;
      return nullptr;
    }
  };

  bool node(const Formula* f, Env& env);
  bool quant(const Formula* f, Env& env);
  bool set_quant(const Formula* f, Env& env);
  bool atom(const Formula* f, Env& env);
  int resolve(const std::string& name, const Env& env) const;

  const std::vector<std::string>& freev(const Formula* f);
  bool has_quant(const Formula* f);
  const Formula* negated(const Formula* f);
  const std::vector<bool>& sat_set(const Formula* f, const std::string& var);

  const FiniteStructure& m_;
  // every evaluated root is retained: caches key on node addresses, which
  // must not be recycled while this evaluator lives
  std::vector<FormulaPtr> roots_;
  std::unordered_map<const Formula*, std::vector<std::string>> freev_cache_;
  std::unordered_map<const Formula*, bool> quant_cache_;
  std::unordered_map<const Formula*, FormulaPtr> neg_cache_;
  std::unordered_map<const Formula*, std::vector<bool>> sat_cache_;
  std::unordered_map<const Formula*, std::map<std::vector<int>, bool>> memo_;
};

/// One-shot convenience wrapper.
bool eval(const FiniteStructure& m, const FormulaPtr& f,
          const std::map<std::string, int>& env = {});

}  // namespace affine::fo
