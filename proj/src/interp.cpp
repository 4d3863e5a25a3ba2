#include "affine/interp.hpp"

#include <stdexcept>

#include "affine/eval.hpp"

namespace affine::fo {

namespace {

FormulaPtr dom_at(const InterpretationScheme& s, const std::string& var) {
  if (var == s.dom_var) return s.dom;
  return substitute(s.dom, {{s.dom_var, var}});
}

}  // namespace

FormulaPtr translate(const InterpretationScheme& s, const FormulaPtr& fp) {
  const Formula* f = fp.get();
  switch (f->kind) {
    case Kind::App: {
      auto it = s.rels.find(f->name);
      if (it == s.rels.end())
        throw std::invalid_argument("translate: no defining formula for '" +
                                    f->name + "'");
      const auto& [params, def] = it->second;
      if (params.size() != f->args.size())
        throw std::invalid_argument("translate: arity mismatch for '" + f->name + "'");
      std::vector<std::pair<std::string, std::string>> subst;
      for (std::size_t i = 0; i < params.size(); ++i)
        subst.emplace_back(params[i], f->args[i]);
      return substitute(def, subst);
    }
    case Kind::Eq:
      return fp;
    case Kind::Not:
      return mk_not(translate(s, f->child));
    case Kind::And:
      return mk_and(translate(s, f->left), translate(s, f->right));
    case Kind::Or:
      return mk_or(translate(s, f->left), translate(s, f->right));
    case Kind::Implies:
      return mk_implies(translate(s, f->left), translate(s, f->right));
    case Kind::Exists:
      return exists(f->name, mk_and(dom_at(s, f->name), translate(s, f->child)));
    case Kind::Forall:
      return forall(f->name, mk_implies(dom_at(s, f->name), translate(s, f->child)));
    default:
      throw std::invalid_argument(
          "translate: counting and set quantifiers are not interpretable");
  }
}

FiniteStructure induced_structure(const InterpretationScheme& s,
                                  const FiniteStructure& C) {
  Evaluator ev(C);
  FiniteStructure out;
  std::vector<int> dom = ev.satisfiers(s.dom, s.dom_var);
  for (int e : dom) out.add_element(C.universe[e]);

  for (const auto& [name, def] : s.rels) {
    auto& table = out.relations[name];
    const std::size_t k = def.params.size();
    std::vector<std::size_t> idx(k, 0);
    if (dom.empty()) continue;
    std::map<std::string, int> env;
    while (true) {
      for (std::size_t i = 0; i < k; ++i) env[def.params[i]] = dom[idx[i]];
      if (ev.eval(def.formula, env)) {
        std::vector<int> tuple;
        tuple.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
          tuple.push_back(out.element(C.universe[dom[idx[i]]]));
        table.insert(std::move(tuple));
      }
      std::size_t d = 0;
      while (d < k && ++idx[d] == dom.size()) idx[d++] = 0;
      if (d == k) break;
    }
  }
  return out;
}

bool check_equivalence(const InterpretationScheme& s, const FormulaPtr& f,
                       const FiniteStructure& C) {
  bool direct = eval(C, translate(s, f));
  bool induced = eval(induced_structure(s, C), f);
  return direct == induced;
}

}  // namespace affine::fo
