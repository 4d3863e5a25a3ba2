#include "affine/eval.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace affine::fo {

namespace {

bool is_element_quantifier(Kind k) {
  return k == Kind::Exists || k == Kind::Forall || k == Kind::CountExists;
}

void flatten_and(const Formula* f, std::vector<const Formula*>& out) {
  if (f->kind == Kind::And) {
    flatten_and(f->left.get(), out);
    flatten_and(f->right.get(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

const std::vector<std::string>& Evaluator::freev(const Formula* f) {
  auto it = freev_cache_.find(f);
  if (it != freev_cache_.end()) return it->second;
  std::set<std::string> s;
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      for (const auto& a : f->args)
        if (!m_.constants.count(a)) s.insert(a);
      break;
    case Kind::Not:
      for (const auto& v : freev(f->child.get())) s.insert(v);
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      for (const auto& v : freev(f->left.get())) s.insert(v);
      for (const auto& v : freev(f->right.get())) s.insert(v);
      break;
    default:
      for (const auto& v : freev(f->child.get())) s.insert(v);
      if (is_element_quantifier(f->kind)) s.erase(f->name);
  }
  return freev_cache_[f] = std::vector<std::string>(s.begin(), s.end());
}

bool Evaluator::has_quant(const Formula* f) {
  auto it = quant_cache_.find(f);
  if (it != quant_cache_.end()) return it->second;
  bool r;
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      r = false;
      break;
    case Kind::Not:
      r = has_quant(f->child.get());
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      r = has_quant(f->left.get()) || has_quant(f->right.get());
      break;
    default:
      r = true;
  }
  return quant_cache_[f] = r;
}

int Evaluator::resolve(const std::string& name, const Env& env) const {
  if (const int* v = env.lookup(name)) return *v;
  auto it = m_.constants.find(name);
  if (it != m_.constants.end()) return it->second;
  throw std::runtime_error("eval: unbound variable '" + name + "'");
}

bool Evaluator::atom(const Formula* f, Env& env) {
  if (f->kind == Kind::Eq)
    return resolve(f->args[0], env) == resolve(f->args[1], env);
  // set membership: a quantified set variable or a structure-level set
  auto sb = env.set_bits.find(f->name);
  if (sb != env.set_bits.end()) {
    if (f->args.size() != 1)
      throw std::runtime_error("eval: set symbol '" + f->name + "' needs one argument");
    return (sb->second >> resolve(f->args[0], env)) & 1u;
  }
  if (!m_.has_relation(f->name)) {
    auto st = m_.sets.find(f->name);
    if (st != m_.sets.end()) {
      if (f->args.size() != 1)
        throw std::runtime_error("eval: set symbol '" + f->name + "' needs one argument");
      return st->second.count(resolve(f->args[0], env)) != 0;
    }
  }
  std::vector<int> tuple;
  tuple.reserve(f->args.size());
  for (const auto& a : f->args) tuple.push_back(resolve(a, env));
  return m_.holds(f->name, tuple);
}

const Formula* Evaluator::negated(const Formula* f) {
  auto it = neg_cache_.find(f);
  if (it == neg_cache_.end())
    it = neg_cache_.emplace(f, negate_nnf(f->child)).first;
  return it->second.get();
}

const std::vector<bool>& Evaluator::sat_set(const Formula* f, const std::string& var) {
  auto it = sat_cache_.find(f);
  if (it != sat_cache_.end()) return it->second;
  std::vector<bool> bits(m_.universe.size());
  Env local;
  local.vars.emplace_back(var, 0);
  for (int e = 0; e < m_.size(); ++e) {
    local.vars.back().second = e;
    bits[e] = node(f, local);
  }
  return sat_cache_[f] = std::move(bits);
}

bool Evaluator::quant(const Formula* f, Env& env) {
  // A x. p  ==  ~E x. ~p, with the negation cached in normal form so its
  // conjuncts stay schedulable
  bool negate_result = false;
  const std::string& var = f->name;
  const Formula* body;
  if (f->kind == Kind::Forall) {
    negate_result = true;
    body = negated(f);
  } else {
    body = f->child.get();
  }
  const bool counting = f->kind == Kind::CountExists;
  const bool cache_ok = env.set_bits.empty();

  std::vector<const Formula*> conjuncts;
  flatten_and(body, conjuncts);

  if (counting) {
    std::vector<const Formula*> restrictors, others;
    for (const Formula* c : conjuncts) {
      const auto& fv = freev(c);
      bool mentions = std::binary_search(fv.begin(), fv.end(), var);
      if (!mentions) {
        // hoisted conjunct: independent of the bound variable
        if (!node(c, env)) return f->count == 0;
        continue;
      }
      if (cache_ok && fv.size() == 1)
        restrictors.push_back(c);
      else
        others.push_back(c);
    }
    std::vector<const std::vector<bool>*> sets;
    for (const Formula* c : restrictors) sets.push_back(&sat_set(c, var));
    long count = 0;
    env.vars.emplace_back(var, 0);
    for (int e = 0; e < m_.size() && count <= f->count; ++e) {
      bool ok = true;
      for (const auto* s : sets)
        if (!(*s)[e]) { ok = false; break; }
      if (!ok) continue;
      env.vars.back().second = e;
      for (const Formula* c : others)
        if (!node(c, env)) { ok = false; break; }
      if (ok) ++count;
    }
    env.vars.pop_back();
    return count == f->count;
  }

  // merge a nested existential prefix (E x. E y. ... p) so every conjunct of
  // the innermost body is scheduled at the level of its last bound variable;
  // otherwise an inner quantifier node hides the outer variable's restrictors
  // and forces a full-universe scan
  std::vector<std::string> vars{var};
  while (conjuncts.size() == 1 && conjuncts[0]->kind == Kind::Exists &&
         std::find(vars.begin(), vars.end(), conjuncts[0]->name) == vars.end()) {
    const Formula* inner = conjuncts[0];
    vars.push_back(inner->name);
    conjuncts.clear();
    flatten_and(inner->child.get(), conjuncts);
  }

  struct Level {
    std::vector<const std::vector<bool>*> sets;
    std::vector<const Formula*> checks;
  };
  std::vector<Level> levels(vars.size());
  for (const Formula* c : conjuncts) {
    const auto& fv = freev(c);
    int last = -1;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (std::binary_search(fv.begin(), fv.end(), vars[i]))
        last = static_cast<int>(i);
    if (last < 0) {
      // hoisted conjunct: independent of all bound variables
      if (!node(c, env)) return negate_result;
      continue;
    }
    if (cache_ok && fv.size() == 1 && fv[0] == vars[last])
      levels[last].sets.push_back(&sat_set(c, vars[last]));
    else
      levels[last].checks.push_back(c);
  }

  std::function<bool(std::size_t)> descend = [&](std::size_t d) -> bool {
    env.vars.emplace_back(vars[d], 0);
    bool found = false;
    for (int e = 0; e < m_.size() && !found; ++e) {
      bool ok = true;
      for (const auto* s : levels[d].sets)
        if (!(*s)[e]) { ok = false; break; }
      if (!ok) continue;
      env.vars.back().second = e;
      for (const Formula* c : levels[d].checks)
        if (!node(c, env)) { ok = false; break; }
      if (!ok) continue;
      found = d + 1 == vars.size() || descend(d + 1);
    }
    env.vars.pop_back();
    return found;
  };
  bool result = descend(0);
  if (negate_result) result = !result;
  return result;
}

bool Evaluator::set_quant(const Formula* f, Env& env) {
  if (m_.size() > 16)
    throw std::runtime_error(
        "eval: set quantifier over a universe larger than 16 elements");
  // weak and strong set quantifiers coincide here: every subset of a finite
  // universe is finite
  const bool want_exists =
      f->kind == Kind::SetExists || f->kind == Kind::SetExistsWeak;
  const unsigned long total = 1ul << m_.size();
  auto prev = env.set_bits.find(f->name);
  std::optional<unsigned long> saved;
  if (prev != env.set_bits.end()) saved = prev->second;
  bool result = !want_exists;
  for (unsigned long bits = 0; bits < total; ++bits) {
    env.set_bits[f->name] = bits;
    bool v = node(f->child.get(), env);
    if (want_exists && v) { result = true; break; }
    if (!want_exists && !v) { result = false; break; }
  }
  if (saved)
    env.set_bits[f->name] = *saved;
  else
    env.set_bits.erase(f->name);
  return result;
}

bool Evaluator::node(const Formula* f, Env& env) {
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      return atom(f, env);
    default:
      break;
  }
  // memoize by the values of the node's free variables; skipped inside
  // set-quantifier scopes, whose bindings the key cannot see, and for
  // quantifier-free nodes, which are cheaper to recompute than to key (and
  // whose enumeration-fresh keys would bloat the tables)
  std::vector<int>* key_slot = nullptr;
  std::vector<int> key;
  if (env.set_bits.empty() && has_quant(f)) {
    const auto& fv = freev(f);
    if (fv.size() <= 4) {
      bool ok = true;
      key.reserve(fv.size());
      for (const auto& v : fv) {
        if (const int* e = env.lookup(v)) {
          key.push_back(*e);
        } else if (auto it = m_.constants.find(v); it != m_.constants.end()) {
          key.push_back(it->second);
        } else {
          ok = false;
          break;
        }
      }
      if (ok) {
        auto& slot = memo_[f];
        auto it = slot.find(key);
        if (it != slot.end()) return it->second;
        key_slot = &key;
      }
    }
  }
  bool r;
  switch (f->kind) {
    case Kind::Not:
      r = !node(f->child.get(), env);
      break;
    case Kind::And:
      r = node(f->left.get(), env) && node(f->right.get(), env);
      break;
    case Kind::Or:
      r = node(f->left.get(), env) || node(f->right.get(), env);
      break;
    case Kind::Implies:
      r = !node(f->left.get(), env) || node(f->right.get(), env);
      break;
    case Kind::Exists:
    case Kind::Forall:
    case Kind::CountExists:
      r = quant(f, env);
      break;
    default:
      r = set_quant(f, env);
      break;
  }
  if (key_slot) memo_[f][*key_slot] = r;
  return r;
}

bool Evaluator::eval(const FormulaPtr& f) { return eval(f, {}); }

bool Evaluator::eval(const FormulaPtr& f, const std::map<std::string, int>& env) {
  roots_.push_back(f);
  Env e;
  for (const auto& [k, v] : env) {
    if (v < 0 || v >= m_.size())
      throw std::runtime_error("eval: assignment out of universe");
    e.vars.emplace_back(k, v);
  }
  return node(f.get(), e);
}

std::vector<int> Evaluator::satisfiers(const FormulaPtr& f, const std::string& var,
                                       const std::map<std::string, int>& env) {
  std::vector<int> out;
  std::map<std::string, int> e = env;
  for (int i = 0; i < m_.size(); ++i) {
    e[var] = i;
    if (eval(f, e)) out.push_back(i);
  }
  return out;
}

bool eval(const FiniteStructure& m, const FormulaPtr& f,
          const std::map<std::string, int>& env) {
  return Evaluator(m).eval(f, env);
}

}  // namespace affine::fo
