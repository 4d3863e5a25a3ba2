#include "affine/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "affine/structure.hpp"

namespace affine::fo {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

bool is_quantifier(Kind k) {
  return k == Kind::Exists || k == Kind::Forall || k == Kind::CountExists ||
         k == Kind::SetExists || k == Kind::SetForall ||
         k == Kind::SetExistsWeak || k == Kind::SetForallWeak;
}

bool is_set_quantifier(Kind k) {
  return k == Kind::SetExists || k == Kind::SetForall ||
         k == Kind::SetExistsWeak || k == Kind::SetForallWeak;
}

bool is_element_quantifier(Kind k) {
  return k == Kind::Exists || k == Kind::Forall || k == Kind::CountExists;
}

}  // namespace

FormulaPtr app(std::string name, std::vector<std::string> args) {
  if (args.empty()) throw std::invalid_argument("app: relations have arity >= 1");
  Formula f;
  f.kind = Kind::App;
  f.name = std::move(name);
  f.args = std::move(args);
  return make(std::move(f));
}

FormulaPtr eq(std::string a, std::string b) {
  Formula f;
  f.kind = Kind::Eq;
  f.args = {std::move(a), std::move(b)};
  return make(std::move(f));
}

FormulaPtr mk_not(FormulaPtr c) {
  Formula f;
  f.kind = Kind::Not;
  f.child = std::move(c);
  return make(std::move(f));
}

namespace {
FormulaPtr binary(Kind k, FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = k;
  f.left = std::move(a);
  f.right = std::move(b);
  return make(std::move(f));
}
}  // namespace

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return binary(Kind::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return binary(Kind::Or, std::move(a), std::move(b)); }
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return binary(Kind::Implies, std::move(a), std::move(b));
}

FormulaPtr mk_and(std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw std::invalid_argument("mk_and: empty conjunction");
  FormulaPtr r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = mk_and(r, fs[i]);
  return r;
}

FormulaPtr mk_or(std::vector<FormulaPtr> fs) {
  if (fs.empty()) throw std::invalid_argument("mk_or: empty disjunction");
  FormulaPtr r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = mk_or(r, fs[i]);
  return r;
}

FormulaPtr quantifier(Kind k, std::string var, FormulaPtr body, long count) {
  if (!is_quantifier(k)) throw std::invalid_argument("quantifier: bad kind");
  if (k == Kind::CountExists && count < 0)
    throw std::invalid_argument("quantifier: negative count");
  Formula f;
  f.kind = k;
  f.name = std::move(var);
  f.count = count;
  f.child = std::move(body);
  return make(std::move(f));
}

FormulaPtr exists(std::string var, FormulaPtr body) {
  return quantifier(Kind::Exists, std::move(var), std::move(body));
}
FormulaPtr forall(std::string var, FormulaPtr body) {
  return quantifier(Kind::Forall, std::move(var), std::move(body));
}
FormulaPtr count_exists(long n, std::string var, FormulaPtr body) {
  return quantifier(Kind::CountExists, std::move(var), std::move(body), n);
}

namespace {

int prec(const Formula* f) {
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      return 5;
    case Kind::Not:
      return 4;
    case Kind::And:
      return 3;
    case Kind::Or:
      return 2;
    case Kind::Implies:
      return 1;
    default:
      return 0;  // quantifiers
  }
}

void print_rec(const Formula* f, int min_prec, std::string& out) {
  if (prec(f) < min_prec) {
    out += '(';
    print_rec(f, 0, out);
    out += ')';
    return;
  }
  switch (f->kind) {
    case Kind::App:
      out += f->name;
      out += '(';
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) out += ',';
        out += f->args[i];
      }
      out += ')';
      break;
    case Kind::Eq:
      out += f->args[0];
      out += " = ";
      out += f->args[1];
      break;
    case Kind::Not:
      out += '~';
      print_rec(f->child.get(), 4, out);
      break;
    case Kind::And:
      print_rec(f->left.get(), 3, out);
      out += " & ";
      print_rec(f->right.get(), 4, out);
      break;
    case Kind::Or:
      print_rec(f->left.get(), 2, out);
      out += " | ";
      print_rec(f->right.get(), 3, out);
      break;
    case Kind::Implies:
      print_rec(f->left.get(), 2, out);
      out += " -> ";
      print_rec(f->right.get(), 1, out);
      break;
    case Kind::Exists:
    case Kind::Forall:
    case Kind::CountExists:
    case Kind::SetExists:
    case Kind::SetForall:
    case Kind::SetExistsWeak:
    case Kind::SetForallWeak: {
      switch (f->kind) {
        case Kind::Exists: out += "E "; break;
        case Kind::Forall: out += "A "; break;
        case Kind::CountExists: out += "E=" + std::to_string(f->count) + " "; break;
        case Kind::SetExists: out += "ES "; break;
        case Kind::SetForall: out += "AS "; break;
        case Kind::SetExistsWeak: out += "ESW "; break;
        case Kind::SetForallWeak: out += "ASW "; break;
        default: break;
      }
      out += f->name;
      out += ". ";
      print_rec(f->child.get(), 0, out);
      break;
    }
  }
}

}  // namespace

std::string print(const FormulaPtr& f) {
  std::string out;
  print_rec(f.get(), 0, out);
  return out;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->args != b->args ||
      a->count != b->count)
    return false;
  if (!!a->child != !!b->child || !!a->left != !!b->left || !!a->right != !!b->right)
    return false;
  if (a->child && !equal(a->child, b->child)) return false;
  if (a->left && !equal(a->left, b->left)) return false;
  if (a->right && !equal(a->right, b->right)) return false;
  return true;
}

namespace {

void free_vars_rec(const Formula* f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      for (const auto& a : f->args)
        if (!bound.count(a)) out.insert(a);
      break;
    case Kind::Not:
      free_vars_rec(f->child.get(), bound, out);
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      free_vars_rec(f->left.get(), bound, out);
      free_vars_rec(f->right.get(), bound, out);
      break;
    default:
      if (is_element_quantifier(f->kind)) {
        bool fresh = bound.insert(f->name).second;
        free_vars_rec(f->child.get(), bound, out);
        if (fresh) bound.erase(f->name);
      } else {
        free_vars_rec(f->child.get(), bound, out);  // set binder: no element var
      }
  }
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f.get(), bound, out);
  return out;
}

std::set<std::string> free_vars(const FormulaPtr& f, const Vocabulary& v) {
  std::set<std::string> out = free_vars(f);
  for (const auto& c : v.constants) out.erase(c);
  return out;
}

namespace {

void free_sets_rec(const Formula* f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::App:
      if (!bound.count(f->name)) out.insert(f->name);
      break;
    case Kind::Eq:
      break;
    case Kind::Not:
      free_sets_rec(f->child.get(), bound, out);
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      free_sets_rec(f->left.get(), bound, out);
      free_sets_rec(f->right.get(), bound, out);
      break;
    default:
      if (is_set_quantifier(f->kind)) {
        bool fresh = bound.insert(f->name).second;
        free_sets_rec(f->child.get(), bound, out);
        if (fresh) bound.erase(f->name);
      } else {
        free_sets_rec(f->child.get(), bound, out);
      }
  }
}

}  // namespace

std::set<std::string> free_set_symbols(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_sets_rec(f.get(), bound, out);
  return out;
}

namespace {

using Subst = std::vector<std::pair<std::string, std::string>>;

const std::string* subst_lookup(const Subst& s, const std::string& k) {
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    if (it->first == k) return &it->second;
  return nullptr;
}

void collect_names(const Formula* f, std::set<std::string>& out) {
  for (const auto& a : f->args) out.insert(a);
  if (is_quantifier(f->kind)) out.insert(f->name);
  if (f->child) collect_names(f->child.get(), out);
  if (f->left) collect_names(f->left.get(), out);
  if (f->right) collect_names(f->right.get(), out);
}

FormulaPtr subst_rec(const FormulaPtr& fp, Subst& s,
                     std::set<std::string>& avoid) {
  const Formula* f = fp.get();
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq: {
      std::vector<std::string> args = f->args;
      bool changed = false;
      for (auto& a : args)
        if (const std::string* r = subst_lookup(s, a)) {
          if (*r != a) changed = true;
          a = *r;
        }
      if (!changed) return fp;
      return f->kind == Kind::App ? app(f->name, std::move(args))
                                  : eq(std::move(args[0]), std::move(args[1]));
    }
    case Kind::Not: {
      FormulaPtr c = subst_rec(f->child, s, avoid);
      return c.get() == f->child.get() ? fp : mk_not(std::move(c));
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      FormulaPtr l = subst_rec(f->left, s, avoid);
      FormulaPtr r = subst_rec(f->right, s, avoid);
      if (l.get() == f->left.get() && r.get() == f->right.get()) return fp;
      return binary(f->kind, std::move(l), std::move(r));
    }
    default: {
      if (is_set_quantifier(f->kind)) {
        FormulaPtr c = subst_rec(f->child, s, avoid);
        return c.get() == f->child.get()
                   ? fp
                   : quantifier(f->kind, f->name, std::move(c), f->count);
      }
      // element quantifier: shadow the bound variable; rename it if any
      // replacement value would be captured
      std::string bound = f->name;
      bool capture = false;
      for (const auto& [k, v] : s)
        if (k != bound && v == bound) capture = true;
      FormulaPtr body = f->child;
      if (capture) {
        std::string fresh = bound;
        do {
          fresh += '\'';
        } while (avoid.count(fresh) || subst_lookup(s, fresh));
        avoid.insert(fresh);
        Subst ren{{bound, fresh}};
        body = subst_rec(body, ren, avoid);
        bound = fresh;
      }
      s.emplace_back(bound, bound);  // shadow: the bound var maps to itself
      FormulaPtr c = subst_rec(body, s, avoid);
      s.pop_back();
      if (!capture && c.get() == f->child.get()) return fp;
      return quantifier(f->kind, bound, std::move(c), f->count);
    }
  }
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const Subst& subst) {
  if (subst.empty()) return f;
  std::set<std::string> avoid;
  collect_names(f.get(), avoid);
  for (const auto& [k, v] : subst) {
    avoid.insert(k);
    avoid.insert(v);
  }
  Subst s = subst;
  return subst_rec(f, s, avoid);
}

FormulaPtr rename_symbol(const FormulaPtr& fp, const std::string& from,
                         const std::string& to) {
  const Formula* f = fp.get();
  switch (f->kind) {
    case Kind::App:
      if (f->name == from) return app(to, f->args);
      return fp;
    case Kind::Eq:
      return fp;
    case Kind::Not: {
      FormulaPtr c = rename_symbol(f->child, from, to);
      return c.get() == f->child.get() ? fp : mk_not(std::move(c));
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      FormulaPtr l = rename_symbol(f->left, from, to);
      FormulaPtr r = rename_symbol(f->right, from, to);
      if (l.get() == f->left.get() && r.get() == f->right.get()) return fp;
      return binary(f->kind, std::move(l), std::move(r));
    }
    default: {
      if (is_set_quantifier(f->kind) && f->name == from)
        return fp;  // bound occurrences of `from` are a different symbol
      FormulaPtr c = rename_symbol(f->child, from, to);
      return c.get() == f->child.get()
                 ? fp
                 : quantifier(f->kind, f->name, std::move(c), f->count);
    }
  }
}

FormulaPtr negate_nnf(const FormulaPtr& fp) {
  const Formula* f = fp.get();
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      return mk_not(fp);
    case Kind::Not:
      return f->child;
    case Kind::And:
      return mk_or(negate_nnf(f->left), negate_nnf(f->right));
    case Kind::Or:
      return mk_and(negate_nnf(f->left), negate_nnf(f->right));
    case Kind::Implies:
      return mk_and(f->left, negate_nnf(f->right));
    case Kind::Exists:
      return quantifier(Kind::Forall, f->name, negate_nnf(f->child));
    case Kind::Forall:
      return quantifier(Kind::Exists, f->name, negate_nnf(f->child));
    case Kind::SetExists:
      return quantifier(Kind::SetForall, f->name, negate_nnf(f->child));
    case Kind::SetForall:
      return quantifier(Kind::SetExists, f->name, negate_nnf(f->child));
    case Kind::SetExistsWeak:
      return quantifier(Kind::SetForallWeak, f->name, negate_nnf(f->child));
    case Kind::SetForallWeak:
      return quantifier(Kind::SetExistsWeak, f->name, negate_nnf(f->child));
    case Kind::CountExists:
      return mk_not(fp);  // no NNF dual; kept as an outer negation
  }
  return mk_not(fp);
}

FormulaPtr expand_counting(const FormulaPtr& fp) {
  const Formula* f = fp.get();
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      return fp;
    case Kind::Not: {
      FormulaPtr c = expand_counting(f->child);
      return c.get() == f->child.get() ? fp : mk_not(std::move(c));
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      FormulaPtr l = expand_counting(f->left);
      FormulaPtr r = expand_counting(f->right);
      if (l.get() == f->left.get() && r.get() == f->right.get()) return fp;
      return binary(f->kind, std::move(l), std::move(r));
    }
    case Kind::CountExists: {
      FormulaPtr body = expand_counting(f->child);
      const std::string& x = f->name;
      long n = f->count;
      if (n == 0) return forall(x, negate_nnf(body));
      std::set<std::string> avoid;
      collect_names(body.get(), avoid);
      avoid.insert(x);
      auto fresh = [&avoid](std::string base) {
        while (avoid.count(base)) base += '\'';
        avoid.insert(base);
        return base;
      };
      std::vector<std::string> w;
      w.push_back(x);
      for (long i = 1; i < n; ++i) w.push_back(fresh(x + "'"));
      std::string y = fresh(x + "'");
      std::vector<FormulaPtr> conj;
      for (long i = 0; i < n; ++i)
        conj.push_back(i == 0 ? body : substitute(body, {{x, w[i]}}));
      for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) conj.push_back(mk_not(eq(w[i], w[j])));
      std::vector<FormulaPtr> one_of;
      for (long i = 0; i < n; ++i) one_of.push_back(eq(y, w[i]));
      conj.push_back(forall(y, mk_implies(substitute(body, {{x, y}}), mk_or(one_of))));
      FormulaPtr r = mk_and(conj);
      for (long i = n - 1; i >= 0; --i) r = exists(w[i], std::move(r));
      return r;
    }
    default: {
      FormulaPtr c = expand_counting(f->child);
      return c.get() == f->child.get()
                 ? fp
                 : quantifier(f->kind, f->name, std::move(c), f->count);
    }
  }
}

FormulaPtr weak_to_strong(const FormulaPtr& fp, const FormulaPtr& finite,
                          const std::string& finite_set_symbol) {
  const Formula* f = fp.get();
  switch (f->kind) {
    case Kind::App:
    case Kind::Eq:
      return fp;
    case Kind::Not: {
      FormulaPtr c = weak_to_strong(f->child, finite, finite_set_symbol);
      return c.get() == f->child.get() ? fp : mk_not(std::move(c));
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      FormulaPtr l = weak_to_strong(f->left, finite, finite_set_symbol);
      FormulaPtr r = weak_to_strong(f->right, finite, finite_set_symbol);
      if (l.get() == f->left.get() && r.get() == f->right.get()) return fp;
      return binary(f->kind, std::move(l), std::move(r));
    }
    case Kind::SetExistsWeak: {
      FormulaPtr body = weak_to_strong(f->child, finite, finite_set_symbol);
      FormulaPtr guard = rename_symbol(finite, finite_set_symbol, f->name);
      return quantifier(Kind::SetExists, f->name, mk_and(guard, std::move(body)));
    }
    case Kind::SetForallWeak: {
      FormulaPtr body = weak_to_strong(f->child, finite, finite_set_symbol);
      FormulaPtr guard = rename_symbol(finite, finite_set_symbol, f->name);
      return quantifier(Kind::SetForall, f->name,
                        mk_implies(guard, std::move(body)));
    }
    default: {
      FormulaPtr c = weak_to_strong(f->child, finite, finite_set_symbol);
      return c.get() == f->child.get()
                 ? fp
                 : quantifier(f->kind, f->name, std::move(c), f->count);
    }
  }
}

}  // namespace affine::fo
