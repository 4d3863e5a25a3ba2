#include "affine/parser.hpp"

#include <cctype>

namespace affine::fo {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  FormulaPtr run() {
    skip();
    FormulaPtr f = formula();
    skip();
    if (pos_ < s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_ - line_start_) + 1);
  }

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      skip();
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '>') {
      pos_ += 2;
      skip();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  std::string ident() {
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    std::string w = s_.substr(start, pos_ - start);
    skip();
    return w;
  }

  bool peek_ident(std::string& out) {
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) return false;
    std::size_t p = pos_;
    while (p < s_.size() && ident_char(s_[p])) ++p;
    out = s_.substr(pos_, p - pos_);
    return true;
  }

  static bool reserved(const std::string& w) {
    return w == "A" || w == "E" || w == "AS" || w == "ES" || w == "ASW" ||
           w == "ESW";
  }

  long number() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected count after 'E='");
    long n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      n = n * 10 + (s_[pos_++] - '0');
    skip();
    return n;
  }

  FormulaPtr formula() { return implies(); }

  FormulaPtr implies() {
    FormulaPtr l = disj();
    if (eat_arrow()) return mk_implies(std::move(l), implies());
    return l;
  }

  FormulaPtr disj() {
    FormulaPtr l = conj();
    while (eat('|')) l = mk_or(std::move(l), conj());
    return l;
  }

  FormulaPtr conj() {
    FormulaPtr l = unary();
    while (eat('&')) l = mk_and(std::move(l), unary());
    return l;
  }

  FormulaPtr bound_formula(Kind k, long count = 0) {
    std::string var = ident();
    if (reserved(var)) fail("reserved word '" + var + "' cannot be a variable");
    expect('.', "quantifier");
    return quantifier(k, std::move(var), formula(), count);
  }

  FormulaPtr unary() {
    if (eat('~')) return mk_not(unary());
    std::string w;
    if (peek_ident(w) && reserved(w)) {
      pos_ += w.size();
      if (w == "E" && pos_ < s_.size() && s_[pos_] == '=') {
        ++pos_;
        long n = number();
        return bound_formula(Kind::CountExists, n);
      }
      skip();
      if (w == "A") return bound_formula(Kind::Forall);
      if (w == "E") return bound_formula(Kind::Exists);
      if (w == "AS") return bound_formula(Kind::SetForall);
      if (w == "ES") return bound_formula(Kind::SetExists);
      if (w == "ASW") return bound_formula(Kind::SetForallWeak);
      return bound_formula(Kind::SetExistsWeak);
    }
    return atom();
  }

  FormulaPtr atom() {
    if (eat('(')) {
      FormulaPtr f = formula();
      expect(')', "parenthesized formula");
      return f;
    }
    std::string head = ident();
    if (eat('(')) {
      std::vector<std::string> args;
      args.push_back(arg_ident());
      while (eat(',')) args.push_back(arg_ident());
      expect(')', "atom");
      return app(std::move(head), std::move(args));
    }
    if (eat('=')) return eq(std::move(head), arg_ident());
    fail("expected '(' or '=' after identifier '" + head + "'");
  }

  std::string arg_ident() {
    std::string w = ident();
    if (reserved(w)) fail("reserved word '" + w + "' cannot be a term");
    return w;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
};

void check_vocab(const Formula* f, const Vocabulary& v,
                 std::set<std::string> bound_sets) {
  switch (f->kind) {
    case Kind::App: {
      if (bound_sets.count(f->name) || v.set_symbols.count(f->name)) {
        if (f->args.size() != 1)
          throw ParseError("set symbol '" + f->name + "' takes one argument", 0, 0);
      } else {
        auto it = v.relations.find(f->name);
        if (it == v.relations.end())
          throw ParseError("unknown symbol '" + f->name + "'", 0, 0);
        if (static_cast<std::size_t>(it->second) != f->args.size())
          throw ParseError("arity mismatch for '" + f->name + "'", 0, 0);
      }
      break;
    }
    case Kind::Eq:
      break;
    default:
      if (f->kind == Kind::SetExists || f->kind == Kind::SetForall ||
          f->kind == Kind::SetExistsWeak || f->kind == Kind::SetForallWeak)
        bound_sets.insert(f->name);
      if (f->child) check_vocab(f->child.get(), v, bound_sets);
      if (f->left) check_vocab(f->left.get(), v, bound_sets);
      if (f->right) check_vocab(f->right.get(), v, bound_sets);
  }
}

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).run(); }

FormulaPtr parse(const std::string& text, const Vocabulary& vocab) {
  FormulaPtr f = Parser(text).run();
  check_vocab(f.get(), vocab, {});
  return f;
}

}  // namespace affine::fo
