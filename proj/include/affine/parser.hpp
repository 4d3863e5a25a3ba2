#pragma once

#include <stdexcept>
#include <string>

#include "affine/formula.hpp"
#include "affine/structure.hpp"

namespace affine::fo {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

/// Parses one formula in the canonical grammar:
///   quantifiers  A x. / E x. / E=<N> x. / AS X. / ES X. / ASW X. / ESW X.
///   connectives  ~  &  |  ->   (precedence ~ > & > | > ->, -> right-assoc)
///   atoms        R(x,y,...), X(x), x = y, parenthesized formulas
/// Quantifier bodies extend as far right as possible. `#` starts a comment
/// to end of line. A/E/AS/ES/ASW/ESW are reserved words.
FormulaPtr parse(const std::string& text);

/// Parse and additionally reject atoms/constants absent from the vocabulary
/// or used with the wrong arity.
FormulaPtr parse(const std::string& text, const Vocabulary& vocab);

}  // namespace affine::fo
